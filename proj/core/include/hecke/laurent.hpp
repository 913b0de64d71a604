// Coefficient ring for the Hecke algebra: integer Laurent polynomials in a
// formal variable t, with a distinguished power q = t^N. The integer N >= 1
// is the denominator bound of the height functional of the root datum the
// coefficient belongs to, so t^N ht(lambda) makes sense for every lambda in
// the coweight lattice. Arithmetic between coefficients attached to
// different N is rejected.

#pragma once

#include "hecke/common.hpp"

#include <utility>
#include <vector>

namespace hecke {

class LaurentT {
 public:
  // Zero with no N attached yet; adopts the N of the first nonzero operand
  // it is combined with.
  LaurentT() : n_(0) {}

  static LaurentT zero(long long N) { return LaurentT(N, {}); }
  static LaurentT one(long long N) { return t_pow(N, 0); }
  static LaurentT constant(long long N, Int c);
  // t^k
  static LaurentT t_pow(long long N, long long k);
  // q^k = t^(N k)
  static LaurentT q_pow(long long N, long long k);
  // c * q^k
  static LaurentT q_term(long long N, Int c, long long k);

  bool is_zero() const { return terms_.empty(); }
  // The attached N (0 for an unattached zero).
  long long n() const { return n_; }

  // Monomials as (t-exponent, coefficient), sorted by ascending exponent,
  // zero coefficients never stored.
  const std::vector<std::pair<long long, Int>>& terms() const {
    return terms_;
  }
  Int coeff_t(long long exp) const;

  LaurentT& operator+=(const LaurentT& o);
  LaurentT& operator-=(const LaurentT& o);
  LaurentT operator+(const LaurentT& o) const;
  LaurentT operator-(const LaurentT& o) const;
  LaurentT operator*(const LaurentT& o) const;
  LaurentT operator-() const;
  bool operator==(const LaurentT& o) const;
  bool operator!=(const LaurentT& o) const { return !(*this == o); }

  // True iff the element is +-t^k for some k; such elements are exactly the
  // units of Z[t, t^{-1}].
  bool is_unit() const;
  // Inverse of a unit +-t^k; throws NotAUnit otherwise.
  LaurentT inverted_unit() const;

  // True iff the element lies in the subring Z[q], i.e. every exponent is a
  // nonnegative multiple of N.
  bool is_in_Zq() const;

  // Substitute a rational value for t (exact arithmetic).
  Rat eval_at_t(const Rat& t) const;
  // Substitute a rational value for q; requires is_in_Zq()-style exponents
  // (all exponents divisible by N, negative q-powers allowed).
  Rat eval_at_q(const Rat& q) const;

  // Largest and smallest t-exponents; throws ZeroElement on zero.
  long long deg_t() const;
  long long low_t() const;
  // Degree as a polynomial in q; throws NonIntegralExponent when some
  // exponent is not divisible by N.
  long long deg_q() const;

  // Human-readable form, written in q where possible and in t otherwise.
  std::string str() const;

 private:
  LaurentT(long long N, std::vector<std::pair<long long, Int>> terms)
      : n_(N), terms_(std::move(terms)) {}

  // Reconcile the N of two operands; throws MixedN when both are attached
  // and disagree.
  static long long merge_n(const LaurentT& a, const LaurentT& b);
  // Merge-add sign * o into *this, both sides sorted.
  void merge_add(const LaurentT& o, int sign);

  long long n_;
  std::vector<std::pair<long long, Int>> terms_;  // sorted by t-exponent
};

}  // namespace hecke
