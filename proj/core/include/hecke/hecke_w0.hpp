// The Iwahori-Hecke algebra H of the Weyl group over Z[t, t^{-1}] with
// q = t^N: free module on basis {T_w} with T_i T_w = T_{r_i w} when the
// length goes up and T_i T_w = (q-1) T_w + q T_{r_i w} when it goes down
// (and symmetrically on the right). Each T_i is invertible with
// T_i^{-1} = q^{-1} T_i - (1 - q^{-1}) T_1, and more generally
// q^{l(w)} T_w^{-1} = sum_{u <= w} a_{u,w}(q) T_u with a_{u,w} a
// Z[q]-polynomial of degree l(w) - l(u) supported on the Bruhat interval.

#pragma once

#include "hecke/weyl.hpp"

#include <map>

namespace hecke {

// A finitely supported Z[t,t^{-1}]-linear combination of basis elements
// T_w. Plain value type; all algebra operations live on HeckeOps.
class HWElt {
 public:
  HWElt() = default;

  static HWElt term(const WeylElt& w, LaurentT c);

  bool is_zero() const { return c_.empty(); }
  const std::map<WeylElt, LaurentT>& terms() const { return c_; }
  LaurentT coeff(const WeylElt& w) const;

  HWElt& operator+=(const HWElt& o);
  HWElt& operator-=(const HWElt& o);
  HWElt operator+(const HWElt& o) const;
  HWElt operator-(const HWElt& o) const;
  HWElt operator-() const;
  HWElt scaled(const LaurentT& c) const;
  bool operator==(const HWElt& o) const { return c_ == o.c_; }
  bool operator!=(const HWElt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  friend class HeckeOps;
  void add_term(const WeylElt& w, const LaurentT& c);

  std::map<WeylElt, LaurentT> c_;
};

class HeckeOps {
 public:
  explicit HeckeOps(const WeylOps& weyl);

  const WeylOps& weyl() const { return w_; }
  const RootDatum& datum() const { return w_.datum(); }

  HWElt one() const;
  HWElt basis(const WeylElt& w) const;

  // T_i^{+-1} * h and h * T_i^{+-1}; sign is +1 or -1.
  HWElt mul_gen_left(int i, int sign, const HWElt& h) const;
  HWElt mul_gen_right(const HWElt& h, int i, int sign) const;

  HWElt mul(const HWElt& a, const HWElt& b) const;

  // The inverse-expansion polynomials: a_polys_for(w) returns the family
  // of coefficients of q^{l(w)} T_w^{-1} = sum_u a_u(q) T_u, supported
  // exactly on the Bruhat interval [1, w^{-1}] (inverting a product
  // reverses its reduced words). Each a_u lies in Z[q] with
  // deg a_u = l(w) - l(u), so in particular a_u != 0 on the interval.
  // Built letterwise: q^{l(w)} T_w^{-1} is the ordered product
  // (T_{i_k} - (q-1)) ... (T_{i_1} - (q-1)) over a reduced word
  // w = r_{i_1} ... r_{i_k}.
  std::map<WeylElt, LaurentT> a_polys_for(const WeylElt& w) const;
  LaurentT a_poly(const WeylElt& u, const WeylElt& w) const;

  // T_w^{-1} as an element of H.
  HWElt t_inverse(const WeylElt& w) const;

  // max{ l(w) : w in supp(h) }; throws ZeroElement on zero.
  long long elt_length(const HWElt& h) const;

 private:
  const WeylOps& w_;
};

}  // namespace hecke
