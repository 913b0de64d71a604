// The Hecke algebra of the full Kac-Moody datum in its Bernstein-Lusztig
// presentation: elements are finite sums sum c_{w,lambda} T_w Z^lambda with
// w in the Weyl group and lambda in the coweight lattice, subject to
//   T_i T_i = (q-1) T_i + q,   Z^lambda Z^mu = Z^{lambda+mu},
//   Z^lambda T_i = T_i Z^{r_i lambda} + (q-1) P_i(lambda),
// where P_i(lambda) is the signed sum of Z^mu over the alpha_i-string
// segment between lambda and r_i lambda (endpoint conventions below). On
// top of the normal form this module builds the translation basis elements
// T_{lambda.w}, the triangular basis conversions in both directions, and
// the coefficientwise anti-involution.

#pragma once

#include "hecke/hecke_w0.hpp"

#include <map>

namespace hecke {

struct BLKey {
  Coweight z;
  WeylElt w;

  bool operator==(const BLKey& o) const { return z == o.z && w == o.w; }
  bool operator<(const BLKey& o) const {
    if (z != o.z) return z < o.z;
    return w < o.w;
  }
};

// A finitely supported coefficient map on pairs (lambda, w). Used both for
// normal forms (meaning sum c T_w Z^lambda) and for translation-basis
// expansions (meaning sum c T_{lambda.w}); the surrounding operation fixes
// the reading.
class BLElt {
 public:
  BLElt() = default;

  static BLElt term(const WeylElt& w, const Coweight& z, LaurentT c);

  bool is_zero() const { return c_.empty(); }
  const std::map<BLKey, LaurentT>& terms() const { return c_; }
  LaurentT coeff(const WeylElt& w, const Coweight& z) const;

  BLElt& operator+=(const BLElt& o);
  BLElt& operator-=(const BLElt& o);
  BLElt operator+(const BLElt& o) const;
  BLElt operator-(const BLElt& o) const;
  BLElt operator-() const;
  BLElt scaled(const LaurentT& c) const;
  bool operator==(const BLElt& o) const { return c_ == o.c_; }
  bool operator!=(const BLElt& o) const { return !(*this == o); }

  void add_term(const WeylElt& w, const Coweight& z, const LaurentT& c);

  // Bulk constructor for a key-sorted, duplicate-free, zero-free term list;
  // inserts in linear time. The product pipeline builds its results this
  // way instead of term-by-term map insertion.
  static BLElt from_sorted(std::vector<std::pair<BLKey, LaurentT>> terms);

  std::string str() const;

 private:
  std::map<BLKey, LaurentT> c_;
};

class BLOps {
 public:
  explicit BLOps(const HeckeOps& hecke);

  const HeckeOps& hecke() const { return h_; }
  const WeylOps& weyl() const { return w_; }
  const RootDatum& datum() const { return rd_; }

  BLElt one() const;
  BLElt from_hw(const HWElt& h) const;
  // Z^lambda; defined for every lambda in Y.
  BLElt z_monomial(const Coweight& lambda, LaurentT c) const;
  // Z^lambda T_u in normal form.
  BLElt zw_normal(const Coweight& lambda, const WeylElt& u) const;

  // x * T_i^{+-1} and x * Z^mu and T-side left multiplication.
  BLElt mul_right_gen(const BLElt& x, int i, int sign) const;
  BLElt mul_right_z(const BLElt& x, const Coweight& mu) const;
  BLElt mul_left_gen(int i, int sign, const BLElt& x) const;
  BLElt mul_left_hw(const HWElt& h, const BLElt& x) const;

  BLElt mul(const BLElt& a, const BLElt& b) const;

  // The string correction P_i(lambda) as signed exponent list:
  // +[lambda, r_i lambda[ when alpha_i(lambda) >= 0 and
  // -]lambda, r_i lambda] when alpha_i(lambda) <= 0.
  std::vector<std::pair<Coweight, int>> p_correction(const Coweight& lambda,
                                                     int i) const;

  // Z-side coefficient extraction from the normal form.
  HWElt coeff_Z(const BLElt& a, const Coweight& lambda) const;
  std::vector<Coweight> supp_Z(const BLElt& a) const;

  // Translation basis elements. t_basis(lambda) is T_{lambda.1} =
  // delta^{1/2}(lam^{++}) T_{w_lam} Z^{lam^{++}} T_{w_lam}^{-1} where
  // lam^{++} is the dominant representative and w_lam the minimal element
  // with lambda = w_lam(lam^{++}); throws NotInTitsCone / TitsConeUnknown
  // when lambda has no dominant representative. t_basis(lambda, w) extends
  // along the canonical word of w by the translation relations.
  const BLElt& t_basis(const Coweight& lambda) const;
  BLElt t_basis(const Coweight& lambda, const WeylElt& w) const;

  // The invertible coefficient u with coeff_Z(T_lambda, lambda) = u:
  // q^{-l(w_lam)} delta^{1/2}(lam^{++}) T_{w_lam} T_{w_lam^{-1}}.
  HWElt leading_unit(const Coweight& lambda) const;
  HWElt leading_unit_inv(const Coweight& lambda) const;

  // Triangular decomposition a = sum_lambda h_lambda T_lambda with
  // h_lambda in the finite Hecke algebra, by elimination of dominance-
  // maximal support classes. Requires every Z-support point to have a
  // dominant representative.
  std::map<Coweight, HWElt> expand_in_T(const BLElt& a) const;
  BLElt assemble_from_T(const std::map<Coweight, HWElt>& h) const;
  std::vector<Coweight> supp_T(const BLElt& a) const;

  // Expansion in the translation basis T_{lambda.w} of the full algebra;
  // the returned map is read as sum c T_{lambda.w}.
  std::map<BLKey, LaurentT> expand_in_TT(const BLElt& a) const;
  BLElt assemble_from_TT(const std::map<BLKey, LaurentT>& c) const;

  // Right-handed decomposition a = sum_lambda T_lambda h_lambda.
  std::map<Coweight, HWElt> expand_in_T_right(const BLElt& a) const;
  HWElt coeff_T_right(const BLElt& a, const Coweight& lambda) const;
  BLElt assemble_from_T_right(const std::map<Coweight, HWElt>& h) const;

  // The anti-automorphism fixing every T_w and every Z^lambda:
  // psi(c T_w Z^lambda) = c Z^lambda T_{w^{-1}} renormalized.
  BLElt anti_involution(const BLElt& a) const;

  // Translation relation case split. Left: T_i T_{lambda.w} =
  // T_{r_i lambda . r_i w} iff alpha_i(lambda) > 0, or alpha_i(lambda) = 0
  // and l(r_i w) > l(w). Right: T_{lambda.w} T_i = T_{lambda . w r_i} iff
  // alpha_i(w^{-1} lambda) < 0, or alpha_i(w^{-1} lambda) = 0 and
  // l(w r_i) > l(w).
  bool im_case1_left(const Coweight& lambda, const WeylElt& w, int i) const;
  bool im_case1_right(const Coweight& lambda, const WeylElt& w, int i) const;

  // The finite Hecke factor eta with T_{lambda.w} = T_{lambda.1} eta,
  // the product of T_j^{+-1} along the canonical word of w with signs
  // chosen by im_case1_right.
  HWElt eta_right(const Coweight& lambda, const WeylElt& w) const;

 private:
  // One right-multiplication by T_i on a key-sorted flat term list; the
  // workhorse of mul, kept flat so letter folds sort-merge instead of
  // churning tree nodes.
  std::vector<std::pair<BLKey, LaurentT>> fold_letter(
      std::vector<std::pair<BLKey, LaurentT>> in, int i) const;

  const HeckeOps& h_;
  const WeylOps& w_;
  const RootDatum& rd_;
  mutable std::map<Coweight, BLElt> t_cache_;
};

}  // namespace hecke
