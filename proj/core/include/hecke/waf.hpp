// Almost-finite and Weyl-almost-finite supports. A subset E of the
// coweight lattice is almost finite when it lies below a finite set in
// dominance order, and Weyl-almost-finite (WAF) when the full Weyl orbit
// W_0 E is almost finite. This module classifies the family grammar used
// by the CLI and tests (finite sets, single orbits, coroot rays, unions),
// emits dominance certificates or explicit unbounded-height witnesses, and
// provides the group-algebra series with almost-finite support together
// with their convolution coefficients.

#pragma once

#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hecke {

enum class FamilyKind { Finite, Orbit, Ray, Union };

// Finite: the set points. Orbit: W_0 base for dominant base. Ray:
// { base - k alpha_{ray_gen}^vee : k >= 0 }. Union: union of parts.
struct Family {
  FamilyKind kind = FamilyKind::Finite;
  std::vector<Coweight> points;
  Coweight base;
  int ray_gen = -1;
  std::vector<Family> parts;

  static Family finite(std::vector<Coweight> pts);
  static Family orbit(Coweight base);
  static Family ray(Coweight base, int gen);
  static Family union_of(std::vector<Family> parts);
};

enum class Tri { Yes, No, Unknown };

const char* tri_name(Tri t);

struct WitnessPoint {
  Coweight point;  // a member of W_0 E
  Rat height;
};

struct WafAnswer {
  Tri almost_finite = Tri::Unknown;
  Tri waf = Tri::Unknown;
  // Dominant maxima M with W_0 E below M in dominance order (waf == Yes).
  std::vector<Coweight> certificate;
  // Points of W_0 E of strictly increasing height (waf == No).
  std::vector<WitnessPoint> witness;
  std::string note;
};

class WafOps {
 public:
  explicit WafOps(const WeylOps& weyl);

  const RootDatum& datum() const { return rd_; }

  WafAnswer classify(const Family& f) const;

  // Reduce a point set to its dominance-maximal elements.
  std::vector<Coweight> maxima(std::vector<Coweight> pts) const;
  // Certificate for a sumset: the maxima of the pairwise sums. Sums of
  // dominant points are dominant, so this is again a valid certificate.
  std::vector<Coweight> certificate_sum(const std::vector<Coweight>& m1,
                                        const std::vector<Coweight>& m2) const;

 private:
  const WeylOps& w_;
  const RootDatum& rd_;
};

// A formal series sum c_nu e^nu with almost-finite support: a coefficient
// evaluator plus a certificate bounding the support in dominance order.
struct LooijengaElt {
  std::function<LaurentT(const Coweight&)> coeff;
  std::vector<Coweight> certificate;
  std::string desc;
};

LooijengaElt lj_monomial(const RootDatum& rd, const Coweight& lambda,
                         LaurentT c);
// The characteristic series of the orbit W_0 base, base dominant.
LooijengaElt lj_orbit_sum(const WeylOps& weyl, const Coweight& base);
LooijengaElt lj_add(const WafOps& ops, const LooijengaElt& a,
                    const LooijengaElt& b);
LooijengaElt lj_scale(const LooijengaElt& a, const LaurentT& c);
// Convolution coefficient (a * b)_nu: a finite double sum, with the inner
// index mu confined to the dominance boxes [nu - m1, m2] over certificate
// pairs (m1, m2).
LaurentT lj_coeff(const RootDatum& rd, const LooijengaElt& a,
                  const LooijengaElt& b, const Coweight& nu);
LooijengaElt lj_mul(const WafOps& ops, const LooijengaElt& a,
                    const LooijengaElt& b);

}  // namespace hecke
