#include "hecke/waf.hpp"

#include <algorithm>
#include <set>

namespace hecke {

Family Family::finite(std::vector<Coweight> pts) {
  Family f;
  f.kind = FamilyKind::Finite;
  f.points = std::move(pts);
  return f;
}

Family Family::orbit(Coweight base) {
  Family f;
  f.kind = FamilyKind::Orbit;
  f.base = std::move(base);
  return f;
}

Family Family::ray(Coweight base, int gen) {
  Family f;
  f.kind = FamilyKind::Ray;
  f.base = std::move(base);
  f.ray_gen = gen;
  return f;
}

Family Family::union_of(std::vector<Family> parts) {
  Family f;
  f.kind = FamilyKind::Union;
  f.parts = std::move(parts);
  return f;
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

WafOps::WafOps(const WeylOps& weyl) : w_(weyl), rd_(weyl.datum()) {}

std::vector<Coweight> WafOps::maxima(std::vector<Coweight> pts) const {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Coweight> out;
  for (const Coweight& p : pts) {
    bool dominated = false;
    for (const Coweight& q : pts)
      if (q != p && rd_.dominance_leq(p, q)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<Coweight> WafOps::certificate_sum(
    const std::vector<Coweight>& m1, const std::vector<Coweight>& m2) const {
  std::vector<Coweight> sums;
  for (const Coweight& a : m1)
    for (const Coweight& b : m2) sums.push_back(cw_add(a, b));
  return maxima(std::move(sums));
}

namespace {

// Points of W_0 x with strictly increasing height, produced by raising
// steps; only called when raising does not terminate within the sample.
std::vector<WitnessPoint> raising_witness(const RootDatum& rd, Coweight x,
                                          int count) {
  std::vector<WitnessPoint> out;
  out.push_back({x, rd.ht(x)});
  for (int k = 1; k < count; ++k) {
    int neg = -1;
    for (int i = 0; i < rd.n_gen(); ++i)
      if (rd.pair(i, x) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    x = rd.reflect(neg, x);
    out.push_back({x, rd.ht(x)});
  }
  return out;
}

}  // namespace

WafAnswer WafOps::classify(const Family& f) const {
  WafAnswer ans;
  switch (f.kind) {
    case FamilyKind::Finite: {
      ans.almost_finite = Tri::Yes;
      std::vector<Coweight> reps;
      for (const Coweight& x : f.points) {
        TitsConeAnswer t = w_.in_tits_cone(x);
        if (t.kind == TitsConeAnswer::Kind::Outside) {
          // Outside the Tits cone the raising iteration never terminates
          // and each step raises the height by at least one, so the orbit
          // has unbounded height.
          ans.waf = Tri::No;
          ans.witness = raising_witness(rd_, x, 6);
          ans.note = "orbit of " + cw_str(x) + " has unbounded height";
          return ans;
        }
        if (t.kind == TitsConeAnswer::Kind::Unknown) {
          ans.waf = Tri::Unknown;
          ans.note = "Tits cone membership undecided for " + cw_str(x);
          return ans;
        }
        reps.push_back(t.rep);
      }
      ans.waf = Tri::Yes;
      ans.certificate = maxima(std::move(reps));
      return ans;
    }
    case FamilyKind::Orbit: {
      check(rd_.is_dominant(f.base), Errc::NotDominant,
            "orbit family needs a dominant base point");
      // Every orbit point differs from the dominant base by a nonnegative
      // coroot combination, so the base certifies the full orbit.
      ans.almost_finite = Tri::Yes;
      ans.waf = Tri::Yes;
      ans.certificate = {f.base};
      return ans;
    }
    case FamilyKind::Ray: {
      check(f.ray_gen >= 0 && f.ray_gen < rd_.n_gen(), Errc::ConfigInvalid,
            "ray generator index");
      // The ray itself descends from its base point.
      ans.almost_finite = Tri::Yes;
      ans.certificate = {};
      // But its orbit contains r_i(base - k alpha_i^vee) =
      // r_i(base) + k alpha_i^vee, whose height grows linearly, so the ray
      // is never Weyl-almost-finite.
      ans.waf = Tri::No;
      Coweight rb = rd_.reflect(f.ray_gen, f.base);
      for (int k = 0; k < 6; ++k) {
        Coweight x = cw_add(rb, cw_scaled(rd_.coroot(f.ray_gen), k));
        ans.witness.push_back({x, rd_.ht(x)});
      }
      ans.note = "reflected ray has unbounded height";
      return ans;
    }
    case FamilyKind::Union: {
      ans.almost_finite = Tri::Yes;
      ans.waf = Tri::Yes;
      std::vector<Coweight> cert;
      for (const Family& part : f.parts) {
        WafAnswer sub = classify(part);
        auto meet = [](Tri a, Tri b) {
          if (a == Tri::No || b == Tri::No) return Tri::No;
          if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
          return Tri::Yes;
        };
        ans.almost_finite = meet(ans.almost_finite, sub.almost_finite);
        ans.waf = meet(ans.waf, sub.waf);
        if (sub.waf == Tri::No && ans.witness.empty()) {
          ans.witness = sub.witness;
          ans.note = sub.note;
        }
        cert.insert(cert.end(), sub.certificate.begin(),
                    sub.certificate.end());
      }
      if (ans.waf == Tri::Yes) ans.certificate = maxima(std::move(cert));
      return ans;
    }
  }
  return ans;
}

LooijengaElt lj_monomial(const RootDatum& rd, const Coweight& lambda,
                         LaurentT c) {
  LooijengaElt e;
  e.certificate = {lambda};
  e.desc = "monomial " + cw_str(lambda);
  e.coeff = [lambda, c, &rd](const Coweight& nu) {
    return nu == lambda ? c : rd.lt_zero();
  };
  return e;
}

LooijengaElt lj_orbit_sum(const WeylOps& weyl, const Coweight& base) {
  const RootDatum& rd = weyl.datum();
  check(rd.is_dominant(base), Errc::NotDominant,
        "orbit series needs a dominant base point");
  LooijengaElt e;
  e.certificate = {base};
  e.desc = "orbit sum " + cw_str(base);
  e.coeff = [&weyl, &rd, base](const Coweight& nu) {
    TitsConeAnswer t = weyl.in_tits_cone(nu);
    if (t.kind == TitsConeAnswer::Kind::Unknown)
      fail(Errc::TitsConeUnknown,
           "orbit membership undecided for " + cw_str(nu));
    bool in = t.kind == TitsConeAnswer::Kind::Inside && t.rep == base;
    return in ? rd.lt_one() : rd.lt_zero();
  };
  return e;
}

LooijengaElt lj_add(const WafOps& ops, const LooijengaElt& a,
                    const LooijengaElt& b) {
  LooijengaElt e;
  std::vector<Coweight> cert = a.certificate;
  cert.insert(cert.end(), b.certificate.begin(), b.certificate.end());
  e.certificate = ops.maxima(std::move(cert));
  e.desc = "(" + a.desc + " + " + b.desc + ")";
  auto ac = a.coeff;
  auto bc = b.coeff;
  e.coeff = [ac, bc](const Coweight& nu) { return ac(nu) + bc(nu); };
  return e;
}

LooijengaElt lj_scale(const LooijengaElt& a, const LaurentT& c) {
  LooijengaElt e;
  e.certificate = a.certificate;
  e.desc = "scaled " + a.desc;
  auto ac = a.coeff;
  e.coeff = [ac, c](const Coweight& nu) { return ac(nu) * c; };
  return e;
}

LaurentT lj_coeff(const RootDatum& rd, const LooijengaElt& a,
                  const LooijengaElt& b, const Coweight& nu) {
  // supp(a) below m1 and supp(b) below m2 confine the inner index to
  // nu - m1 <= mu <= m2.
  std::set<Coweight> idx;
  for (const Coweight& m1 : a.certificate)
    for (const Coweight& m2 : b.certificate) {
      auto box = rd.box_interval(cw_sub(nu, m1), m2);
      idx.insert(box.begin(), box.end());
    }
  LaurentT acc = rd.lt_zero();
  for (const Coweight& mu : idx) acc += a.coeff(cw_sub(nu, mu)) * b.coeff(mu);
  return acc;
}

LooijengaElt lj_mul(const WafOps& ops, const LooijengaElt& a,
                    const LooijengaElt& b) {
  LooijengaElt e;
  e.certificate = ops.certificate_sum(a.certificate, b.certificate);
  e.desc = "(" + a.desc + " * " + b.desc + ")";
  const RootDatum& rd = ops.datum();
  auto ac = a;
  auto bc = b;
  e.coeff = [ac, bc, &rd](const Coweight& nu) {
    return lj_coeff(rd, ac, bc, nu);
  };
  return e;
}

}  // namespace hecke
