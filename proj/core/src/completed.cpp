#include "hecke/completed.hpp"

#include "hecke/waf.hpp"

#include <algorithm>
#include <set>

namespace hecke {

HWElt CompletedElt::eval(const Coweight& nu) const {
  std::lock_guard<std::mutex> lock(s_->mu);
  auto it = s_->memo.find(nu);
  if (it != s_->memo.end()) return it->second;
  HWElt v = s_->fn(nu);
  s_->memo.emplace(nu, v);
  return v;
}

CompletedOps::CompletedOps(const BLOps& bl, const SupportOps& sup)
    : bl_(bl), sup_(sup), w_(bl.weyl()), h_(bl.hecke()), rd_(bl.datum()) {}

CompletedElt CompletedOps::make(std::function<HWElt(const Coweight&)> fn,
                                std::vector<Coweight> cert, bool exact,
                                int bound, std::string desc) const {
  CompletedElt e;
  e.s_ = std::make_shared<CompletedElt::State>();
  e.s_->fn = std::move(fn);
  e.s_->cert = std::move(cert);
  e.s_->exact = exact;
  e.s_->bound = bound;
  e.s_->desc = std::move(desc);
  return e;
}

BLElt CompletedOps::attach(const HWElt& h, const Coweight& z) const {
  BLElt out;
  for (const auto& [w, c] : h.terms()) out.add_term(w, z, c);
  return out;
}

CompletedElt CompletedOps::from_finite(const BLElt& a,
                                       std::string desc) const {
  auto coeffs = std::make_shared<std::map<Coweight, HWElt>>();
  std::vector<Coweight> reps;
  for (const Coweight& z : bl_.supp_Z(a)) {
    TitsConeAnswer t = w_.tits_rep_or_throw(z);
    reps.push_back(t.rep);
    (*coeffs)[z] = bl_.coeff_Z(a, z);
  }
  WafOps waf(w_);
  std::vector<Coweight> cert = waf.maxima(std::move(reps));
  auto fn = [coeffs](const Coweight& nu) {
    auto it = coeffs->find(nu);
    return it == coeffs->end() ? HWElt() : it->second;
  };
  return make(std::move(fn), std::move(cert), true, -1, std::move(desc));
}

CompletedElt CompletedOps::z_orbit_series(const Coweight& dom,
                                          LaurentT weight) const {
  check(rd_.is_dominant(dom), Errc::NotDominant,
        "orbit series needs a dominant base point");
  const WeylOps* wp = &w_;
  const WeylElt id = w_.id();
  auto fn = [wp, id, dom, weight](const Coweight& nu) {
    TitsConeAnswer t = wp->in_tits_cone(nu);
    if (t.kind == TitsConeAnswer::Kind::Unknown)
      fail(Errc::TitsConeUnknown,
           "orbit membership undecided for " + cw_str(nu));
    if (t.kind == TitsConeAnswer::Kind::Inside && t.rep == dom)
      return HWElt::term(id, weight);
    return HWElt();
  };
  return make(std::move(fn), {dom}, true, -1,
              "z_orbit_series" + cw_str(dom));
}

CompletedElt CompletedOps::t_orbit_series(const Coweight& dom,
                                          LaurentT weight, int L) const {
  bool complete = false;
  BLElt acc;
  for (const auto& [lam, wmin] : w_.orbit_upto(dom, L, &complete))
    acc += bl_.t_basis(lam).scaled(weight);
  CompletedElt e = from_finite(acc, "t_orbit_series" + cw_str(dom));
  e.s_->exact = complete;
  e.s_->bound = complete ? -1 : L;
  e.s_->cert = {dom};
  return e;
}

CompletedElt CompletedOps::mul(const CompletedElt& a,
                               const CompletedElt& b) const {
  const CompletedOps* self = this;
  CompletedElt ca = a, cb = b;
  auto fn = [self, ca, cb](const Coweight& nu) {
    const RootDatum& rd = self->rd_;
    const WeylOps& wy = self->w_;
    const BLOps& bl = self->bl_;
    // Inner exponents mu with nu - mu below some m1 and mu below some m2.
    std::set<Coweight> mus;
    for (const Coweight& m1 : ca.certificate())
      for (const Coweight& m2 : cb.certificate()) {
        auto box = rd.box_interval(cw_sub(nu, m1), m2);
        mus.insert(box.begin(), box.end());
      }
    HWElt out;
    for (const Coweight& mu : mus) {
      HWElt hb = cb.eval(mu);
      if (hb.is_zero()) continue;
      // Left exponents lambda whose normal form can reach nu - mu: the
      // Z-support of Z^lambda T_w sits inside the Tilde image of lambda
      // under w^{-1}, so lambda comes from the reverse enumeration.
      const Coweight tau = cw_sub(nu, mu);
      std::set<Coweight> lams;
      for (const auto& [w, c] : hb.terms()) {
        WeylElt winv = wy.inverse(w);
        for (const Coweight& m1 : ca.certificate()) {
          auto rev = self->sup_.reverse_tilde(tau, winv, m1);
          lams.insert(rev.points.begin(), rev.points.end());
        }
      }
      for (const Coweight& lam : lams) {
        HWElt ha = ca.eval(lam);
        if (ha.is_zero()) continue;
        BLElt prod = bl.mul(self->attach(ha, lam), self->attach(hb, mu));
        out += bl.coeff_Z(prod, nu);
      }
    }
    return out;
  };
  WafOps waf(w_);
  std::vector<Coweight> cert =
      waf.certificate_sum(a.certificate(), b.certificate());
  bool exact = a.exact() && b.exact();
  int bound = exact ? -1 : std::max(a.bound(), b.bound());
  return make(std::move(fn), std::move(cert), exact, bound,
              "(" + a.desc() + " * " + b.desc() + ")");
}

ClassSupport CompletedOps::class_support(const CompletedElt& a,
                                         const Coweight& dom, int L) const {
  ClassSupport out;
  out.bound = L;
  bool complete = false;
  for (const auto& [lam, wmin] : w_.orbit_upto(dom, L, &complete))
    if (!a.eval(lam).is_zero()) out.points.push_back(lam);
  out.complete = complete;
  return out;
}

std::map<WeylElt, std::map<Coweight, LaurentT>> CompletedOps::decompose_Tw_theta(
    const CompletedElt& a, const std::vector<Coweight>& window,
    bool* reconstructed) const {
  std::map<WeylElt, std::map<Coweight, LaurentT>> out;
  bool ok = true;
  for (const Coweight& nu : window) {
    HWElt h = a.eval(nu);
    HWElt back;
    for (const auto& [w, c] : h.terms()) {
      out[w][nu] = c;
      back += HWElt::term(w, c);
    }
    ok = ok && back == h;
  }
  if (reconstructed) *reconstructed = ok;
  return out;
}

CompletedOps::TExpandResult CompletedOps::t_expand_window(
    const CompletedElt& a, const std::vector<Coweight>& window, int L) const {
  TExpandResult res;
  res.exact = a.exact();
  // Classes that can contribute to a window point nu lie between the
  // class of nu and a certificate point; enumerate each once.
  std::set<Coweight> classes;
  for (const Coweight& nu : window) {
    TitsConeAnswer t = w_.tits_rep_or_throw(nu);
    for (const Coweight& m : a.certificate())
      for (const Coweight& c : rd_.box_interval(t.rep, m))
        if (rd_.is_dominant(c)) classes.insert(c);
  }
  std::map<Coweight, HWElt> acc;
  for (const Coweight& cls : classes) {
    ClassSupport cs = class_support(a, cls, L);
    res.exact = res.exact && cs.complete;
    for (const Coweight& lam : cs.points) {
      BLElt piece = attach(a.eval(lam), lam);
      for (auto& [nu, h] : bl_.expand_in_T(piece)) {
        auto [it, fresh] = acc.try_emplace(nu, h);
        if (!fresh) it->second += h;
      }
    }
  }
  for (const Coweight& nu : window) {
    auto it = acc.find(nu);
    if (it != acc.end() && !it->second.is_zero()) res.h[nu] = it->second;
  }
  return res;
}

CompletedOps::CentralReport CompletedOps::verify_central_window(
    const Coweight& dom, const LaurentT& weight,
    const std::vector<Coweight>& window, int L,
    const std::vector<BLElt>& samples) const {
  CentralReport report;
  auto add = [&report](std::string name, bool pass) {
    report.checks.push_back({std::move(name), pass});
    report.all_pass = report.all_pass && pass;
  };
  // Exact generator identities on the orbit window: on the wall
  // alpha_i(lambda) = 0 the monomial itself commutes with T_i; off the
  // wall the symmetrized pair Z^lambda + Z^{r_i lambda} does.
  for (const auto& [lam, wmin] : w_.orbit_upto(dom, L)) {
    for (int i = 0; i < rd_.n_gen(); ++i) {
      const long long p = rd_.pair(i, lam);
      if (p == 0) {
        BLElt z = bl_.z_monomial(lam, rd_.lt_one());
        bool ok = bl_.mul_left_gen(i, +1, z) == bl_.mul_right_gen(z, i, +1);
        add("wall_commute[" + cw_str(lam) + ",i=" + std::to_string(i) + "]",
            ok);
      } else if (p > 0) {
        BLElt z = bl_.z_monomial(lam, rd_.lt_one());
        z += bl_.z_monomial(rd_.reflect(i, lam), rd_.lt_one());
        bool ok = bl_.mul_left_gen(i, +1, z) == bl_.mul_right_gen(z, i, +1);
        add("pair_commute[" + cw_str(lam) + ",i=" + std::to_string(i) + "]",
            ok);
      }
    }
  }
  // Commutator coefficients of the full orbit series against the samples.
  CompletedElt z = z_orbit_series(dom, weight);
  for (size_t s = 0; s < samples.size(); ++s) {
    CompletedElt b = from_finite(samples[s], "sample" + std::to_string(s));
    CompletedElt zb = mul(z, b);
    CompletedElt bz = mul(b, z);
    bool ok = true;
    for (const Coweight& nu : window)
      ok = ok && zb.eval(nu) == bz.eval(nu);
    add("commutator[sample" + std::to_string(s) + "]", ok);
  }
  return report;
}

}  // namespace hecke
