#include "hecke/supports.hpp"

namespace hecke {

SupportOps::SupportOps(const WeylOps& weyl) : w_(weyl), rd_(weyl.datum()) {}

std::set<Coweight> SupportOps::step(SupportVariant var, int i,
                                    const Coweight& lambda) const {
  std::set<Coweight> out;
  const long long a = rd_.pair(i, lambda);
  switch (var) {
    case SupportVariant::Plain:
      out.insert(rd_.reflect(i, lambda));
      if (a < 0) out.insert(lambda);
      return out;
    case SupportVariant::Bar: {
      // The Plain step together with the open string interior. This closes
      // the lambda end exactly when alpha_i(lambda) < 0 and degenerates to
      // {lambda} on the wall alpha_i(lambda) = 0.
      out.insert(rd_.reflect(i, lambda));
      if (a < 0) out.insert(lambda);
      auto pts = rd_.line_interval(lambda, i, IntervalMode::Open);
      out.insert(pts.begin(), pts.end());
      return out;
    }
    case SupportVariant::Tilde: {
      auto pts = rd_.line_interval(
          lambda, i, a >= 0 ? IntervalMode::Closed : IntervalMode::OpenLeft);
      return std::set<Coweight>(pts.begin(), pts.end());
    }
    case SupportVariant::Hat: {
      auto pts = rd_.line_interval(lambda, i, IntervalMode::Closed);
      return std::set<Coweight>(pts.begin(), pts.end());
    }
  }
  return out;
}

std::set<Coweight> SupportOps::word_image(SupportVariant var,
                                          const std::vector<int>& m,
                                          const std::set<Coweight>& start) const {
  std::set<Coweight> cur = start;
  // The composition convention puts the last letter first.
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    std::set<Coweight> next;
    for (const Coweight& x : cur) {
      std::set<Coweight> s = step(var, *it, x);
      next.insert(s.begin(), s.end());
    }
    cur = std::move(next);
  }
  return cur;
}

std::set<Coweight> SupportOps::elt_image(SupportVariant var, const WeylElt& w,
                                         const Coweight& lambda,
                                         int cap) const {
  std::set<Coweight> out;
  for (const auto& word : w_.all_reduced_words(w, cap)) {
    std::set<Coweight> s = word_image(var, word, {lambda});
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<Coweight> SupportOps::s_support(const WeylElt& w,
                                         const Coweight& lambda,
                                         int cap) const {
  std::set<Coweight> out;
  const Coweight target = w_.act(w, lambda);
  for (const WeylElt& v : w_.bruhat_lower_interval(w, cap)) {
    Coweight x = w_.act(v, lambda);
    if (rd_.dominance_leq(x, target)) out.insert(std::move(x));
  }
  return out;
}

long long SupportOps::depth(const Coweight& lambda, const Coweight& mu) const {
  auto dx = rd_.coroot_coords(cw_sub(lambda, mu));
  bool comparable = dx.has_value();
  if (comparable)
    for (const Rat& c : *dx)
      comparable = comparable && boost::multiprecision::denominator(c) == 1;
  check(comparable, Errc::NotComparable,
        "depth needs points in a common coroot lattice translate");
  TitsConeAnswer al = w_.in_tits_cone(lambda);
  TitsConeAnswer am = w_.in_tits_cone(mu);
  if (al.kind == TitsConeAnswer::Kind::Unknown ||
      am.kind == TitsConeAnswer::Kind::Unknown)
    fail(Errc::TitsConeUnknown, "depth needs decided Tits cone membership");
  check(al.kind == TitsConeAnswer::Kind::Inside &&
            am.kind == TitsConeAnswer::Kind::Inside,
        Errc::NotComparable, "depth needs points inside the Tits cone");
  Rat d = rd_.ht(al.rep) - rd_.ht(am.rep);
  // Difference of dominant representatives in a common coroot translate;
  // the height is integral there.
  check(boost::multiprecision::denominator(d) == 1, Errc::NotComparable,
        "non-integral depth");
  return boost::multiprecision::numerator(d).convert_to<long long>();
}

std::optional<long long> SupportOps::min_interior_depth(const Coweight& lambda,
                                                        int i) const {
  auto interior = rd_.line_interval(lambda, i, IntervalMode::Open);
  if (interior.empty()) return std::nullopt;
  std::optional<long long> best;
  for (const Coweight& mu : interior) {
    long long d = depth(lambda, mu);
    if (!best || d < *best) best = d;
  }
  return best;
}

void SupportOps::reverse_tilde_step(const Coweight& tau, int i,
                                    const Coweight& m,
                                    std::set<Coweight>& out) const {
  const long long at = rd_.pair(i, tau);
  auto mc = rd_.coroot_coords(cw_sub(m, tau));
  if (!mc) return;
  // Candidates mu = tau + k alpha_i^vee. Both mu <= m and r_i mu <= m are
  // necessary (their common orbit class is bounded by m), which pins k to
  // the range below; outside a common coroot translate nothing survives.
  for (const Rat& c : *mc)
    if (boost::multiprecision::denominator(c) != 1) return;
  const int n = rd_.n_gen();
  for (int j = 0; j < n; ++j)
    if (j != i && (*mc)[j] < 0) return;
  const long long ci =
      boost::multiprecision::numerator((*mc)[i]).convert_to<long long>();
  for (long long k = -at - ci; k <= ci; ++k) {
    const long long c = at + 2 * k;  // alpha_i(mu)
    // Membership tau in Tilde_i(mu): the closed string when alpha_i(mu)
    // >= 0, the half-open string ]mu, r_i mu] when alpha_i(mu) < 0.
    bool member = c >= 0 ? (k >= 0 && k >= -at) : (k <= -1 && k <= -at);
    if (!member) continue;
    const Coweight mu = cw_add(tau, cw_scaled(rd_.coroot(i), k));
    if (!rd_.dominance_leq(mu, m)) continue;
    if (!rd_.dominance_leq(rd_.reflect(i, mu), m)) continue;
    out.insert(mu);
  }
}

SupportOps::ReverseResult SupportOps::reverse_tilde(const Coweight& tau,
                                                    const WeylElt& w,
                                                    const Coweight& m,
                                                    int cap) const {
  ReverseResult res;
  for (const auto& word : w_.all_reduced_words(w, cap)) {
    // Forward, the word acts with its last letter first; reversing peels
    // letters from the front.
    std::set<Coweight> frontier{tau};
    for (int j : word) {
      std::set<Coweight> next;
      for (const Coweight& t : frontier) reverse_tilde_step(t, j, m, next);
      // Prune by Tits cone membership and the class bound; valid chains
      // stay inside the cone with orbit class below m throughout.
      std::set<Coweight> kept;
      for (const Coweight& x : next) {
        TitsConeAnswer ans = w_.in_tits_cone(x);
        if (ans.kind == TitsConeAnswer::Kind::Outside) continue;
        if (ans.kind == TitsConeAnswer::Kind::Unknown) {
          res.exact = false;
          kept.insert(x);
          continue;
        }
        if (!rd_.dominance_leq(ans.rep, m)) continue;
        kept.insert(x);
      }
      frontier = std::move(kept);
      if (frontier.empty()) break;
    }
    res.points.insert(frontier.begin(), frontier.end());
  }
  return res;
}

}  // namespace hecke
