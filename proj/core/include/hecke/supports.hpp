// Set-valued support operators on the coweight lattice. For a single
// generator i and a point lambda these are segments of the alpha_i-string
// between lambda and r_i lambda, with endpoint conventions depending on the
// sign of alpha_i(lambda); words act by composing single steps right to
// left, and group elements act through the union over all reduced words.
// They bound the Z-support of products in the Bernstein-Lusztig algebra
// and drive the reverse enumeration used by the completed convolution.

#pragma once

#include "hecke/weyl.hpp"

#include <optional>
#include <set>

namespace hecke {

enum class SupportVariant {
  Plain,  // {r_i lambda} when alpha_i(lambda) >= 0, else {lambda, r_i lambda}
  Bar,    // ]lambda, r_i lambda] when alpha_i(lambda) >= 0, else [lambda, r_i lambda]
  Tilde,  // [lambda, r_i lambda] when alpha_i(lambda) >= 0, else ]lambda, r_i lambda]
  Hat,    // [lambda, r_i lambda] always
};

class SupportOps {
 public:
  explicit SupportOps(const WeylOps& weyl);

  const RootDatum& datum() const { return rd_; }

  // One generator applied to one point.
  std::set<Coweight> step(SupportVariant var, int i,
                          const Coweight& lambda) const;
  // A word m = (i_1, ..., i_k) applied to a set: the composition
  // step(i_1) o ... o step(i_k), i.e. the last letter acts first.
  std::set<Coweight> word_image(SupportVariant var, const std::vector<int>& m,
                                const std::set<Coweight>& start) const;
  // Union over all reduced words of w; cap bounds l(w).
  std::set<Coweight> elt_image(SupportVariant var, const WeylElt& w,
                               const Coweight& lambda, int cap = 12) const;

  // S_w(lambda) = { v(lambda) : v <= w, v(lambda) <= w(lambda) in
  // dominance order }.
  std::set<Coweight> s_support(const WeylElt& w, const Coweight& lambda,
                               int cap = 12) const;

  // depth_lambda(mu) = ht(lambda^{++} - mu^{++}): both points must lie in
  // the Tits cone and in a common translate of the coroot lattice, else
  // NotComparable. Indefinite data may also raise TitsConeUnknown.
  long long depth(const Coweight& lambda, const Coweight& mu) const;

  // Minimal depth over the open string ]lambda, r_i lambda[; nullopt when
  // the string has no interior points (alpha_i(lambda) <= 1 and >= -1).
  std::optional<long long> min_interior_depth(const Coweight& lambda,
                                              int i) const;

  // Reverse Tilde enumeration: all lambda with tau in Tilde_{w^{-1}-word
  // image}(lambda), pruned by the dominance bound class(point) <= m for
  // every intermediate point. Points whose Tits cone membership cannot be
  // decided are kept and flagged by exact = false.
  struct ReverseResult {
    std::set<Coweight> points;
    bool exact = true;
  };
  ReverseResult reverse_tilde(const Coweight& tau, const WeylElt& w,
                              const Coweight& m, int cap = 12) const;

 private:
  // Single reverse step: all mu with tau in Tilde_i(mu) and both mu and
  // r_i mu below m in dominance order.
  void reverse_tilde_step(const Coweight& tau, int i, const Coweight& m,
                          std::set<Coweight>& out) const;

  const WeylOps& w_;
  const RootDatum& rd_;
};

}  // namespace hecke
