// The Weyl group of a Kac-Moody root datum, acting faithfully on the
// coweight lattice. Elements carry their action matrix together with the
// lexicographically smallest reduced word, computed by greedy descent
// against a strictly dominant reference point; equality is matrix equality,
// so braid relations hold by construction. Also provides Bruhat order,
// reduced word enumeration, Tits cone membership with dominant
// representatives, minimal coset representatives mod stabilizers, and
// orbit enumeration by bounded length.

#pragma once

#include "hecke/root_datum.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hecke {

class WeylElt {
 public:
  WeylElt() = default;

  int dim() const { return dim_; }
  const std::vector<long long>& mat() const { return mat_; }
  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  bool is_id() const { return word_.empty() && dim_ > 0; }

  bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  // Orders by length, then lexicographically by canonical word; used as the
  // deterministic key order in all maps and reports.
  bool operator<(const WeylElt& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

  std::string str() const;

 private:
  friend class WeylOps;
  WeylElt(std::vector<long long> m, int d, std::vector<int> w)
      : mat_(std::move(m)), dim_(d), word_(std::move(w)) {}

  std::vector<long long> mat_;  // row-major dim x dim action matrix
  int dim_ = 0;
  std::vector<int> word_;       // lex-smallest reduced word
};

// Result of a Tits cone membership test. Inside comes with the dominant
// representative rep and the minimal-length w_min with lambda =
// w_min(rep). Outside is exact (affine and finite data only). Unknown is
// returned on indefinite data when the raising iteration exceeds its step
// cap; steps records how many raising steps were taken.
struct TitsConeAnswer {
  enum class Kind { Inside, Outside, Unknown };
  Kind kind = Kind::Unknown;
  Coweight rep;
  WeylElt w_min;
  long long steps = 0;
};

// All Weyl group operations hold a reference to their root datum; the
// datum must outlive the WeylOps object.
class WeylOps {
 public:
  explicit WeylOps(const RootDatum& datum);

  const RootDatum& datum() const { return rd_; }

  WeylElt id() const;
  WeylElt gen(int i) const;
  WeylElt from_word(const std::vector<int>& word) const;
  WeylElt mul(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& w) const;
  // w * r_i and r_i * w by a single matrix multiply.
  WeylElt mul_gen_right(const WeylElt& w, int i) const;
  WeylElt mul_gen_left(int i, const WeylElt& w) const;

  Coweight act(const WeylElt& w, const Coweight& v) const;
  std::vector<Rat> act_rat(const WeylElt& w, const std::vector<Rat>& v) const;

  bool is_left_descent(const WeylElt& w, int i) const;
  bool is_right_descent(const WeylElt& w, int i) const;
  std::vector<int> left_descents(const WeylElt& w) const;

  // All reduced words of w; throws LengthCapExceeded when l(w) > cap.
  std::vector<std::vector<int>> all_reduced_words(const WeylElt& w,
                                                  int cap = 12) const;

  bool bruhat_leq(const WeylElt& u, const WeylElt& w) const;
  // The full lower interval [1, w] in Bruhat order, sorted.
  std::vector<WeylElt> bruhat_lower_interval(const WeylElt& w,
                                             int cap = 12) const;

  // All elements of length <= L, sorted by (length, word).
  std::vector<WeylElt> ball(int L) const;

  // Tits cone membership by greedy raising: repeatedly reflect at the
  // smallest i with alpha_i(x) < 0. Exact on finite data (always Inside)
  // and on affine data (the sign of the level plus the degenerate level-0
  // stratum decide); on indefinite data Unknown after max_steps.
  TitsConeAnswer in_tits_cone(const Coweight& lambda,
                              long long max_steps = 4096) const;
  // Inside answer or a NotInTitsCone / TitsConeUnknown error.
  TitsConeAnswer tits_rep_or_throw(const Coweight& lambda,
                                   long long max_steps = 4096) const;

  // Small-integer interning of group elements. Ids are stable for the
  // lifetime of this object; generator products on ids are table lookups
  // after first computation. The algebra layer drives its inner product
  // loops on ids and converts back to elements only at the end.
  int intern(const WeylElt& w) const;
  const WeylElt& interned(int id) const { return interned_[id]; }
  int intern_mul_gen_right(int id, int i) const;

  // Minimal length representative of w modulo the stabilizer of the
  // dominant coweight dom (the stabilizer is generated by the r_j with
  // alpha_j(dom) = 0). Throws NotDominant.
  WeylElt min_coset_rep(const WeylElt& w, const Coweight& dom) const;

  // The orbit points w(dom) indexed by their minimal coset representatives
  // of length <= L, as (point, w_min) pairs sorted by (length, word).
  // complete, when non-null, is set to true iff the whole orbit was
  // exhausted below the length bound.
  std::vector<std::pair<Coweight, WeylElt>> orbit_upto(
      const Coweight& dom, int L, bool* complete = nullptr) const;

 private:
  WeylElt make(std::vector<long long> mat) const;
  std::vector<long long> gen_matrix(int i) const;
  std::vector<long long> mat_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b) const;

  const RootDatum& rd_;
  std::vector<std::vector<long long>> gens_;  // cached generator matrices
  std::vector<long long> id_mat_;
  // Algebra products ask for w * r_i over the same handful of group
  // elements enormously many times, and each cold computation runs a full
  // canonicalization, so the answers are memoized by (canonical word, i).
  mutable std::map<std::pair<std::vector<int>, int>, WeylElt> right_memo_;
  mutable std::map<std::pair<std::vector<int>, int>, WeylElt> left_memo_;
  // Interning state: canonical word -> id, id -> element, and the lazily
  // filled id-level right multiplication table (-1 = not yet computed).
  mutable std::vector<WeylElt> interned_;
  mutable std::map<std::vector<int>, int> intern_ids_;
  mutable std::vector<std::vector<int>> intern_right_;
};

}  // namespace hecke
