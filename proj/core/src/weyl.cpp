#include "hecke/weyl.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace hecke {

std::string WeylElt::str() const {
  if (word_.empty()) return "1";
  std::ostringstream os;
  for (size_t k = 0; k < word_.size(); ++k) {
    if (k) os << '.';
    os << 'r' << word_[k];
  }
  return os.str();
}

WeylOps::WeylOps(const RootDatum& datum) : rd_(datum) {
  const int d = rd_.rank();
  id_mat_.assign(d * d, 0);
  for (int r = 0; r < d; ++r) id_mat_[r * d + r] = 1;
  for (int i = 0; i < rd_.n_gen(); ++i) gens_.push_back(gen_matrix(i));
}

std::vector<long long> WeylOps::gen_matrix(int i) const {
  const int d = rd_.rank();
  // r_i(v) = v - alpha_i(v) alpha_i^vee, so R_i = I - alpha_i^vee alpha_i^T.
  std::vector<long long> m(id_mat_);
  const Coweight& cv = rd_.coroot(i);
  const std::vector<long long>& rt = rd_.root_row(i);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r * d + c] -= cv[r] * rt[c];
  return m;
}

std::vector<long long> WeylOps::mat_mul(const std::vector<long long>& a,
                                        const std::vector<long long>& b) const {
  const int d = rd_.rank();
  std::vector<long long> m(d * d, 0);
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k) {
      long long v = a[r * d + k];
      if (v == 0) continue;
      for (int c = 0; c < d; ++c) m[r * d + c] += v * b[k * d + c];
    }
  return m;
}

namespace {

// alpha_i of an integer vector with arbitrary-precision entries.
Int pair_int(const RootDatum& rd, int i, const std::vector<Int>& v) {
  Int s = 0;
  const std::vector<long long>& row = rd.root_row(i);
  for (size_t c = 0; c < v.size(); ++c) s += row[c] * v[c];
  return s;
}

std::vector<Int> apply_mat_int(const std::vector<long long>& mat, int d,
                               const Coweight& p) {
  std::vector<Int> out(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out[r] += Int(mat[r * d + c]) * p[c];
  return out;
}

}  // namespace

WeylElt WeylOps::make(std::vector<long long> mat) const {
  const int d = rd_.rank();
  std::vector<int> word;
  // Greedy left descent stripping against the strictly dominant reference
  // point: i is a left descent of w iff alpha_i(w(p)) < 0, and choosing the
  // smallest such i at every step yields the lex-smallest reduced word.
  // Works on the integer multiple of the reference point: coordinates can
  // outgrow machine words along long words, but never need rationals.
  std::vector<Int> wp = apply_mat_int(mat, d, rd_.strict_dominant_int());
  std::vector<long long> cur = mat;
  const long long guard = 1 << 22;
  for (long long step = 0;; ++step) {
    check(step < guard, Errc::LengthCapExceeded,
          "Weyl canonicalization exceeded its step guard");
    int desc = -1;
    Int a = 0;
    for (int i = 0; i < rd_.n_gen(); ++i) {
      Int p = pair_int(rd_, i, wp);
      if (p < 0) {
        desc = i;
        a = std::move(p);
        break;
      }
    }
    if (desc < 0) break;
    word.push_back(desc);
    cur = mat_mul(gens_[desc], cur);
    // wp <- r_i(wp)
    const Coweight& cv = rd_.coroot(desc);
    for (int r = 0; r < d; ++r) wp[r] -= a * cv[r];
  }
  check(cur == id_mat_, Errc::ConfigInvalid,
        "matrix does not represent a Weyl group element");
  return WeylElt(std::move(mat), d, std::move(word));
}

WeylElt WeylOps::id() const { return WeylElt(id_mat_, rd_.rank(), {}); }

WeylElt WeylOps::gen(int i) const {
  check(i >= 0 && i < rd_.n_gen(), Errc::ConfigInvalid, "generator index");
  return WeylElt(gens_[i], rd_.rank(), {i});
}

WeylElt WeylOps::from_word(const std::vector<int>& word) const {
  std::vector<long long> m = id_mat_;
  for (int i : word) {
    check(i >= 0 && i < rd_.n_gen(), Errc::ConfigInvalid, "generator index");
    m = mat_mul(m, gens_[i]);
  }
  return make(std::move(m));
}

WeylElt WeylOps::mul(const WeylElt& a, const WeylElt& b) const {
  return make(mat_mul(a.mat(), b.mat()));
}

WeylElt WeylOps::inverse(const WeylElt& w) const {
  // The reversed word is a word for the inverse.
  std::vector<long long> m = id_mat_;
  const std::vector<int>& wd = w.word();
  for (auto it = wd.rbegin(); it != wd.rend(); ++it)
    m = mat_mul(m, gens_[*it]);
  return make(std::move(m));
}

WeylElt WeylOps::mul_gen_right(const WeylElt& w, int i) const {
  auto key = std::make_pair(w.word(), i);
  auto it = right_memo_.find(key);
  if (it != right_memo_.end()) return it->second;
  WeylElt r = make(mat_mul(w.mat(), gens_[i]));
  right_memo_.emplace(std::move(key), r);
  return r;
}

WeylElt WeylOps::mul_gen_left(int i, const WeylElt& w) const {
  auto key = std::make_pair(w.word(), i);
  auto it = left_memo_.find(key);
  if (it != left_memo_.end()) return it->second;
  WeylElt r = make(mat_mul(gens_[i], w.mat()));
  left_memo_.emplace(std::move(key), r);
  return r;
}

Coweight WeylOps::act(const WeylElt& w, const Coweight& v) const {
  const int d = rd_.rank();
  Coweight out(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out[r] += w.mat()[r * d + c] * v[c];
  return out;
}

std::vector<Rat> WeylOps::act_rat(const WeylElt& w,
                                  const std::vector<Rat>& v) const {
  const int d = rd_.rank();
  std::vector<Rat> out(d, 0);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) out[r] += Rat(w.mat()[r * d + c]) * v[c];
  return out;
}

bool WeylOps::is_left_descent(const WeylElt& w, int i) const {
  // l(r_i w) < l(w) iff w^{-1}(alpha_i) is a negative root iff
  // alpha_i(w(p)) < 0 for the strictly dominant reference point p.
  std::vector<Int> wp =
      apply_mat_int(w.mat(), rd_.rank(), rd_.strict_dominant_int());
  return pair_int(rd_, i, wp) < 0;
}

bool WeylOps::is_right_descent(const WeylElt& w, int i) const {
  return mul_gen_right(w, i).length() < w.length();
}

std::vector<int> WeylOps::left_descents(const WeylElt& w) const {
  std::vector<int> out;
  std::vector<Int> wp =
      apply_mat_int(w.mat(), rd_.rank(), rd_.strict_dominant_int());
  for (int i = 0; i < rd_.n_gen(); ++i)
    if (pair_int(rd_, i, wp) < 0) out.push_back(i);
  return out;
}

std::vector<std::vector<int>> WeylOps::all_reduced_words(const WeylElt& w,
                                                         int cap) const {
  check(w.length() <= cap, Errc::LengthCapExceeded,
        "reduced word enumeration capped at length " + std::to_string(cap));
  if (w.is_id()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i : left_descents(w)) {
    WeylElt v = mul_gen_left(i, w);
    for (auto& tail : all_reduced_words(v, cap)) {
      std::vector<int> word;
      word.reserve(tail.size() + 1);
      word.push_back(i);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

bool WeylOps::bruhat_leq(const WeylElt& u, const WeylElt& w) const {
  if (u.length() > w.length()) return false;
  if (u.length() == 0) return true;
  if (w.length() == 0) return false;
  // Standard recursion: for a left descent i of w and v = r_i w,
  // u <= w iff (r_i u <= v when i is a descent of u, else u <= v).
  int i = left_descents(w).front();
  WeylElt v = mul_gen_left(i, w);
  if (is_left_descent(u, i)) return bruhat_leq(mul_gen_left(i, u), v);
  return bruhat_leq(u, v);
}

std::vector<WeylElt> WeylOps::bruhat_lower_interval(const WeylElt& w,
                                                    int cap) const {
  check(w.length() <= cap, Errc::LengthCapExceeded,
        "Bruhat interval enumeration capped at length " + std::to_string(cap));
  std::set<WeylElt> acc;
  // [1, w] = [1, v] union r_i [1, v] for w = r_i v with l(v) = l(w) - 1.
  if (w.is_id()) {
    acc.insert(w);
  } else {
    int i = left_descents(w).front();
    for (const WeylElt& u : bruhat_lower_interval(mul_gen_left(i, w), cap)) {
      acc.insert(u);
      acc.insert(mul_gen_left(i, u));
    }
  }
  return std::vector<WeylElt>(acc.begin(), acc.end());
}

std::vector<WeylElt> WeylOps::ball(int L) const {
  std::set<WeylElt> acc;
  std::vector<WeylElt> frontier{id()};
  acc.insert(id());
  for (int len = 1; len <= L && !frontier.empty(); ++len) {
    std::vector<WeylElt> next;
    for (const WeylElt& w : frontier) {
      for (int i = 0; i < rd_.n_gen(); ++i) {
        WeylElt w2 = mul_gen_right(w, i);
        if (w2.length() == len && acc.insert(w2).second)
          next.push_back(std::move(w2));
      }
    }
    frontier = std::move(next);
  }
  return std::vector<WeylElt>(acc.begin(), acc.end());
}

TitsConeAnswer WeylOps::in_tits_cone(const Coweight& lambda,
                                     long long max_steps) const {
  TitsConeAnswer ans;
  if (rd_.is_dominant(lambda)) {
    ans.kind = TitsConeAnswer::Kind::Inside;
    ans.rep = lambda;
    ans.w_min = id();
    ans.steps = 0;
    return ans;
  }
  if (rd_.affine()) {
    // The Tits cone of an affine datum is the union of the open half-space
    // of positive level with the level-0 fixed locus of W_0, and the latter
    // consists of dominant points only; a non-dominant point is inside iff
    // its level is positive.
    if (rd_.delta_of(lambda) <= 0) {
      ans.kind = TitsConeAnswer::Kind::Outside;
      ans.steps = 0;
      return ans;
    }
  }
  // The raising loop runs in arbitrary precision: outside an indefinite
  // Tits cone the coordinates grow geometrically with the step count, far
  // past any fixed-width integer.
  const int d = rd_.rank();
  std::vector<Int> x(d);
  for (int r = 0; r < d; ++r) x[r] = lambda[r];
  auto pair_big = [&](int i) {
    Int s = 0;
    const std::vector<long long>& row = rd_.root_row(i);
    for (int c = 0; c < d; ++c) s += Int(row[c]) * x[c];
    return s;
  };
  std::vector<int> letters;
  long long steps = 0;
  bool raised = false;
  while (steps < max_steps) {
    int neg = -1;
    Int a = 0;
    for (int i = 0; i < rd_.n_gen(); ++i) {
      Int p = pair_big(i);
      if (p < 0) {
        neg = i;
        a = std::move(p);
        break;
      }
    }
    if (neg < 0) {
      raised = true;
      break;
    }
    const Coweight& cv = rd_.coroot(neg);
    for (int r = 0; r < d; ++r) x[r] -= a * cv[r];
    letters.push_back(neg);
    ++steps;
  }
  if (raised) {
    Coweight rep(d);
    for (int r = 0; r < d; ++r) {
      check(x[r] >= (std::numeric_limits<long long>::min)() &&
                x[r] <= (std::numeric_limits<long long>::max)(),
            Errc::LengthCapExceeded,
            "dominant representative exceeds machine integer range");
      rep[r] = x[r].convert_to<long long>();
    }
    ans.kind = TitsConeAnswer::Kind::Inside;
    // lambda = r_{letters[0]} ... r_{letters.back()} (rep).
    ans.w_min = min_coset_rep(from_word(letters), rep);
    ans.rep = std::move(rep);
    ans.steps = steps;
    return ans;
  }
  // Raising ran out of steps. On affine data with positive level the loop
  // provably terminates, so exhausting the cap is a resource error there;
  // on other data membership is genuinely undecided.
  check(!rd_.affine(), Errc::LengthCapExceeded,
        "raising exceeded max_steps on an affine datum");
  ans.kind = TitsConeAnswer::Kind::Unknown;
  ans.steps = steps;
  return ans;
}

TitsConeAnswer WeylOps::tits_rep_or_throw(const Coweight& lambda,
                                          long long max_steps) const {
  TitsConeAnswer ans = in_tits_cone(lambda, max_steps);
  if (ans.kind == TitsConeAnswer::Kind::Outside)
    fail(Errc::NotInTitsCone, "coweight " + cw_str(lambda) +
                                  " lies outside the Tits cone");
  if (ans.kind == TitsConeAnswer::Kind::Unknown)
    fail(Errc::TitsConeUnknown,
         "membership undecided for " + cw_str(lambda) + " after " +
             std::to_string(ans.steps) + " raising steps");
  return ans;
}

WeylElt WeylOps::min_coset_rep(const WeylElt& w, const Coweight& dom) const {
  check(rd_.is_dominant(dom), Errc::NotDominant,
        "minimal coset representative needs a dominant base point");
  // Strip right descents lying in the stabilizer, which is generated by
  // the simple reflections it contains.
  WeylElt cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < rd_.n_gen(); ++j) {
      if (rd_.pair(j, dom) != 0) continue;
      WeylElt cand = mul_gen_right(cur, j);
      if (cand.length() < cur.length()) {
        cur = std::move(cand);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<std::pair<Coweight, WeylElt>> WeylOps::orbit_upto(
    const Coweight& dom, int L, bool* complete) const {
  check(rd_.is_dominant(dom), Errc::NotDominant,
        "orbit enumeration needs a dominant base point");
  std::vector<std::pair<Coweight, WeylElt>> out;
  out.emplace_back(dom, id());
  std::vector<std::pair<Coweight, WeylElt>> frontier = out;
  bool exhausted = false;
  for (int len = 1; len <= L; ++len) {
    std::set<WeylElt> seen;
    std::vector<std::pair<Coweight, WeylElt>> next;
    for (const auto& [mu, w] : frontier) {
      for (int i = 0; i < rd_.n_gen(); ++i) {
        WeylElt w2 = mul_gen_left(i, w);
        // Minimal coset representatives of length len are exactly the
        // length-increasing extensions that are still minimal.
        if (w2.length() != len) continue;
        if (!(min_coset_rep(w2, dom) == w2)) continue;
        if (seen.insert(w2).second)
          next.emplace_back(rd_.reflect(i, mu), std::move(w2));
      }
    }
    if (next.empty()) {
      exhausted = true;
      break;
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  if (complete) *complete = exhausted;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second < b.second;
  });
  return out;
}

}  // namespace hecke
