#include "hecke/root_datum.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

namespace {

// Gauss-Jordan inverse of a small square rational matrix; nullopt if
// singular.
std::optional<std::vector<std::vector<Rat>>> invert(
    std::vector<std::vector<Rat>> m) {
  const size_t k = m.size();
  std::vector<std::vector<Rat>> inv(k, std::vector<Rat>(k, 0));
  for (size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = m[col][col];
    for (size_t j = 0; j < k; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < k; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (size_t j = 0; j < k; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

KacMoodyMatrix validate_matrix(std::vector<std::vector<long long>> entries,
                               std::vector<std::string> labels) {
  const size_t n = entries.size();
  check(n >= 1, Errc::ConfigInvalid, "empty matrix");
  for (const auto& row : entries)
    check(row.size() == n, Errc::ConfigInvalid, "matrix is not square");
  for (size_t i = 0; i < n; ++i) {
    check(entries[i][i] == 2, Errc::DiagonalNotTwo,
          "entry (" + std::to_string(i) + "," + std::to_string(i) + ") is " +
              std::to_string(entries[i][i]));
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      check(entries[i][j] <= 0, Errc::PositiveOffDiagonal,
            "entry (" + std::to_string(i) + "," + std::to_string(j) +
                ") is " + std::to_string(entries[i][j]));
      check((entries[i][j] == 0) == (entries[j][i] == 0), Errc::AsymmetricZero,
            "entries (" + std::to_string(i) + "," + std::to_string(j) +
                ") and the transpose position disagree about vanishing");
    }
  }
  if (labels.empty()) {
    for (size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  check(labels.size() == n, Errc::ConfigInvalid, "label count mismatch");
  KacMoodyMatrix m;
  m.labels = std::move(labels);
  m.a = std::move(entries);
  return m;
}

RootDatum::RootDatum(KacMoodyMatrix matrix, int rank,
                     std::vector<Coweight> coroots,
                     std::vector<std::vector<long long>> roots,
                     std::vector<Rat> ht_row,
                     std::optional<std::vector<Rat>> delta_row,
                     std::string name)
    : name_(std::move(name)),
      matrix_(std::move(matrix)),
      rank_(rank),
      coroots_(std::move(coroots)),
      roots_(std::move(roots)),
      ht_row_(std::move(ht_row)),
      delta_row_(std::move(delta_row)) {
  const int n = matrix_.size();
  check(rank_ >= n, Errc::ConfigInvalid,
        "rank smaller than the number of generators");
  check(static_cast<int>(coroots_.size()) == n &&
            static_cast<int>(roots_.size()) == n,
        Errc::ConfigInvalid, "need one coroot and one root per generator");
  for (int i = 0; i < n; ++i) {
    check(static_cast<int>(coroots_[i].size()) == rank_ &&
              static_cast<int>(roots_[i].size()) == rank_,
          Errc::ConfigInvalid, "coroot/root coordinate length mismatch");
  }
  check(static_cast<int>(ht_row_.size()) == rank_, Errc::ConfigInvalid,
        "height row length mismatch");

  // The defining compatibility: alpha_j(alpha_i^vee) = a[i][j].
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      check(pair(j, coroots_[i]) == matrix_.a[i][j], Errc::PairingMismatch,
            "alpha_" + matrix_.labels[j] + "(alpha_" + matrix_.labels[i] +
                "^vee) != a[i][j]");

  // Height normalization ht(alpha_i^vee) = 1.
  for (int i = 0; i < n; ++i)
    check(ht(coroots_[i]) == 1, Errc::HeightNotOne,
          "ht(alpha_" + matrix_.labels[i] + "^vee) != 1");

  // N = lcm of the denominators of ht on the coordinate basis.
  Int l = 1;
  for (const Rat& h : ht_row_) {
    Int d = boost::multiprecision::denominator(h);
    l = boost::multiprecision::lcm(l, d);
  }
  check(l <= Int(1000000), Errc::ConfigInvalid, "height denominators too large");
  n_lcm_ = l.convert_to<long long>();

  if (delta_row_) {
    check(static_cast<int>(delta_row_->size()) == rank_, Errc::ConfigInvalid,
          "delta row length mismatch");
    bool nonzero = false;
    for (const Rat& d : *delta_row_) nonzero = nonzero || d != 0;
    check(nonzero, Errc::ConfigInvalid, "delta row is zero");
    for (int i = 0; i < n; ++i)
      check(delta_of(coroots_[i]) == 0, Errc::ConfigInvalid,
            "delta does not vanish on the coroots");
  }

  if (n == 2 && matrix_.a[0][1] * matrix_.a[1][0] > 4) indefinite_rank2_ = true;

  // Pivot data for coroot-basis coordinates: find n independent coordinate
  // rows of the rank x n matrix whose columns are the coroots.
  {
    std::vector<std::vector<Rat>> work(rank_, std::vector<Rat>(n));
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < n; ++c) work[r][c] = coroots_[c][r];
    std::vector<std::vector<Rat>> m = work;
    std::vector<int> rows(rank_);
    std::iota(rows.begin(), rows.end(), 0);
    // Row echelon with row pivoting to pick n independent rows.
    int piv_count = 0;
    for (int col = 0; col < n && piv_count < rank_; ++col) {
      int p = piv_count;
      while (p < rank_ && m[p][col] == 0) ++p;
      if (p == rank_) continue;
      std::swap(m[p], m[piv_count]);
      std::swap(rows[p], rows[piv_count]);
      for (int r = piv_count + 1; r < rank_; ++r) {
        if (m[r][col] == 0) continue;
        Rat f = m[r][col] / m[piv_count][col];
        for (int c = col; c < n; ++c) m[r][c] -= f * m[piv_count][c];
      }
      pivot_rows_.push_back(rows[piv_count]);
      ++piv_count;
    }
    check(static_cast<int>(pivot_rows_.size()) == n, Errc::ConfigInvalid,
          "coroots are linearly dependent");
    std::vector<std::vector<Rat>> sub(n, std::vector<Rat>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sub[r][c] = work[pivot_rows_[r]][c];
    auto inv = invert(std::move(sub));
    check(inv.has_value(), Errc::ConfigInvalid,
          "coroots are linearly dependent");
    pivot_inv_ = std::move(*inv);
  }

  // Strictly dominant reference point: solve alpha_i(p) = 1 for all i,
  // assigning zero to non-pivot coordinates.
  {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(rank_ + 1));
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < rank_; ++c) m[i][c] = Rat(roots_[i][c]);
      m[i][rank_] = 1;
    }
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < rank_ && row < n; ++col) {
      int p = row;
      while (p < n && m[p][col] == 0) ++p;
      if (p == n) continue;
      std::swap(m[p], m[row]);
      Rat d = m[row][col];
      for (int c = 0; c <= rank_; ++c) m[row][c] /= d;
      for (int r = 0; r < n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (int c = 0; c <= rank_; ++c) m[r][c] -= f * m[row][c];
      }
      pivot_col[row] = col;
      ++row;
    }
    check(row == n, Errc::ConfigInvalid, "roots are linearly dependent");
    sd_point_.assign(rank_, 0);
    for (int r = 0; r < n; ++r) sd_point_[pivot_col[r]] = m[r][rank_];
    for (int i = 0; i < n; ++i)
      check(pair_rat(i, sd_point_) == 1, Errc::ConfigInvalid,
            "strictly dominant point solve failed");
    Int den = 1;
    for (const Rat& c : sd_point_)
      den = boost::multiprecision::lcm(den, Int(denominator(c)));
    sd_int_.assign(rank_, 0);
    for (int c = 0; c < rank_; ++c)
      sd_int_[c] = Rat(sd_point_[c] * Rat(den)).convert_to<long long>();
  }
}

long long RootDatum::pair(int i, const Coweight& v) const {
  long long s = 0;
  for (int c = 0; c < rank_; ++c) s += roots_[i][c] * v[c];
  return s;
}

Rat RootDatum::pair_rat(int i, const std::vector<Rat>& v) const {
  Rat s = 0;
  for (int c = 0; c < rank_; ++c) s += Rat(roots_[i][c]) * v[c];
  return s;
}

Coweight RootDatum::reflect(int i, const Coweight& v) const {
  return cw_sub(v, cw_scaled(coroots_[i], pair(i, v)));
}

Rat RootDatum::ht(const Coweight& v) const {
  Rat s = 0;
  for (int c = 0; c < rank_; ++c) s += ht_row_[c] * Rat(v[c]);
  return s;
}

Rat RootDatum::delta_of(const Coweight& v) const {
  check(delta_row_.has_value(), Errc::ConfigInvalid,
        "datum is not flagged affine");
  Rat s = 0;
  for (int c = 0; c < rank_; ++c) s += (*delta_row_)[c] * Rat(v[c]);
  return s;
}

bool RootDatum::is_dominant(const Coweight& v) const {
  for (int i = 0; i < n_gen(); ++i)
    if (pair(i, v) < 0) return false;
  return true;
}

std::optional<std::vector<Rat>> RootDatum::coroot_coords(
    const Coweight& v) const {
  const int n = n_gen();
  std::vector<Rat> x(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      x[r] += pivot_inv_[r][c] * Rat(v[pivot_rows_[c]]);
  // The pivot rows determine x; verify the remaining coordinates agree.
  for (int r = 0; r < rank_; ++r) {
    Rat s = 0;
    for (int c = 0; c < n; ++c) s += Rat(coroots_[c][r]) * x[c];
    if (s != Rat(v[r])) return std::nullopt;
  }
  return x;
}

bool RootDatum::dominance_leq(const Coweight& a, const Coweight& b) const {
  auto x = coroot_coords(cw_sub(b, a));
  if (!x) return false;
  for (const Rat& c : *x) {
    if (c < 0) return false;
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

std::vector<Coweight> RootDatum::box_interval(const Coweight& a,
                                              const Coweight& b) const {
  std::vector<Coweight> out;
  auto x = coroot_coords(cw_sub(b, a));
  if (!x) return out;
  const int n = n_gen();
  std::vector<long long> top(n);
  for (int i = 0; i < n; ++i) {
    if ((*x)[i] < 0 || boost::multiprecision::denominator((*x)[i]) != 1)
      return out;
    top[i] = boost::multiprecision::numerator((*x)[i]).convert_to<long long>();
  }
  std::vector<long long> k(n, 0);
  while (true) {
    Coweight mu = a;
    for (int i = 0; i < n; ++i) mu = cw_add(mu, cw_scaled(coroots_[i], k[i]));
    out.push_back(std::move(mu));
    int i = n - 1;
    while (i >= 0 && k[i] == top[i]) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Coweight> RootDatum::line_interval(const Coweight& lambda, int i,
                                               IntervalMode mode) const {
  const long long a = pair(i, lambda);
  const long long len = a < 0 ? -a : a;
  const long long step = a >= 0 ? -1 : 1;  // toward r_i lambda
  long long from = 0, to = len;
  if (mode == IntervalMode::OpenLeft || mode == IntervalMode::Open) from = 1;
  if (mode == IntervalMode::OpenRight || mode == IntervalMode::Open) to = len - 1;
  std::vector<Coweight> out;
  for (long long k = from; k <= to; ++k)
    out.push_back(cw_add(lambda, cw_scaled(coroots_[i], step * k)));
  return out;
}

LaurentT RootDatum::delta_half(const Coweight& v) const {
  Rat e = ht(v) * Rat(n_lcm_);
  check(boost::multiprecision::denominator(e) == 1, Errc::NonIntegralExponent,
        "N ht(v) is not an integer");
  return LaurentT::t_pow(
      n_lcm_, boost::multiprecision::numerator(e).convert_to<long long>());
}

}  // namespace hecke
