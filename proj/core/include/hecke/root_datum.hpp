// Kac-Moody root data over a coweight lattice Y = Z^rank: a generalized
// Cartan matrix A, linearly independent simple coroots alpha_i^vee in Y and
// simple roots alpha_i in Y^* with alpha_j(alpha_i^vee) = A[i][j], together
// with a rational height functional extending ht(alpha_i^vee) = 1. The datum
// also provides the dominance order lambda <= mu iff mu - lambda is a
// nonnegative integer combination of simple coroots, and the line and box
// intervals used by the support calculus.

#pragma once

#include "hecke/common.hpp"
#include "hecke/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hecke {

struct KacMoodyMatrix {
  std::vector<std::string> labels;           // generator names, size n
  std::vector<std::vector<long long>> a;     // n x n entries

  int size() const { return static_cast<int>(a.size()); }
};

// Checks the generalized Cartan matrix axioms: 2 on the diagonal,
// nonpositive integers off it, and a[i][j] = 0 iff a[j][i] = 0. Throws
// DiagonalNotTwo / PositiveOffDiagonal / AsymmetricZero.
KacMoodyMatrix validate_matrix(std::vector<std::vector<long long>> entries,
                               std::vector<std::string> labels = {});

enum class IntervalMode {
  Closed,     // [lambda, r_i lambda]
  OpenLeft,   // ]lambda, r_i lambda]
  OpenRight,  // [lambda, r_i lambda[
  Open,       // ]lambda, r_i lambda[
};

class RootDatum {
 public:
  // coroots[i] is alpha_i^vee in the coordinates of Y; roots[i] is the
  // coordinate row of the functional alpha_i; ht_row is the coordinate row
  // of the height functional (rational entries). delta_row, when present,
  // marks the datum as affine and gives the level functional whose sign
  // decides Tits cone membership. indefinite_rank2 marks a size-2 matrix of
  // indefinite type (a01*a10 > 4).
  RootDatum(KacMoodyMatrix matrix, int rank,
            std::vector<Coweight> coroots,
            std::vector<std::vector<long long>> roots,
            std::vector<Rat> ht_row,
            std::optional<std::vector<Rat>> delta_row,
            std::string name);

  const std::string& name() const { return name_; }
  const KacMoodyMatrix& matrix() const { return matrix_; }
  int n_gen() const { return matrix_.size(); }
  int rank() const { return rank_; }
  const Coweight& coroot(int i) const { return coroots_[i]; }
  const std::vector<long long>& root_row(int i) const { return roots_[i]; }

  // alpha_i(v), exact integer pairing.
  long long pair(int i, const Coweight& v) const;
  Rat pair_rat(int i, const std::vector<Rat>& v) const;

  // Simple reflection r_i(v) = v - alpha_i(v) alpha_i^vee.
  Coweight reflect(int i, const Coweight& v) const;

  // Height functional, Q-linear with ht(alpha_i^vee) = 1.
  Rat ht(const Coweight& v) const;

  // Least common multiple of the denominators of ht on the coordinate
  // basis of Y; the coefficient ring identifies q = t^N.
  long long N() const { return n_lcm_; }

  bool affine() const { return delta_row_.has_value(); }
  // Level delta(v) of an affine datum.
  Rat delta_of(const Coweight& v) const;
  bool indefinite_rank2() const { return indefinite_rank2_; }

  // All alpha_i(v) >= 0.
  bool is_dominant(const Coweight& v) const;
  // A cached rational point p with alpha_i(p) = 1 for all i; evaluating
  // roots at p gives the strictly dominant reference point used for
  // Weyl group canonicalization.
  const std::vector<Rat>& strict_dominant_point() const { return sd_point_; }
  // The same point scaled to integer coordinates: every alpha_i takes the
  // same positive value on it, so descent sign tests agree with the
  // rational point while staying in integer arithmetic.
  const Coweight& strict_dominant_int() const { return sd_int_; }

  // Coordinates of v in the coroot basis when v lies in the rational span
  // of the coroots; nullopt otherwise.
  std::optional<std::vector<Rat>> coroot_coords(const Coweight& v) const;

  // Dominance order: a <= b iff b - a is a nonnegative integer combination
  // of simple coroots.
  bool dominance_leq(const Coweight& a, const Coweight& b) const;

  // All mu with a <= mu <= b in dominance order; empty when a </= b.
  // The result is the full integer box in coroot coordinates, listed in
  // lexicographic coordinate order of mu.
  std::vector<Coweight> box_interval(const Coweight& a,
                                     const Coweight& b) const;

  // The points of the root string segment between lambda and r_i lambda:
  // lambda - k sgn(alpha_i(lambda)) alpha_i^vee for 0 <= k <= |alpha_i(lambda)|,
  // with endpoints dropped according to mode. Listed from the lambda end.
  std::vector<Coweight> line_interval(const Coweight& lambda, int i,
                                      IntervalMode mode) const;

  // t^(N ht(v)) as a coefficient; this is the normalization factor
  // delta^{1/2}(v). Throws NonIntegralExponent if N ht(v) is not integral
  // (cannot happen for v in Y by the choice of N).
  LaurentT delta_half(const Coweight& v) const;

  LaurentT lt_zero() const { return LaurentT::zero(n_lcm_); }
  LaurentT lt_one() const { return LaurentT::one(n_lcm_); }
  LaurentT lt_q(long long k = 1) const { return LaurentT::q_pow(n_lcm_, k); }

 private:
  std::string name_;
  KacMoodyMatrix matrix_;
  int rank_;
  std::vector<Coweight> coroots_;
  std::vector<std::vector<long long>> roots_;
  std::vector<Rat> ht_row_;
  std::optional<std::vector<Rat>> delta_row_;
  bool indefinite_rank2_ = false;
  long long n_lcm_ = 1;
  std::vector<Rat> sd_point_;
  Coweight sd_int_;

  // Row-reduced solve data for expressing vectors in the coroot basis:
  // pivot row indices and the inverse of the pivot submatrix.
  std::vector<int> pivot_rows_;
  std::vector<std::vector<Rat>> pivot_inv_;
};

}  // namespace hecke
