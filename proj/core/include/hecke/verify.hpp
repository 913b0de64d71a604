// Named verification suites: each one checks a family of exact algebraic
// identities (associativity, translation-relation consistency, support
// containments, triangularity round trips, inverse expansions, almost-
// finiteness classifications, centrality, stabilization of completed
// supports, right-handed nonvanishing, the anti-involution, and
// positivity of translation-basis structure constants) on a given root
// datum, and returns a structured pass/fail report. Randomized checks
// draw from a seeded generator, so reports are reproducible bit for bit.

#pragma once

#include "hecke/completed.hpp"
#include "hecke/waf.hpp"

#include <random>

namespace hecke {

// One bundle of algebra operations over a datum; members are constructed
// in dependency order and reference each other.
struct AlgebraContext {
  const RootDatum& rd;
  WeylOps weyl;
  HeckeOps hecke;
  BLOps bl;
  SupportOps sup;
  CompletedOps comp;
  WafOps waf;

  explicit AlgebraContext(const RootDatum& datum)
      : rd(datum),
        weyl(rd),
        hecke(weyl),
        bl(hecke),
        sup(weyl),
        comp(bl, sup),
        waf(weyl) {}
};

// Deterministic random values: reduction by modulus keeps the stream
// identical across standard library implementations.
class DetRng {
 public:
  explicit DetRng(unsigned long long seed) : g_(seed) {}

  long long pick(long long lo, long long hi) {
    unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
    return lo + static_cast<long long>(g_() % span);
  }

 private:
  std::mt19937_64 g_;
};

// All dominant lattice points with coordinates in [-radius, radius].
std::vector<Coweight> dominant_pool(const AlgebraContext& ctx,
                                    long long radius);
// A Tits cone point: a random pool point moved by at most one reflection.
// Kept shallow on purpose: deep orbit points have huge coordinates on
// non-finite data and blow up the alpha-strings of products.
Coweight random_cone_point(const AlgebraContext& ctx, DetRng& rng,
                           const std::vector<Coweight>& pool,
                           const std::vector<WeylElt>& ball);
// Small random coefficient: one or two t-monomials.
LaurentT random_coeff(const AlgebraContext& ctx, DetRng& rng);
// Random normal-form element with cone-supported Z-exponents.
BLElt random_bl_elt(const AlgebraContext& ctx, DetRng& rng,
                    const std::vector<Coweight>& pool,
                    const std::vector<WeylElt>& ball, int max_terms);
// Orbit points of every dominant class below dom within the given depth,
// each class enumerated up to representative length L.
std::vector<Coweight> window_below(const AlgebraContext& ctx,
                                   const Coweight& dom, int depth, int L);

struct SuiteOptions {
  int L = 4;
  int cap = 6;
  int depth = 3;
  int samples = 12;
  unsigned long long seed = 20260814ULL;
};

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::string datum;
  bool passed = true;
  std::vector<SuiteCheck> checks;

  void add(std::string name, bool pass, std::string detail = "");
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const RootDatum& rd,
                      const SuiteOptions& opt);

}  // namespace hecke
