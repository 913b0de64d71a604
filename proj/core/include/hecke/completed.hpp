// Completions of the Bernstein-Lusztig algebra: elements with possibly
// infinite Z-support, represented by a lazy coefficient evaluator
// nu -> coeff_Z at nu (an element of the finite Hecke algebra), together
// with a dominance certificate bounding the orbit classes of the support.
// Convolution reduces each output coefficient to a finite double sum by
// boxing the inner exponent with the certificates and enumerating left
// factors through the reverse support operators.

#pragma once

#include "hecke/bl.hpp"
#include "hecke/supports.hpp"

#include <functional>
#include <memory>
#include <mutex>

namespace hecke {

class CompletedElt {
 public:
  CompletedElt() = default;

  bool valid() const { return static_cast<bool>(s_); }
  // The Z-coefficient at nu (memoized). May throw TitsConeUnknown on
  // indefinite data when a membership test cannot be decided.
  HWElt eval(const Coweight& nu) const;
  // Dominant points bounding every orbit class of the support.
  const std::vector<Coweight>& certificate() const { return s_->cert; }
  // True when every coefficient is computed exactly; false when the
  // element is a truncation complete only under the length bound below.
  bool exact() const { return s_->exact; }
  int bound() const { return s_->bound; }
  const std::string& desc() const { return s_->desc; }

 private:
  friend class CompletedOps;
  struct State {
    std::function<HWElt(const Coweight&)> fn;
    mutable std::map<Coweight, HWElt> memo;
    mutable std::mutex mu;
    std::vector<Coweight> cert;
    bool exact = true;
    int bound = -1;
    std::string desc;
  };
  std::shared_ptr<State> s_;
};

// Support of a completed element on a single orbit class: the orbit points
// of the dominant base with nonzero coefficient, enumerated through
// minimal coset representatives of length <= L; complete reports whether
// the whole orbit was exhausted below the bound.
struct ClassSupport {
  std::vector<Coweight> points;
  bool complete = false;
  int bound = 0;
};

// All operations keep references into the BLOps/SupportOps pair (and
// through them the root datum); those must outlive both the ops object
// and every element it creates.
class CompletedOps {
 public:
  CompletedOps(const BLOps& bl, const SupportOps& sup);

  const BLOps& bl() const { return bl_; }
  const RootDatum& datum() const { return rd_; }

  // Coefficients of a finite normal-form element; every Z-support point
  // must lie in the Tits cone.
  CompletedElt from_finite(const BLElt& a, std::string desc = "finite") const;
  // sum over the orbit W_0 dom of weight * Z^lambda; exact.
  CompletedElt z_orbit_series(const Coweight& dom, LaurentT weight) const;
  // sum over the orbit window of weight * T_{lambda.1}; exact when the
  // orbit is exhausted below L, else a truncation with bound L.
  CompletedElt t_orbit_series(const Coweight& dom, LaurentT weight,
                              int L) const;

  CompletedElt mul(const CompletedElt& a, const CompletedElt& b) const;

  ClassSupport class_support(const CompletedElt& a, const Coweight& dom,
                             int L) const;

  // Split the window coefficients by Weyl part: result[w][nu] is the
  // coefficient of T_w Z^nu. reconstructed, when non-null, reports the
  // (structural) check that the pieces re-sum to eval on the window.
  std::map<WeylElt, std::map<Coweight, LaurentT>> decompose_Tw_theta(
      const CompletedElt& a, const std::vector<Coweight>& window,
      bool* reconstructed = nullptr) const;

  // Window coefficients of the expansion a = sum_nu H_nu T_{nu.1}:
  // contributions are gathered from every support class between the
  // window class and the certificate, each enumerated up to L.
  struct TExpandResult {
    std::map<Coweight, HWElt> h;
    bool exact = true;
  };
  TExpandResult t_expand_window(const CompletedElt& a,
                                const std::vector<Coweight>& window,
                                int L) const;

  // Centrality checks for the orbit series z = sum weight Z^{W_0 dom}:
  // exact generator identities per orbit point (T_i Z^lambda = Z^lambda T_i
  // on the wall, T_i (Z^lambda + Z^{r_i lambda}) = (Z^lambda +
  // Z^{r_i lambda}) T_i off it) and vanishing of the commutator
  // coefficients of z against the sample elements on the window.
  struct CheckLine {
    std::string name;
    bool pass = false;
  };
  struct CentralReport {
    std::vector<CheckLine> checks;
    bool all_pass = true;
  };
  CentralReport verify_central_window(const Coweight& dom,
                                      const LaurentT& weight,
                                      const std::vector<Coweight>& window,
                                      int L,
                                      const std::vector<BLElt>& samples) const;

  // sum_w c_w T_w Z^z from a finite Hecke coefficient.
  BLElt attach(const HWElt& h, const Coweight& z) const;

 private:
  CompletedElt make(std::function<HWElt(const Coweight&)> fn,
                    std::vector<Coweight> cert, bool exact, int bound,
                    std::string desc) const;

  const BLOps& bl_;
  const SupportOps& sup_;
  const WeylOps& w_;
  const HeckeOps& h_;
  const RootDatum& rd_;
};

}  // namespace hecke
