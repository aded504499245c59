#pragma once

#include "abdim/module.hpp"

namespace abdim {

// Minimal free resolution data: d_1..d_n as matrices over the algebra and
// the corresponding ranks beta_0..beta_n.
struct FreeResolution {
  FPModule module;
  std::vector<AlgMatrix> diffs;
  std::vector<int> betti;
  bool minimal = true;

  explicit FreeResolution(FPModule m) : module(std::move(m)) {}
  int length() const { return static_cast<int>(diffs.size()); }
};

// Each kernel is minimally re-presented, so the ranks are the Betti numbers.
FreeResolution minimal_free_resolution(const FPModule& M, int n);

// Doubly infinite complex of free modules. period > 0 means d_{i+period} =
// d_i with mats holding d_0..d_{period-1}; period == 0 is a finite window
// starting at index lo.
struct PeriodicComplex {
  AlgebraPtr alg;
  int period = 0;
  long lo = 0;
  std::vector<AlgMatrix> mats;

  bool periodic() const { return period > 0; }
  long window_lo() const { return periodic() ? 0 : lo; }
  long window_hi() const {
    return window_lo() + static_cast<long>(mats.size()) - 1;
  }
  const AlgMatrix& diff(long i) const;
};

struct SpotReport {
  long index = 0;
  bool composite_zero = false;
  int ker_dim = 0, im_dim = 0;
  bool exact = false;
  int dual_ker_dim = 0, dual_im_dim = 0;
  bool dual_exact = false;
};

struct CompleteResolutionReport {
  bool composites_zero = true;
  bool exact = true;
  bool dual_exact = true;
  std::vector<SpotReport> spots;
  bool ok() const { return composites_zero && exact && dual_exact; }
};

// Checks d_i d_{i+1} = 0, exactness, and exactness of the transposed complex
// at every spot of one full period (or of the stored window).
CompleteResolutionReport verify_complete_resolution(const PeriodicComplex& C);

struct PeriodCertificate {
  int period = 0;
  Matrix witness;  // verified isomorphism syzygy^p(M) -> M
};

// Smallest certified p <= max_period with syzygy^p(M) isomorphic to M.
// Unknown isomorphism verdicts count as failures, so a result is sound but
// absence is not a proof.
std::optional<PeriodCertificate> detect_periodicity(const FPModule& M,
                                                    int max_period,
                                                    int trials = 32,
                                                    std::uint64_t seed = 0);

}  // namespace abdim
