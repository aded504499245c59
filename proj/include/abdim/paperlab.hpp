#pragma once

#include "abdim/homdim.hpp"

namespace abdim {

// Configuration of the built-in example: a four-variable quotient with a
// scalar twist alpha and the 2x2 twisted complex over it.
struct JSConfig {
  FieldCtx ctx = FieldCtx::prime_field(7);
  Fe alpha = Fe{std::uint64_t{3}};
  int bound = 20;
  int window = 8;
  int max_period = 12;
  int iso_trials = 32;
  std::uint64_t seed = 0;
  int complex_window = 10;  // half-width of the window when alpha has infinite order
  int sample_count = 10;
};

// k[x1..x4] / (a*x1*x3 + x2*x3, x1*x4 + x2*x4, x3*x4, x1^2, x2^2, x3^2, x4^2)
AlgebraPtr js_ring(const JSConfig& cfg);

// Differentials d_i = [[x1, a^i*x3], [x4, x2]]; periodic of period ord(a)
// when alpha has finite multiplicative order, else the window [lo, hi].
PeriodicComplex js_complex(const JSConfig& cfg, long lo, long hi);

// M = Coker d_1.
FPModule js_module(const JSConfig& cfg, AlgebraPtr alg);

struct PerpSampleReport {
  std::string name;
  PerpVerdict perp;
  PValue p;
};

struct ExampleReport {
  std::string field;
  std::string alpha;
  std::optional<int> alpha_order;

  int ring_dim = 0;
  int socle_dim = 0;
  bool gorenstein = false;
  int nilpotency_degree = 0;

  bool complex_periodic = false;
  int complex_period = 0;
  long window_lo = 0, window_hi = 0;
  CompleteResolutionReport complex_report;

  int module_kdim = 0;
  int module_min_gens = 0;
  std::vector<int> betti;  // beta_0..beta_bound
  std::optional<int> period;
  GdimVerdict reflexivity;
  ABdimVerdict ab;
  ArcReport arc;
  std::vector<PerpSampleReport> perp_samples;
};

// Full pipeline: ring stats, complex verification, resolution, periodicity,
// reflexivity, AB-dimension, the self-Ext probe, and perp sampling.
ExampleReport run_js_experiment(const JSConfig& cfg);

// Deterministic stream of nonzero modules with presentation entries in m.
std::vector<FPModule> sample_modules(AlgebraPtr alg, std::uint64_t seed,
                                     int count, int gen_bound, int rel_bound);

}  // namespace abdim
