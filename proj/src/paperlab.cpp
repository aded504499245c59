#include "abdim/paperlab.hpp"

#include <stdexcept>

namespace abdim {

namespace {

Poly mono(const FieldCtx& ctx, int i, int j = -1) {
  Monomial m = Monomial::one(4);
  m.e[i] += 1;
  if (j >= 0) m.e[j] += 1;
  return Poly::term(ctx, m, ctx.one());
}

AlgElem twisted_entry(const LocalAlgebra& A, const Fe& coeff, int var) {
  Poly p = Poly::term(A.ctx(), Monomial::var(4, var), coeff);
  return A.element_from_poly(p);
}

AlgMatrix js_diff(const LocalAlgebra& A, const Fe& alpha, long i) {
  const FieldCtx& ctx = A.ctx();
  AlgMatrix d = alg_zero_matrix(A, 2, 2);
  d.at(0, 0) = twisted_entry(A, ctx.one(), 0);                 // x1
  d.at(0, 1) = twisted_entry(A, ctx.pow(alpha, i), 2);         // a^i x3
  d.at(1, 0) = twisted_entry(A, ctx.one(), 3);                 // x4
  d.at(1, 1) = twisted_entry(A, ctx.one(), 1);                 // x2
  return d;
}

}  // namespace

AlgebraPtr js_ring(const JSConfig& cfg) {
  const FieldCtx& ctx = cfg.ctx;
  if (ctx.is_zero(cfg.alpha))
    throw std::invalid_argument("js_ring: alpha must be nonzero");
  std::vector<Poly> gens;
  gens.push_back(mono(ctx, 0, 2).scaled(cfg.alpha) + mono(ctx, 1, 2));  // a*x1x3 + x2x3
  gens.push_back(mono(ctx, 0, 3) + mono(ctx, 1, 3));                    // x1x4 + x2x4
  gens.push_back(mono(ctx, 2, 3));                                      // x3x4
  gens.push_back(mono(ctx, 0, 0));                                      // x1^2
  gens.push_back(mono(ctx, 1, 1));                                      // x2^2
  gens.push_back(mono(ctx, 2, 2));                                      // x3^2
  gens.push_back(mono(ctx, 3, 3));                                      // x4^2
  return build_algebra({"x1", "x2", "x3", "x4"}, gens, ctx);
}

PeriodicComplex js_complex(const JSConfig& cfg, long lo, long hi) {
  AlgebraPtr alg = js_ring(cfg);
  const FieldCtx& ctx = cfg.ctx;
  PeriodicComplex C;
  C.alg = alg;
  std::optional<int> ord = ctx.multiplicative_order(cfg.alpha);
  if (ord) {
    C.period = *ord;
    for (long i = 0; i < *ord; ++i) C.mats.push_back(js_diff(*alg, cfg.alpha, i));
  } else {
    if (lo > hi) throw std::invalid_argument("js_complex: empty window");
    C.lo = lo;
    for (long i = lo; i <= hi; ++i) C.mats.push_back(js_diff(*alg, cfg.alpha, i));
  }
  return C;
}

FPModule js_module(const JSConfig& cfg, AlgebraPtr alg) {
  AlgMatrix d1 = js_diff(*alg, cfg.alpha, 1);
  return FPModule(std::move(alg), std::move(d1));
}

ExampleReport run_js_experiment(const JSConfig& cfg) {
  ExampleReport rep;
  rep.field = cfg.ctx.describe();
  rep.alpha = cfg.ctx.to_string(cfg.alpha);
  rep.alpha_order = cfg.ctx.multiplicative_order(cfg.alpha);

  AlgebraPtr alg = js_ring(cfg);
  rep.ring_dim = alg->dim();
  rep.socle_dim = socle(*alg).cols();
  rep.gorenstein = is_gorenstein(*alg);
  rep.nilpotency_degree = alg->nilpotency_degree();

  PeriodicComplex C = js_complex(cfg, -cfg.complex_window, cfg.complex_window);
  rep.complex_periodic = C.periodic();
  rep.complex_period = C.period;
  rep.window_lo = C.window_lo();
  rep.window_hi = C.window_hi();
  rep.complex_report = verify_complete_resolution(C);

  FPModule M = js_module(cfg, alg);
  rep.module_kdim = M.kdim();
  rep.module_min_gens = M.min_gens();

  auto cert = detect_periodicity(M, cfg.max_period, cfg.iso_trials, cfg.seed);
  if (cert) rep.period = cert->period;

  int hi = rep.period ? std::max(cfg.bound, *rep.period) : cfg.bound;
  FreeResolution res = minimal_free_resolution(M, hi + 1);
  rep.betti.assign(res.betti.begin(), res.betti.begin() + cfg.bound + 1);

  rep.reflexivity = total_reflexivity(M, cfg.bound, rep.period, std::nullopt,
                                      cfg.seed, cfg.iso_trials);

  ABConfig abcfg;
  abcfg.bound = cfg.bound;
  abcfg.window = cfg.window;
  abcfg.max_period = cfg.max_period;
  abcfg.iso_trials = cfg.iso_trials;
  abcfg.seed = cfg.seed;
  rep.ab = ab_dimension(M, abcfg);

  rep.arc = arc_check(M, cfg.bound, &rep.ab);

  std::vector<std::pair<std::string, FPModule>> probes;
  probes.emplace_back("R", FPModule::free_module(alg, 1));
  probes.emplace_back("k", FPModule::residue_field(alg));
  probes.emplace_back("E", injective_cogenerator(alg));
  probes.emplace_back("syzygy(M)", syzygy(M, 1));
  probes.emplace_back("dual(M)", dual(M));
  auto randoms = sample_modules(alg, cfg.seed, cfg.sample_count, 2, 3);
  for (size_t i = 0; i < randoms.size(); ++i)
    probes.emplace_back("random[" + std::to_string(i) + "]",
                        std::move(randoms[i]));
  for (auto& [name, N] : probes) {
    PerpSampleReport s;
    s.name = name;
    s.perp = in_perp(res, N, cfg.bound, cfg.window, rep.period);
    s.p = p_value(res, N, cfg.bound, cfg.window, rep.period);
    rep.perp_samples.push_back(std::move(s));
  }
  return rep;
}

std::vector<FPModule> sample_modules(AlgebraPtr alg, std::uint64_t seed,
                                     int count, int gen_bound, int rel_bound) {
  if (gen_bound < 1 || rel_bound < 1)
    throw std::invalid_argument("sample_modules: bounds must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<FPModule> out;
  while (static_cast<int>(out.size()) < count) {
    FPModule M = random_module(alg, rng, gen_bound, rel_bound);
    if (!M.is_zero_module()) out.push_back(std::move(M));
  }
  return out;
}

}  // namespace abdim
