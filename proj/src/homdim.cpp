#include "abdim/homdim.hpp"

#include <stdexcept>

namespace abdim {

namespace {

// k-matrix of Hom(d, N): Hom(A^{g_prev}, N) -> Hom(A^{g}, N), block (s, t) the
// action of entry d[t][s] on N.
Matrix hom_matrix(const AlgMatrix& d, const FPModule& N) {
  const LocalAlgebra& A = *N.algebra();
  const FieldCtx& ctx = A.ctx();
  int n = N.kdim();
  const ActionData& act = N.realization().action;
  Matrix H(ctx, d.cols * n, d.rows * n);
  for (int s = 0; s < d.cols; ++s)
    for (int t = 0; t < d.rows; ++t) {
      const AlgElem& e = d.at(t, s);
      if (A.elem_is_zero(e)) continue;
      Matrix B = act.act_of(e);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!B.entry_is_zero(i, j)) H.set(s * n + i, t * n + j, B.get(i, j));
    }
  return H;
}

int last_nonzero_index(const ExtTable& t) {
  for (int i = t.hi(); i >= t.lo; --i)
    if (t.at(i) != 0) return i;
  return t.lo - 1;
}

}  // namespace

ExtTable ext_table(const FreeResolution& res, const FPModule& N, int lo, int hi) {
  if (lo < 0 || lo > hi) throw std::invalid_argument("ext_table: bad range");
  if (res.module.algebra() != N.algebra())
    throw std::invalid_argument("ext_table: different algebras");
  if (res.length() < hi + 1)
    throw std::invalid_argument("ext_table: resolution too short");

  ExtTable t;
  t.lo = lo;
  int n = N.kdim();
  if (n == 0 || res.betti[0] == 0) {
    t.dims.assign(static_cast<size_t>(hi - lo + 1), 0);
    return t;
  }

  // rank of Hom(d_i) for i in [max(lo,1), hi+1]; Hom(d_0) has rank 0
  std::vector<int> rk(static_cast<size_t>(hi + 2), 0);
  for (int i = std::max(lo, 1); i <= hi + 1; ++i)
    rk[static_cast<size_t>(i)] = rank(hom_matrix(res.diffs[static_cast<size_t>(i - 1)], N));

  for (int i = lo; i <= hi; ++i) {
    int dim = res.betti[static_cast<size_t>(i)] * n -
              rk[static_cast<size_t>(i + 1)] - rk[static_cast<size_t>(i)];
    if (dim < 0) throw std::logic_error("ext_table: negative dimension");
    t.dims.push_back(dim);
  }
  return t;
}

ExtTable ext_table(const FPModule& M, const FPModule& N, int lo, int hi) {
  FreeResolution res = minimal_free_resolution(M, hi + 1);
  return ext_table(res, N, lo, hi);
}

PValue p_value(const FreeResolution& res, const FPModule& N, int bound,
               int window, std::optional<int> period) {
  if (bound < 1) throw std::invalid_argument("p_value: bound must be >= 1");
  PValue v;
  if (res.betti[0] == 0 || N.is_zero_module()) {
    v.cls = PClass::MinusInfinity;
    return v;
  }
  int hi = period ? std::max(bound, *period) : bound;
  v.evidence = ext_table(res, N, 0, hi);

  if (period) {
    int p = *period;
    if (v.evidence.all_zero(1, p)) {
      // one full period of zeros pushes the vanishing to every i >= 1
      v.cls = PClass::Vanishes;
      v.value = 0;
      v.period_certified = true;
      if (v.evidence.at(0) == 0)
        throw std::logic_error("p_value: Hom of nonzero modules vanished");
    } else {
      v.cls = PClass::UndeterminedAtLeast;
      v.value = bound;
      v.tail_nonzero_certified = true;
    }
    return v;
  }

  if (v.evidence.all_zero(bound - window + 1, bound)) {
    v.cls = PClass::Vanishes;
    v.value = last_nonzero_index(v.evidence);
    if (v.value < 0) throw std::logic_error("p_value: Hom of nonzero modules vanished");
  } else {
    v.cls = PClass::UndeterminedAtLeast;
    v.value = bound;
  }
  return v;
}

PValue p_value(const FPModule& M, const FPModule& N, int bound, int window,
               std::optional<int> period) {
  int hi = period ? std::max(bound, *period) : bound;
  FreeResolution res = minimal_free_resolution(M, hi + 1);
  return p_value(res, N, bound, window, period);
}

PerpVerdict in_perp(const FreeResolution& res_of_m, const FPModule& N, int bound,
                    int window, std::optional<int> period) {
  if (window < 1 || bound < window)
    throw std::invalid_argument("in_perp: need bound >= window >= 1");
  PerpVerdict v;
  if (res_of_m.betti[0] == 0 || N.is_zero_module()) {
    v.kind = PerpKind::CertifiedYes;
    return v;
  }
  if (res_of_m.betti[1] == 0) {
    // free module: Ext^{>0} vanishes identically
    v.kind = PerpKind::CertifiedYes;
    v.evidence = ext_table(res_of_m, N, 0, std::min(bound, res_of_m.length() - 1));
    return v;
  }
  int hi = period ? std::max(bound, *period) : bound;
  v.evidence = ext_table(res_of_m, N, 0, hi);
  if (period) {
    int p = *period;
    if (v.evidence.all_zero(1, p)) {
      v.kind = PerpKind::CertifiedYes;
    } else {
      v.kind = PerpKind::No;
      v.no_certified = true;
      v.witness_index = last_nonzero_index(v.evidence);
    }
    return v;
  }
  if (v.evidence.all_zero(bound - window + 1, bound)) {
    v.kind = PerpKind::WindowYes;
  } else {
    v.kind = PerpKind::No;
    v.witness_index = last_nonzero_index(v.evidence);
  }
  return v;
}

PerpVerdict in_perp(const FPModule& N, const FPModule& M, int bound, int window,
                    std::optional<int> period) {
  int hi = period ? std::max(bound, *period) : bound;
  FreeResolution res = minimal_free_resolution(M, hi + 1);
  return in_perp(res, N, bound, window, period);
}

GdimVerdict total_reflexivity(const FPModule& M, int bound,
                              std::optional<int> period_m,
                              std::optional<int> period_dual,
                              std::uint64_t seed, int trials) {
  if (bound < 1) throw std::invalid_argument("total_reflexivity: bound >= 1");
  GdimVerdict v;
  if (M.is_zero_module()) {
    v.kind = GKind::MinusInfinity;
    return v;
  }
  ReflexivityEvidence& ev = v.evidence;
  ev.bound = bound;

  FPModule D = dual(M);
  FPModule DD = dual(D);
  IsoVerdict iso = is_isomorphic(M, DD, seed, trials);
  ev.bidual_ok = iso.kind == IsoVerdict::Yes;
  if (ev.bidual_ok) ev.bidual_witness = iso.witness;

  FPModule R1 = FPModule::free_module(M.algebra(), 1);

  auto ext_clause = [&](const FPModule& X, std::optional<int> period, bool& ok,
                        bool& certified) {
    int hi = period ? std::max(bound, *period) : bound;
    ExtTable t = ext_table(X, R1, 1, hi);
    if (period) {
      certified = t.all_zero(1, *period);
      ok = certified && t.all_zero(1, hi);
    } else {
      certified = false;
      ok = t.all_zero(1, bound);
    }
  };
  ext_clause(M, period_m, ev.ext_m_vanishes, ev.ext_m_certified);
  ext_clause(D, period_dual, ev.ext_dual_vanishes, ev.ext_dual_certified);

  if (ev.bidual_ok && ev.ext_m_vanishes && ev.ext_dual_vanishes) {
    v.kind = GKind::Zero;
  } else {
    v.kind = GKind::Unknown;
    if (!ev.bidual_ok)
      ev.failing = "biduality not verified (" + iso.reason + ")";
    else if (!ev.ext_m_vanishes)
      ev.failing = "Ext^i(M, R) != 0 for some i in [1, " + std::to_string(bound) + "]";
    else
      ev.failing = "Ext^i(dual M, R) != 0 for some i in [1, " + std::to_string(bound) + "]";
  }
  return v;
}

GdimVerdict g_dimension(const FPModule& M, int bound,
                        std::optional<int> period_m,
                        std::optional<int> period_dual, std::uint64_t seed,
                        int trials) {
  return total_reflexivity(M, bound, period_m, period_dual, seed, trials);
}

ABdimVerdict ab_dimension(const FPModule& M, const ABConfig& cfg) {
  ABdimVerdict v;
  if (M.is_zero_module()) {
    v.kind = ABKind::MinusInfinity;
    v.rule = "zero module";
    return v;
  }

  FPModule Om = syzygy(M, 1);
  bool free = Om.is_zero_module();

  std::optional<int> period;
  if (!free) {
    auto cert = detect_periodicity(M, cfg.max_period, cfg.iso_trials, cfg.seed);
    if (cert) period = cert->period;
  }

  v.gdim = total_reflexivity(M, cfg.bound, period, std::nullopt, cfg.seed,
                             cfg.iso_trials);
  v.period = period;

  if (free) {
    v.kind = ABKind::CertifiedZero;
    v.rule = "finite projective dimension: M is free, so P(M) = 0";
  } else if (v.gdim.kind == GKind::Zero && period) {
    v.kind = ABKind::CertifiedZero;
    v.rule = "certified period " + std::to_string(*period) +
             " with total reflexivity: Ext periodicity forces P(M) = 0";
  } else {
    v.kind = ABKind::Unknown;
    if (v.gdim.kind != GKind::Zero)
      v.rule = "total reflexivity not certified";
    else
      v.rule = "no period certified within max_period = " +
               std::to_string(cfg.max_period);
  }

  // empirical evidence over the default sample set
  int hi = period ? std::max(cfg.bound, *period) : cfg.bound;
  FreeResolution res = minimal_free_resolution(M, hi + 1);
  std::vector<std::pair<std::string, FPModule>> samples;
  samples.emplace_back("R", FPModule::free_module(M.algebra(), 1));
  samples.emplace_back("k", FPModule::residue_field(M.algebra()));
  samples.emplace_back("syzygy(M)", Om);
  samples.emplace_back("syzygy^2(M)", syzygy(Om, 1));
  samples.emplace_back("dual(M)", dual(M));
  samples.emplace_back("dual(syzygy(M))", dual(Om));
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.random_samples; ++i)
    samples.emplace_back("random[" + std::to_string(i) + "]",
                         random_module(M.algebra(), rng, 2, 3));
  for (auto& [name, N] : samples) {
    ABSample s;
    s.name = name;
    s.perp = in_perp(res, N, cfg.bound, cfg.window, period);
    s.p = p_value(res, N, cfg.bound, cfg.window, period);
    v.samples.push_back(std::move(s));
  }
  return v;
}

ArcReport arc_check(const FPModule& M, int bound, const ABdimVerdict* ab) {
  if (bound < 1) throw std::invalid_argument("arc_check: bound >= 1");
  ArcReport rep;
  if (M.is_zero_module()) {
    rep.free_module = true;
    rep.self_ext_window_zero = true;
    return rep;
  }
  FreeResolution res = minimal_free_resolution(M, bound + 1);
  rep.self_ext = ext_table(res, M, 1, bound);
  rep.self_ext_window_zero = rep.self_ext.all_zero(1, bound);
  FPModule Om = syzygy(M, 1);
  rep.free_module = Om.is_zero_module();
  rep.syzygy_ext1 = rep.free_module ? 0 : ext_table(res, Om, 1, 1).at(1);

  ABdimVerdict local;
  if (!ab) {
    ABConfig cfg;
    cfg.bound = bound;
    local = ab_dimension(M, cfg);
    ab = &local;
  }
  rep.expect_free =
      rep.self_ext_window_zero && ab->kind == ABKind::CertifiedZero;
  rep.consistent = !(rep.expect_free && !rep.free_module);
  return rep;
}

}  // namespace abdim
