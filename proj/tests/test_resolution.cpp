#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abdim/paperlab.hpp"

using namespace abdim;

namespace {

Poly var_pow(const FieldCtx& ctx, int nvars, int v, int e) {
  return Poly::term(ctx, Monomial::var(nvars, v, e), ctx.one());
}

AlgebraPtr ci_ring(const FieldCtx& ctx) {
  return build_algebra({"x", "y"},
                       {var_pow(ctx, 2, 0, 2), var_pow(ctx, 2, 1, 2)}, ctx);
}

JSConfig js_f7() {
  JSConfig cfg;
  cfg.ctx = FieldCtx::prime_field(7);
  cfg.alpha = cfg.ctx.from_int(3);
  return cfg;
}

void check_resolution_integrity(const FreeResolution& res) {
  const LocalAlgebra& A = *res.module.algebra();
  CHECK(res.minimal);
  for (const AlgMatrix& d : res.diffs) CHECK(alg_matrix_in_m(A, d));
  for (size_t i = 0; i + 1 < res.diffs.size(); ++i)
    CHECK(alg_matrix_is_zero(A, alg_mul(A, res.diffs[i], res.diffs[i + 1])));
  // exactness at the free spots: ker_k(d_i) = im_k(d_{i+1})
  for (size_t i = 0; i + 1 < res.diffs.size(); ++i) {
    Matrix fi = alg_to_k(A, res.diffs[i]);
    Matrix fn = alg_to_k(A, res.diffs[i + 1]);
    CHECK(fi.cols() - rank(fi) == rank(fn));
  }
}

}  // namespace

TEST_CASE("resolution of a free module stops immediately") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  FreeResolution res = minimal_free_resolution(FPModule::free_module(A, 3), 5);
  CHECK(res.betti == std::vector<int>{3, 0, 0, 0, 0, 0});
  CHECK(res.minimal);
}

TEST_CASE("resolution of the zero module is zero") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  FreeResolution res = minimal_free_resolution(FPModule::zero(A), 4);
  CHECK(res.betti == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("betti numbers of k over the two-square ring grow linearly") {
  for (bool rational : {false, true}) {
    FieldCtx ctx = rational ? FieldCtx::rationals() : FieldCtx::prime_field(5);
    AlgebraPtr A = ci_ring(ctx);
    FPModule k = FPModule::residue_field(A);
    FreeResolution res = minimal_free_resolution(k, 10);
    for (int i = 0; i <= 10; ++i) CHECK(res.betti[i] == i + 1);
    check_resolution_integrity(res);
  }
}

TEST_CASE("betti numbers of the example module are constant 2 up to 20") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  FreeResolution res = minimal_free_resolution(M, 21);
  for (int i = 0; i <= 21; ++i) CHECK(res.betti[i] == 2);
  check_resolution_integrity(res);
}

TEST_CASE("betti numbers are additive over direct sums") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 3; ++t) {
    FPModule M = random_module(A, rng, 2, 2);
    FPModule N = random_module(A, rng, 2, 2);
    FreeResolution rm = minimal_free_resolution(M, 6);
    FreeResolution rn = minimal_free_resolution(N, 6);
    FreeResolution rs = minimal_free_resolution(direct_sum(M, N), 6);
    for (int i = 0; i <= 6; ++i) CHECK(rs.betti[i] == rm.betti[i] + rn.betti[i]);
  }
}

TEST_CASE("periodicity: the line, the example module, and free modules") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr L =
      build_algebra({"x"}, {var_pow(F, 1, 0, 2)}, F);
  FPModule kL = FPModule::residue_field(L);
  auto cert = detect_periodicity(kL, 4);
  REQUIRE(cert.has_value());
  CHECK(cert->period == 1);

  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  auto cert6 = detect_periodicity(M, 12, 64, 0);
  REQUIRE(cert6.has_value());
  CHECK(cert6->period == 6);
  // no smaller certified period: spell the failures out
  FPModule S = M;
  for (int p = 1; p <= 5; ++p) {
    S = syzygy(S, 1);
    CHECK(is_isomorphic(S, M, 0, 64).kind != IsoVerdict::Yes);
  }
  FPModule S6 = syzygy(S, 1);
  IsoVerdict v6 = is_isomorphic(S6, M, 0, 64);
  REQUIRE(v6.kind == IsoVerdict::Yes);
  CHECK(verify_iso_witness(S6, M, v6.witness));

  CHECK(!detect_periodicity(FPModule::free_module(A, 1), 6).has_value());
}

TEST_CASE("periodicity over GF(13) with an order-6 scalar") {
  JSConfig cfg;
  cfg.ctx = FieldCtx::prime_field(13);
  cfg.alpha = cfg.ctx.from_int(4);  // order 6 mod 13
  REQUIRE(cfg.ctx.multiplicative_order(cfg.alpha) == 6);
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  auto cert = detect_periodicity(M, 12, 64, 0);
  REQUIRE(cert.has_value());
  CHECK(cert->period == 6);
}

TEST_CASE("the twisted complex is periodic exactly when alpha has finite order") {
  JSConfig cfg = js_f7();
  PeriodicComplex C = js_complex(cfg, 0, 0);
  CHECK(C.periodic());
  CHECK(C.period == 6);
  // wrap-around indexing: d_{i+6} = d_i
  CHECK(alg_matrix_eq(*C.alg, C.diff(2), C.diff(8)));
  CHECK(alg_matrix_eq(*C.alg, C.diff(-1), C.diff(5)));
  // d_0 has top-right entry x3 (alpha^0 = 1)
  const AlgMatrix& d0 = C.diff(0);
  Poly x3 = Poly::term(cfg.ctx, Monomial::var(4, 2), cfg.ctx.one());
  AlgElem x3e = C.alg->element_from_poly(x3);
  for (int l = 0; l < C.alg->dim(); ++l)
    CHECK(cfg.ctx.eq(d0.at(0, 1)[l], x3e[l]));

  JSConfig qcfg;
  qcfg.ctx = FieldCtx::rationals();
  qcfg.alpha = qcfg.ctx.from_int(2);
  PeriodicComplex W = js_complex(qcfg, -3, 3);
  CHECK(!W.periodic());
  CHECK(W.window_lo() == -3);
  CHECK(W.window_hi() == 3);
  CHECK_THROWS_AS(W.diff(4), std::out_of_range);
}

TEST_CASE("complete resolution verification over GF(7)") {
  JSConfig cfg = js_f7();
  PeriodicComplex C = js_complex(cfg, 0, 0);
  CompleteResolutionReport rep = verify_complete_resolution(C);
  CHECK(rep.ok());
  REQUIRE(rep.spots.size() == 6);
  for (const SpotReport& s : rep.spots) {
    CHECK(s.composite_zero);
    CHECK(s.ker_dim == 8);
    CHECK(s.im_dim == 8);
    CHECK(s.exact);
    CHECK(s.dual_ker_dim == 8);
    CHECK(s.dual_im_dim == 8);
    CHECK(s.dual_exact);
  }
}

TEST_CASE("composite entries vanish through the defining relations") {
  JSConfig cfg = js_f7();
  PeriodicComplex C = js_complex(cfg, 0, 0);
  const LocalAlgebra& A = *C.alg;
  for (long i = 0; i < 6; ++i) {
    AlgMatrix prod = alg_mul(A, C.diff(i), C.diff(i + 1));
    // entry (0,1) is a^i (a x1x3 + x2x3), entry (1,0) is x1x4 + x2x4
    CHECK(A.elem_is_zero(prod.at(0, 1)));
    CHECK(A.elem_is_zero(prod.at(1, 0)));
    CHECK(alg_matrix_is_zero(A, prod));
  }
}

TEST_CASE("windowed verification over the rationals with alpha = 2") {
  JSConfig cfg;
  cfg.ctx = FieldCtx::rationals();
  cfg.alpha = cfg.ctx.from_int(2);
  PeriodicComplex W = js_complex(cfg, -2, 2);
  CompleteResolutionReport rep = verify_complete_resolution(W);
  CHECK(rep.ok());
  CHECK(rep.spots.size() == 4);  // spots -2..1
}

TEST_CASE("a corrupted differential is reported at a named spot") {
  JSConfig cfg = js_f7();
  PeriodicComplex C = js_complex(cfg, 0, 0);
  C.mats[0].at(0, 0) = C.alg->zero_elem();  // zero out one entry of d_0
  CompleteResolutionReport rep = verify_complete_resolution(C);
  CHECK(!rep.ok());
  bool named = false;
  for (const SpotReport& s : rep.spots)
    if (!s.exact || !s.composite_zero || !s.dual_exact) {
      named = true;
      // spot 0 or 5 must be implicated since d_0 bounds spots 0 and 5
      CHECK((s.index == 0 || s.index == 5));
    }
  CHECK(named);
}

TEST_CASE("shape mismatches are rejected") {
  JSConfig cfg = js_f7();
  PeriodicComplex C = js_complex(cfg, 0, 0);
  AlgMatrix bad = alg_zero_matrix(*C.alg, 3, 2);
  C.mats[3] = bad;
  CHECK_THROWS_AS(verify_complete_resolution(C), std::invalid_argument);
}
