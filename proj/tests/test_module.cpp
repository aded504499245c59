#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abdim/paperlab.hpp"

using namespace abdim;

namespace {

Poly var_pow(const FieldCtx& ctx, int nvars, int v, int e) {
  return Poly::term(ctx, Monomial::var(nvars, v, e), ctx.one());
}

AlgebraPtr ci_ring(const FieldCtx& ctx) {  // k[x,y]/(x^2, y^2)
  return build_algebra({"x", "y"},
                       {var_pow(ctx, 2, 0, 2), var_pow(ctx, 2, 1, 2)}, ctx);
}

AlgebraPtr line2(const FieldCtx& ctx) {  // k[x]/(x^2)
  return build_algebra({"x"}, {var_pow(ctx, 1, 0, 2)}, ctx);
}

JSConfig js_f7() {
  JSConfig cfg;
  cfg.ctx = FieldCtx::prime_field(7);
  cfg.alpha = cfg.ctx.from_int(3);
  return cfg;
}

}  // namespace

TEST_CASE("free module realizes with kdim = rank * dim A") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  FPModule R1 = FPModule::free_module(A, 1);
  CHECK(R1.kdim() == 4);
  CHECK(R1.min_gens() == 1);
  FPModule R3 = FPModule::free_module(A, 3);
  CHECK(R3.kdim() == 12);
  CHECK(R3.min_gens() == 3);
  R1.realization().action.check_laws();
}

TEST_CASE("residue field realizes one-dimensionally with zero variable action") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  FPModule k = FPModule::residue_field(A);
  CHECK(k.kdim() == 1);
  CHECK(k.min_gens() == 1);
  for (int v = 0; v < A->nvars(); ++v)
    CHECK(k.realization().var_act[v].is_zero());
}

TEST_CASE("the example module has kdim 8 = 16 - rank of the presentation") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  // independent rank computation on the flattened presentation
  Matrix flat = alg_to_k(*A, M.presentation());
  CHECK(flat.rows() == 16);
  CHECK(rank(flat) == 8);
  CHECK(M.kdim() == 8);
  CHECK(M.min_gens() == 2);
  M.realization().action.check_laws();
}

TEST_CASE("realizations obey the algebra laws on random modules") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 8; ++t) {
    FPModule M = random_module(A, rng, 3, 3);
    M.realization().action.check_laws();
    CHECK(alg_matrix_in_m(*A, M.presentation()));
  }
}

TEST_CASE("hom dimensions: free source, k to k, k to R") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule R1 = FPModule::free_module(A, 1);
  FPModule M = js_module(cfg, A);
  FPModule k = FPModule::residue_field(A);

  CHECK(hom_basis(R1, M).dim() == M.kdim());
  CHECK(hom_basis(k, k).dim() == 1);
  CHECK(hom_basis(k, R1).dim() == socle(*A).cols());  // = 3

  // every basis element commutes with the variable actions
  HomBasis H = hom_basis(M, k);
  for (const Matrix& phi : H.basis)
    for (int v = 0; v < 4; ++v)
      CHECK(mat_mul(k.realization().var_act[v], phi) ==
            mat_mul(phi, M.realization().var_act[v]));
}

TEST_CASE("Hom(A^g, N) has dimension g * kdim N") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    FPModule N = random_module(A, rng, 2, 2);
    FPModule F2 = FPModule::free_module(A, 2);
    CHECK(hom_basis(F2, N).dim() == 2 * N.kdim());
  }
}

TEST_CASE("nonzero modules always admit a nonzero homomorphism") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    FPModule M = random_module(A, rng, 2, 3);
    FPModule N = random_module(A, rng, 2, 3);
    CHECK(hom_basis(M, N).dim() >= 1);
  }
}

TEST_CASE("duals: free, zero, and residue field") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule R1 = FPModule::free_module(A, 1);
  FPModule D = dual(R1);
  CHECK(D.kdim() == 8);
  CHECK(is_isomorphic(R1, D).kind == IsoVerdict::Yes);
  CHECK(dual(FPModule::zero(A)).kdim() == 0);
  CHECK(dual(FPModule::residue_field(A)).kdim() == socle(*A).cols());
  // dual of A^2 has kdim 2 * dim A
  CHECK(dual(FPModule::free_module(A, 2)).kdim() == 16);
}

TEST_CASE("present_from_realization: regular module, k, and the example module") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);

  ActionData regular;
  regular.alg = A;
  regular.kdim = A->dim();
  for (int j = 0; j < A->dim(); ++j) regular.act.push_back(A->left_mult(j));
  FPModule P = present_from_realization(regular);
  CHECK(P.presentation().rows == 1);
  CHECK(P.presentation().cols == 0);

  ActionData kk;
  kk.alg = A;
  kk.kdim = 1;
  kk.act.push_back(Matrix::identity(cfg.ctx, 1));
  for (int j = 1; j < A->dim(); ++j) kk.act.emplace_back(cfg.ctx, 1, 1);
  FPModule K = present_from_realization(kk);
  CHECK(K.presentation().rows == 1);
  CHECK(K.presentation().cols == A->embedding_dim());

  FPModule M = js_module(cfg, A);
  FPModule M2 = present_from_realization(M.realization().action);
  CHECK(M2.min_gens() == 2);
  CHECK(M2.kdim() == 8);
  CHECK(is_isomorphic(M, M2).kind == IsoVerdict::Yes);
}

TEST_CASE("present_from_realization round-trips kdim on random modules") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 6; ++t) {
    FPModule M = random_module(A, rng, 2, 3);
    FPModule M2 = present_from_realization(M.realization().action);
    CHECK(M2.kdim() == M.kdim());
    CHECK(alg_matrix_in_m(*A, M2.presentation()));
  }
}

TEST_CASE("action-law violations are rejected") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  ActionData bad;
  bad.alg = A;
  bad.kdim = 1;
  bad.act.push_back(Matrix::identity(F, 1));
  for (int j = 1; j < 4; ++j) {
    Matrix m(F, 1, 1);
    m.set(0, 0, F.one());  // x acts as 1 although x^2 = 0
    bad.act.push_back(m);
  }
  CHECK_THROWS_AS(present_from_realization(bad), std::invalid_argument);
}

TEST_CASE("syzygies: free covers, the line, and the exact-sequence dimension count") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  CHECK(syzygy(FPModule::free_module(A, 2), 1).is_zero_module());

  AlgebraPtr L = line2(F);
  FPModule kL = FPModule::residue_field(L);
  FPModule Ok = syzygy(kL, 1);
  CHECK(is_isomorphic(Ok, kL).kind == IsoVerdict::Yes);

  std::mt19937_64 rng(13);
  for (int t = 0; t < 6; ++t) {
    FPModule M = random_module(A, rng, 2, 3);
    FPModule Om = syzygy(M, 1);
    // 0 -> Omega M -> A^g -> M -> 0 with g = min_gens(M)
    CHECK(Om.kdim() == M.min_gens() * A->dim() - M.kdim());
    CHECK(alg_matrix_in_m(*A, Om.presentation()));
  }
}

TEST_CASE("syzygy of the example module is the cokernel of the next differential") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  FPModule Om = syzygy(M, 1);
  CHECK(Om.kdim() == 8);
  // Coker d_2 with d_2 = [[x1, a^2 x3], [x4, x2]]
  PeriodicComplex C = js_complex(cfg, 0, 6);
  FPModule C2(A, C.diff(2));
  CHECK(is_isomorphic(Om, C2, 0, 64).kind == IsoVerdict::Yes);
}

TEST_CASE("biduality holds for the example module") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  FPModule DD = dual(dual(M));
  CHECK(is_isomorphic(M, DD).kind == IsoVerdict::Yes);
}

TEST_CASE("isomorphism verdicts: identity, invariant mismatches, witnesses") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule M = js_module(cfg, A);
  FPModule k = FPModule::residue_field(A);
  FPModule R1 = FPModule::free_module(A, 1);

  IsoVerdict self = is_isomorphic(M, M);
  REQUIRE(self.kind == IsoVerdict::Yes);
  CHECK(verify_iso_witness(M, M, self.witness));

  CHECK(is_isomorphic(k, R1).kind == IsoVerdict::No);  // kdim mismatch
  CHECK(is_isomorphic(M, direct_sum(k, k)).kind == IsoVerdict::No);
  CHECK(is_isomorphic(FPModule::zero(A), FPModule::zero(A)).kind ==
        IsoVerdict::Yes);
}

TEST_CASE("no-verdict from exhaustion: k vs the length-2 cyclic module") {
  // over k[x]/(x^3): both have one generator; k has kdim 1, A/(x^2) kdim 2,
  // so take k + k against A/(x^2): kdim 2 vs 2, min_gens 2 vs 1 -> mismatch;
  // instead compare A/(x^2) with its own dual-ish twin via hom exhaustion
  FieldCtx F = FieldCtx::prime_field(3);
  AlgebraPtr L3 = build_algebra(
      {"x"}, {Poly::term(F, Monomial::var(1, 0, 3), F.one())}, F);
  AlgMatrix p = alg_zero_matrix(*L3, 1, 1);
  p.at(0, 0) = L3->element_from_poly(
      Poly::term(F, Monomial::var(1, 0, 2), F.one()));
  FPModule Mx2(L3, std::move(p));  // A/(x^2), kdim 2
  AlgMatrix q = alg_zero_matrix(*L3, 1, 1);
  q.at(0, 0) = L3->element_from_poly(
      Poly::term(F, Monomial::var(1, 0, 1), F.one()));
  FPModule Mx(L3, std::move(q));  // A/(x) = k... kdim 1
  FPModule kk = direct_sum(Mx, Mx);
  // kdim 2 = 2 but min_gens 1 vs 2: invariant mismatch
  CHECK(is_isomorphic(Mx2, kk).kind == IsoVerdict::No);
  // self-isomorphism via the exhaustive small-field path
  CHECK(is_isomorphic(Mx2, Mx2).kind == IsoVerdict::Yes);
}

TEST_CASE("direct sums add dimensions and Hom spaces") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  std::mt19937_64 rng(17);
  FPModule Z = FPModule::zero(A);
  for (int t = 0; t < 5; ++t) {
    FPModule M = random_module(A, rng, 2, 2);
    FPModule Mp = random_module(A, rng, 2, 2);
    FPModule N = random_module(A, rng, 2, 2);
    CHECK(direct_sum(M, N).kdim() == M.kdim() + N.kdim());
    CHECK(is_isomorphic(direct_sum(M, Z), M).kind == IsoVerdict::Yes);
    CHECK(hom_basis(direct_sum(M, Mp), N).dim() ==
          hom_basis(M, N).dim() + hom_basis(Mp, N).dim());
  }
}

TEST_CASE("injective cogenerator: dimension, generators, Hom(k, E) = k") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  FPModule E = injective_cogenerator(A);
  CHECK(E.kdim() == A->dim());
  CHECK(E.min_gens() == socle(*A).cols());
  E.realization().action.check_laws();
  FPModule k = FPModule::residue_field(A);
  CHECK(hom_basis(k, E).dim() == 1);
}

TEST_CASE("random modules are reproducible under the seed") {
  JSConfig cfg = js_f7();
  AlgebraPtr A = js_ring(cfg);
  std::mt19937_64 r1(99), r2(99);
  for (int t = 0; t < 5; ++t) {
    FPModule M1 = random_module(A, r1, 3, 3);
    FPModule M2 = random_module(A, r2, 3, 3);
    CHECK(alg_matrix_eq(*A, M1.presentation(), M2.presentation()));
    CHECK(alg_matrix_in_m(*A, M1.presentation()));
  }
}

TEST_CASE("zero module edge cases") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = ci_ring(F);
  FPModule Z = FPModule::zero(A);
  CHECK(Z.kdim() == 0);
  CHECK(Z.min_gens() == 0);
  CHECK(syzygy(Z, 3).is_zero_module());
  CHECK(dual(Z).is_zero_module());
  CHECK(hom_basis(Z, FPModule::free_module(A, 1)).dim() == 0);
  CHECK(hom_basis(FPModule::free_module(A, 1), Z).dim() == 0);
  CHECK(direct_sum(Z, Z).is_zero_module());
}
