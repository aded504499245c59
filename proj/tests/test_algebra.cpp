#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abdim/algebra.hpp"

using namespace abdim;

namespace {

Poly var_pow(const FieldCtx& ctx, int nvars, int v, int e) {
  return Poly::term(ctx, Monomial::var(nvars, v, e), ctx.one());
}

AlgebraPtr truncated_line(const FieldCtx& ctx, int n) {  // k[x]/(x^n)
  return build_algebra({"x"}, {var_pow(ctx, 1, 0, n)}, ctx);
}

AlgebraPtr two_square_ci(const FieldCtx& ctx) {  // k[x,y]/(x^2, y^2)
  return build_algebra({"x", "y"},
                       {var_pow(ctx, 2, 0, 2), var_pow(ctx, 2, 1, 2)}, ctx);
}

Poly mono2(const FieldCtx& ctx, int i, int j, const Fe& c) {
  Monomial m = Monomial::one(4);
  m.e[i] += 1;
  m.e[j] += 1;
  return Poly::term(ctx, m, c);
}

AlgebraPtr example_ring(const FieldCtx& ctx, const Fe& alpha) {
  std::vector<Poly> g;
  g.push_back(mono2(ctx, 0, 2, alpha) + mono2(ctx, 1, 2, ctx.one()));
  g.push_back(mono2(ctx, 0, 3, ctx.one()) + mono2(ctx, 1, 3, ctx.one()));
  g.push_back(mono2(ctx, 2, 3, ctx.one()));
  g.push_back(mono2(ctx, 0, 0, ctx.one()));
  g.push_back(mono2(ctx, 1, 1, ctx.one()));
  g.push_back(mono2(ctx, 2, 2, ctx.one()));
  g.push_back(mono2(ctx, 3, 3, ctx.one()));
  return build_algebra({"x1", "x2", "x3", "x4"}, g, ctx);
}

}  // namespace

TEST_CASE("k[x]/(x^3): dimension, nilpotency, socle") {
  FieldCtx Q = FieldCtx::rationals();
  AlgebraPtr A = truncated_line(Q, 3);
  CHECK(A->dim() == 3);
  CHECK(A->nilpotency_degree() == 3);
  CHECK(A->embedding_dim() == 1);
  Matrix s = socle(*A);
  REQUIRE(s.cols() == 1);
  // socle spanned by x^2 (basis index 2)
  CHECK(Q.is_zero(s.get(0, 0)));
  CHECK(Q.is_zero(s.get(1, 0)));
  CHECK(!Q.is_zero(s.get(2, 0)));
  CHECK(is_gorenstein(*A));
}

TEST_CASE("k[x,y]/(x^2,y^2) over GF(5): basis 1,x,y,xy") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = two_square_ci(F);
  CHECK(A->dim() == 4);
  CHECK(A->nilpotency_degree() == 3);
  CHECK(A->basis()[0].is_one());
  CHECK(A->basis()[3].degree() == 2);
  CHECK(socle(*A).cols() == 1);
  CHECK(is_gorenstein(*A));
  CHECK(A->embedding_dim() == 2);
}

TEST_CASE("example ring: dim 8, socle 3, not Gorenstein, m^3 = 0") {
  FieldCtx F = FieldCtx::prime_field(7);
  AlgebraPtr A = example_ring(F, F.from_int(3));
  CHECK(A->dim() == 8);
  CHECK(A->nilpotency_degree() == 3);
  CHECK(socle(*A).cols() == 3);
  CHECK(!is_gorenstein(*A));
  CHECK(A->embedding_dim() == 4);

  // socle columns really annihilate every variable
  Matrix s = socle(*A);
  for (int c = 0; c < s.cols(); ++c)
    for (int v = 0; v < 4; ++v)
      CHECK(A->elem_is_zero(A->multiply(s.col(c), A->var_image(v))));

  // m^2 lies inside the socle: adding its spanning vectors gains no rank
  Matrix both(F, 8, s.cols() + 3);
  for (int c = 0; c < s.cols(); ++c) both.set_col(c, s.col(c));
  for (int i = 5; i < 8; ++i) {
    std::vector<Fe> e(8, F.zero());
    e[i] = F.one();
    both.set_col(s.cols() + (i - 5), e);
  }
  CHECK(rank(both) == s.cols());
}

TEST_CASE("the example ring stats are alpha-independent") {
  FieldCtx F5 = FieldCtx::prime_field(5);
  for (int a = 1; a <= 4; ++a) {
    AlgebraPtr A = example_ring(F5, F5.from_int(a));
    CHECK(A->dim() == 8);
    CHECK(socle(*A).cols() == 3);
  }
  FieldCtx Q = FieldCtx::rationals();
  AlgebraPtr A = example_ring(Q, Q.from_int(2));
  CHECK(A->dim() == 8);
  CHECK(socle(*A).cols() == 3);
  CHECK(!is_gorenstein(*A));
}

TEST_CASE("multiply: unital, commutative, and x3*x4 = 0 in the example ring") {
  FieldCtx F = FieldCtx::prime_field(7);
  AlgebraPtr A = example_ring(F, F.from_int(3));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Fe> u(8, F.zero()), v(8, F.zero());
    for (int i = 0; i < 8; ++i) {
      u[i] = F.sample(rng);
      v[i] = F.sample(rng);
    }
    auto uv = A->multiply(u, v);
    auto vu = A->multiply(v, u);
    for (int i = 0; i < 8; ++i) CHECK(F.eq(uv[i], vu[i]));
    auto one_v = A->multiply(A->one_elem(), v);
    for (int i = 0; i < 8; ++i) CHECK(F.eq(one_v[i], v[i]));
  }
  CHECK(A->elem_is_zero(A->multiply(A->var_image(2), A->var_image(3))));
}

TEST_CASE("associativity on all basis triples") {
  FieldCtx F = FieldCtx::prime_field(7);
  for (AlgebraPtr A : {example_ring(F, F.from_int(3)), two_square_ci(F)}) {
    int d = A->dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
          std::vector<Fe> bi(d, F.zero()), bj(d, F.zero()), bl(d, F.zero());
          bi[i] = F.one();
          bj[j] = F.one();
          bl[l] = F.one();
          auto left = A->multiply(A->multiply(bi, bj), bl);
          auto right = A->multiply(bi, A->multiply(bj, bl));
          for (int t = 0; t < d; ++t) CHECK(F.eq(left[t], right[t]));
        }
  }
}

TEST_CASE("m^(N-1) is nonzero and inside the socle") {
  FieldCtx F = FieldCtx::prime_field(7);
  AlgebraPtr A = example_ring(F, F.from_int(3));
  // N = 3: some product of two variables is nonzero
  bool some_nonzero = false;
  for (int v = 0; v < 4 && !some_nonzero; ++v)
    for (int w = 0; w < 4 && !some_nonzero; ++w)
      some_nonzero = !A->elem_is_zero(A->multiply(A->var_image(v), A->var_image(w)));
  CHECK(some_nonzero);
}

TEST_CASE("truncated lines are Gorenstein for n = 2..6") {
  FieldCtx Q = FieldCtx::rationals();
  for (int n = 2; n <= 6; ++n) {
    AlgebraPtr A = truncated_line(Q, n);
    CHECK(A->dim() == n);
    CHECK(A->nilpotency_degree() == n);
    CHECK(is_gorenstein(*A));
  }
}

TEST_CASE("constant-term generators are rejected") {
  FieldCtx Q = FieldCtx::rationals();
  Poly bad = var_pow(Q, 1, 0, 2) + Poly::constant(Q, 1, Q.one());
  CHECK_THROWS_AS(build_algebra({"x"}, {bad}, Q), std::invalid_argument);
}

TEST_CASE("non-local finite quotients are rejected") {
  FieldCtx Q = FieldCtx::rationals();
  // x^2 - x: finite-dimensional but x is idempotent, not nilpotent
  Poly f = var_pow(Q, 1, 0, 2) - var_pow(Q, 1, 0, 1);
  CHECK_THROWS_AS(build_algebra({"x"}, {f}, Q), NotLocalError);
}

TEST_CASE("infinite-dimensional quotients are rejected") {
  FieldCtx Q = FieldCtx::rationals();
  CHECK_THROWS_AS(build_algebra({"x", "y"}, {var_pow(Q, 2, 0, 2)}, Q),
                  InfiniteDimensionalError);
}

TEST_CASE("left multiplication matrices match the product") {
  FieldCtx F = FieldCtx::prime_field(5);
  AlgebraPtr A = two_square_ci(F);
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    std::vector<Fe> u(4, F.zero()), v(4, F.zero());
    for (int i = 0; i < 4; ++i) {
      u[i] = F.sample(rng);
      v[i] = F.sample(rng);
    }
    auto direct = A->multiply(u, v);
    auto via_matrix = mat_vec(A->left_mult_of(u), v);
    for (int i = 0; i < 4; ++i) CHECK(F.eq(direct[i], via_matrix[i]));
  }
}
