#include "abdim/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace abdim {

AlgMatrix alg_zero_matrix(const LocalAlgebra& A, int rows, int cols) {
  AlgMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.entries.assign(static_cast<size_t>(rows) * cols, A.zero_elem());
  return m;
}

AlgMatrix alg_mul(const LocalAlgebra& A, const AlgMatrix& X, const AlgMatrix& Y) {
  if (X.cols != Y.rows) throw std::invalid_argument("alg_mul: shape mismatch");
  AlgMatrix Z = alg_zero_matrix(A, X.rows, Y.cols);
  for (int i = 0; i < X.rows; ++i)
    for (int k = 0; k < X.cols; ++k) {
      if (A.elem_is_zero(X.at(i, k))) continue;
      for (int j = 0; j < Y.cols; ++j) {
        if (A.elem_is_zero(Y.at(k, j))) continue;
        Z.at(i, j) = A.add_elem(Z.at(i, j), A.multiply(X.at(i, k), Y.at(k, j)));
      }
    }
  return Z;
}

AlgMatrix alg_transpose(const AlgMatrix& X) {
  AlgMatrix T;
  T.rows = X.cols;
  T.cols = X.rows;
  T.entries.resize(X.entries.size());
  for (int i = 0; i < X.rows; ++i)
    for (int j = 0; j < X.cols; ++j) T.at(j, i) = X.at(i, j);
  return T;
}

bool alg_matrix_is_zero(const LocalAlgebra& A, const AlgMatrix& X) {
  for (const AlgElem& e : X.entries)
    if (!A.elem_is_zero(e)) return false;
  return true;
}

bool alg_matrix_eq(const LocalAlgebra& A, const AlgMatrix& X, const AlgMatrix& Y) {
  if (X.rows != Y.rows || X.cols != Y.cols) return false;
  const FieldCtx& ctx = A.ctx();
  for (size_t k = 0; k < X.entries.size(); ++k)
    for (int l = 0; l < A.dim(); ++l)
      if (!ctx.eq(X.entries[k][l], Y.entries[k][l])) return false;
  return true;
}

bool alg_matrix_in_m(const LocalAlgebra& A, const AlgMatrix& X) {
  for (const AlgElem& e : X.entries)
    if (!A.elem_in_m(e)) return false;
  return true;
}

Matrix alg_to_k(const LocalAlgebra& A, const AlgMatrix& X) {
  const FieldCtx& ctx = A.ctx();
  int d = A.dim();
  Matrix K(ctx, X.rows * d, X.cols * d);
  for (int i = 0; i < X.rows; ++i)
    for (int j = 0; j < X.cols; ++j) {
      if (A.elem_is_zero(X.at(i, j))) continue;
      Matrix L = A.left_mult_of(X.at(i, j));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
          if (!L.entry_is_zero(r, c)) K.set(i * d + r, j * d + c, L.get(r, c));
    }
  return K;
}

Matrix ActionData::act_of(const AlgElem& a) const {
  const FieldCtx& ctx = alg->ctx();
  Matrix M(ctx, kdim, kdim);
  for (int j = 0; j < alg->dim(); ++j) {
    if (ctx.is_zero(a[j])) continue;
    for (int r = 0; r < kdim; ++r)
      for (int c = 0; c < kdim; ++c) {
        if (act[j].entry_is_zero(r, c)) continue;
        M.set(r, c, ctx.add(M.get(r, c), ctx.mul(a[j], act[j].get(r, c))));
      }
  }
  return M;
}

void ActionData::check_laws() const {
  const LocalAlgebra& A = *alg;
  const FieldCtx& ctx = A.ctx();
  int d = A.dim();
  if (static_cast<int>(act.size()) != d)
    throw std::invalid_argument("action data: wrong number of matrices");
  for (const Matrix& m : act)
    if (m.rows() != kdim || m.cols() != kdim)
      throw std::invalid_argument("action data: matrix shape mismatch");
  if (kdim > 0 && !(act[0] == Matrix::identity(ctx, kdim)))
    throw std::invalid_argument("action data: unit does not act as identity");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix lhs = mat_mul(act[i], act[j]);
      Matrix rhs(ctx, kdim, kdim);
      const std::vector<Fe>& t = A.mult(i, j);
      for (int l = 0; l < d; ++l) {
        if (ctx.is_zero(t[l])) continue;
        for (int r = 0; r < kdim; ++r)
          for (int c = 0; c < kdim; ++c) {
            if (act[l].entry_is_zero(r, c)) continue;
            rhs.set(r, c, ctx.add(rhs.get(r, c), ctx.mul(t[l], act[l].get(r, c))));
          }
      }
      if (!(lhs == rhs))
        throw std::invalid_argument(
            "action data: matrices violate the structure constants");
    }
}

std::vector<Fe> Realization::project(std::vector<Fe> v) const {
  const FieldCtx& ctx = rel_rref.ctx();
  for (size_t t = 0; t < rel_pivots.size(); ++t) {
    Fe c = v[rel_pivots[t]];
    if (ctx.is_zero(c)) continue;
    for (int j = 0; j < rel_rref.cols(); ++j) {
      if (rel_rref.entry_is_zero(static_cast<int>(t), j)) continue;
      v[j] = ctx.sub(v[j], ctx.mul(c, rel_rref.get(static_cast<int>(t), j)));
    }
  }
  std::vector<Fe> out;
  out.reserve(free_coords.size());
  for (int f : free_coords) out.push_back(v[f]);
  return out;
}

namespace {

Realization realize(const AlgebraPtr& alg, const AlgMatrix& P) {
  const LocalAlgebra& A = *alg;
  const FieldCtx& ctx = A.ctx();
  int d = A.dim();
  int g = P.rows;
  int gd = g * d;

  Realization rz;
  rz.action.alg = alg;

  Matrix S = alg_to_k(A, P);  // columns span the relation subspace
  RrefResult ru = rref(transpose(S));
  Matrix rows(ctx, ru.rank, gd);
  for (int i = 0; i < ru.rank; ++i)
    for (int j = 0; j < gd; ++j)
      if (!ru.R.entry_is_zero(i, j)) rows.set(i, j, ru.R.get(i, j));
  rz.rel_rref = std::move(rows);
  rz.rel_pivots = ru.pivots;

  std::vector<bool> is_pivot(gd, false);
  for (int p : ru.pivots) is_pivot[p] = true;
  for (int f = 0; f < gd; ++f)
    if (!is_pivot[f]) rz.free_coords.push_back(f);
  int kd = static_cast<int>(rz.free_coords.size());
  rz.action.kdim = kd;

  for (int j = 0; j < d; ++j) {
    Matrix T(ctx, kd, kd);
    for (int fc = 0; fc < kd; ++fc) {
      int f = rz.free_coords[fc];
      int s = f / d, i = f % d;
      std::vector<Fe> amb(gd, ctx.zero());
      const std::vector<Fe>& prod = A.mult(j, i);
      for (int l = 0; l < d; ++l) amb[s * d + l] = prod[l];
      std::vector<Fe> w = rz.project(std::move(amb));
      for (int r = 0; r < kd; ++r)
        if (!ctx.is_zero(w[r])) T.set(r, fc, w[r]);
    }
    rz.action.act.push_back(std::move(T));
  }

  for (int v = 0; v < A.nvars(); ++v)
    rz.var_act.push_back(rz.action.act_of(A.var_image(v)));

  rz.gen_images = Matrix(ctx, kd, g);
  for (int s = 0; s < g; ++s) {
    std::vector<Fe> amb(gd, ctx.zero());
    amb[s * d] = ctx.one();
    rz.gen_images.set_col(s, rz.project(std::move(amb)));
  }

  rz.min_gens = kd == 0 ? 0 : minimal_generators(rz.action).cols();
  return rz;
}

FPModule present_unchecked(const ActionData& W) {
  Matrix gens = minimal_generators(W);
  CoverStep cs = cover_and_kernel(W, gens);
  return FPModule(W.alg, cs.diff);
}

}  // namespace

FPModule::FPModule(AlgebraPtr alg, AlgMatrix presentation)
    : alg_(std::move(alg)), pres_(std::move(presentation)) {
  int d = alg_->dim();
  if (static_cast<size_t>(pres_.rows) * pres_.cols != pres_.entries.size())
    throw std::invalid_argument("presentation: entry count mismatch");
  for (const AlgElem& e : pres_.entries)
    if (static_cast<int>(e.size()) != d)
      throw std::invalid_argument("presentation: entry is not an algebra element");
  rz_ = realize(alg_, pres_);
}

FPModule FPModule::free_module(AlgebraPtr alg, int rank) {
  AlgMatrix p = alg_zero_matrix(*alg, rank, 0);
  return FPModule(std::move(alg), std::move(p));
}

FPModule FPModule::zero(AlgebraPtr alg) {
  AlgMatrix p = alg_zero_matrix(*alg, 0, 0);
  return FPModule(std::move(alg), std::move(p));
}

FPModule FPModule::residue_field(AlgebraPtr alg) {
  const LocalAlgebra& A = *alg;
  const auto& gens = A.m_min_gens();
  AlgMatrix p = alg_zero_matrix(A, 1, static_cast<int>(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) p.at(0, static_cast<int>(c)) = gens[c];
  return FPModule(std::move(alg), std::move(p));
}

Matrix minimal_generators(const ActionData& W) {
  const LocalAlgebra& A = *W.alg;
  const FieldCtx& ctx = A.ctx();
  int kd = W.kdim, d = A.dim();
  Matrix span(ctx, kd, kd * (d - 1));
  int col = 0;
  for (int i = 1; i < d; ++i)
    for (int c = 0; c < kd; ++c) span.set_col(col++, W.act[i].col(c));
  RrefResult r = rref(transpose(span));
  std::vector<bool> pivot(kd, false);
  for (int p : r.pivots) pivot[p] = true;
  Matrix gens(ctx, kd, kd - r.rank);
  int gcol = 0;
  for (int f = 0; f < kd; ++f)
    if (!pivot[f]) gens.set(f, gcol++, ctx.one());
  return gens;
}

CoverStep cover_and_kernel(const ActionData& W, const Matrix& gens) {
  const LocalAlgebra& A = *W.alg;
  const FieldCtx& ctx = A.ctx();
  int d = A.dim(), g = gens.cols();

  CoverStep cs;
  cs.g = g;
  cs.cover = Matrix(ctx, W.kdim, g * d);
  for (int j = 0; j < d; ++j) {
    Matrix Pj = mat_mul(W.act[j], gens);
    for (int s = 0; s < g; ++s) cs.cover.set_col(s * d + j, Pj.col(s));
  }
  cs.kernel = kernel_basis(cs.cover);
  int kd2 = cs.kernel.cols();

  // the kernel is a submodule: transport the block action into its coordinates
  Matrix rhs(ctx, g * d, kd2 * d);
  for (int j = 0; j < d; ++j) {
    const Matrix& L = A.left_mult(j);
    for (int c = 0; c < kd2; ++c)
      for (int s = 0; s < g; ++s)
        for (int r = 0; r < d; ++r) {
          Fe acc = ctx.zero();
          for (int i = 0; i < d; ++i) {
            if (L.entry_is_zero(r, i) || cs.kernel.entry_is_zero(s * d + i, c))
              continue;
            acc = ctx.add(acc, ctx.mul(L.get(r, i), cs.kernel.get(s * d + i, c)));
          }
          if (!ctx.is_zero(acc)) rhs.set(s * d + r, j * kd2 + c, acc);
        }
  }
  auto X = solve_linear_many(cs.kernel, rhs);
  if (!X) throw std::logic_error("kernel is not closed under the action");
  cs.kernel_act.alg = W.alg;
  cs.kernel_act.kdim = kd2;
  for (int j = 0; j < d; ++j) {
    Matrix T(ctx, kd2, kd2);
    for (int r = 0; r < kd2; ++r)
      for (int c = 0; c < kd2; ++c)
        if (!X->entry_is_zero(r, j * kd2 + c)) T.set(r, c, X->get(r, j * kd2 + c));
    cs.kernel_act.act.push_back(std::move(T));
  }

  cs.kernel_gens = minimal_generators(cs.kernel_act);
  int nrel = cs.kernel_gens.cols();
  cs.diff = alg_zero_matrix(A, g, nrel);
  for (int t = 0; t < nrel; ++t) {
    int f = -1;  // unit column: locate the generator's kernel coordinate
    for (int r = 0; r < kd2; ++r)
      if (!cs.kernel_gens.entry_is_zero(r, t)) {
        f = r;
        break;
      }
    for (int s = 0; s < g; ++s) {
      AlgElem e = A.zero_elem();
      for (int l = 0; l < d; ++l) e[l] = cs.kernel.get(s * d + l, f);
      cs.diff.at(s, t) = std::move(e);
    }
  }
  return cs;
}

FPModule present_from_realization(const ActionData& W) {
  W.check_laws();
  return present_unchecked(W);
}

FPModule syzygy(const FPModule& M, int n) {
  if (n < 0) throw std::invalid_argument("syzygy: negative index");
  if (n == 0) return M;
  ActionData W = M.realization().action;
  for (int s = 0; s < n; ++s) {
    Matrix gens = minimal_generators(W);
    CoverStep cs = cover_and_kernel(W, gens);
    W = std::move(cs.kernel_act);
  }
  return present_unchecked(W);
}

FPModule direct_sum(const FPModule& M, const FPModule& N) {
  if (M.algebra() != N.algebra())
    throw std::invalid_argument("direct_sum: different algebras");
  const LocalAlgebra& A = *M.algebra();
  const AlgMatrix &P = M.presentation(), &Q = N.presentation();
  AlgMatrix S = alg_zero_matrix(A, P.rows + Q.rows, P.cols + Q.cols);
  for (int i = 0; i < P.rows; ++i)
    for (int j = 0; j < P.cols; ++j) S.at(i, j) = P.at(i, j);
  for (int i = 0; i < Q.rows; ++i)
    for (int j = 0; j < Q.cols; ++j) S.at(P.rows + i, P.cols + j) = Q.at(i, j);
  return FPModule(M.algebra(), std::move(S));
}

HomBasis hom_basis(const FPModule& M, const FPModule& N) {
  if (M.algebra() != N.algebra())
    throw std::invalid_argument("hom_basis: different algebras");
  const LocalAlgebra& A = *M.algebra();
  const FieldCtx& ctx = A.ctx();
  int m = M.kdim(), n = N.kdim();
  HomBasis H;
  if (m == 0 || n == 0) return H;

  int nv = A.nvars();
  int unknowns = n * m;
  Matrix C(ctx, nv * unknowns, unknowns);
  for (int v = 0; v < nv; ++v) {
    const Matrix& AM = M.realization().var_act[v];
    const Matrix& AN = N.realization().var_act[v];
    int base = v * unknowns;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        int row = base + i * m + j;
        for (int l = 0; l < n; ++l)
          if (!AN.entry_is_zero(i, l))
            C.set(row, l * m + j, ctx.add(C.get(row, l * m + j), AN.get(i, l)));
        for (int l = 0; l < m; ++l)
          if (!AM.entry_is_zero(l, j))
            C.set(row, i * m + l,
                  ctx.sub(C.get(row, i * m + l), AM.get(l, j)));
      }
  }
  Matrix K = kernel_basis(C);
  for (int c = 0; c < K.cols(); ++c) {
    Matrix phi(ctx, n, m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (!K.entry_is_zero(i * m + j, c)) phi.set(i, j, K.get(i * m + j, c));
    H.basis.push_back(std::move(phi));
  }
  return H;
}

ActionData hom_action(const FPModule& M, const FPModule& N, const HomBasis& H) {
  const LocalAlgebra& A = *M.algebra();
  const FieldCtx& ctx = A.ctx();
  int m = M.kdim(), n = N.kdim(), h = H.dim(), d = A.dim();

  ActionData W;
  W.alg = M.algebra();
  W.kdim = h;
  if (h == 0) {
    for (int j = 0; j < d; ++j) W.act.emplace_back(ctx, 0, 0);
    return W;
  }

  Matrix B(ctx, n * m, h);
  for (int t = 0; t < h; ++t)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j)
        if (!H.basis[t].entry_is_zero(i, j)) B.set(i * m + j, t, H.basis[t].get(i, j));

  Matrix rhs(ctx, n * m, h * d);
  for (int jb = 0; jb < d; ++jb) {
    const Matrix& act_target = N.realization().action.act[jb];
    for (int t = 0; t < h; ++t) {
      Matrix img = mat_mul(act_target, H.basis[t]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          if (!img.entry_is_zero(i, j)) rhs.set(i * m + j, jb * h + t, img.get(i, j));
    }
  }
  auto X = solve_linear_many(B, rhs);
  if (!X) throw std::logic_error("Hom space is not closed under the action");
  for (int jb = 0; jb < d; ++jb) {
    Matrix T(ctx, h, h);
    for (int r = 0; r < h; ++r)
      for (int c = 0; c < h; ++c)
        if (!X->entry_is_zero(r, jb * h + c)) T.set(r, c, X->get(r, jb * h + c));
    W.act.push_back(std::move(T));
  }
  return W;
}

FPModule dual(const FPModule& M) {
  FPModule R1 = FPModule::free_module(M.algebra(), 1);
  HomBasis H = hom_basis(M, R1);
  ActionData W = hom_action(M, R1, H);
  Matrix gens = minimal_generators(W);
  CoverStep cs = cover_and_kernel(W, gens);
  return FPModule(M.algebra(), cs.diff);
}

bool verify_iso_witness(const FPModule& M, const FPModule& N, const Matrix& W) {
  if (M.algebra() != N.algebra()) return false;
  int m = M.kdim(), n = N.kdim();
  if (m != n) return false;
  if (W.rows() != n || W.cols() != m) return false;
  if (m == 0) return true;
  if (rank(W) != n) return false;
  for (int v = 0; v < M.algebra()->nvars(); ++v) {
    Matrix lhs = mat_mul(N.realization().var_act[v], W);
    Matrix rhs = mat_mul(W, M.realization().var_act[v]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

IsoVerdict is_isomorphic(const FPModule& M, const FPModule& N,
                         std::uint64_t seed, int trials) {
  if (M.algebra() != N.algebra())
    throw std::invalid_argument("is_isomorphic: different algebras");
  const FieldCtx& ctx = M.algebra()->ctx();

  if (M.kdim() != N.kdim())
    return {IsoVerdict::No, Matrix(ctx, 0, 0),
            "k-dimension mismatch: " + std::to_string(M.kdim()) + " vs " +
                std::to_string(N.kdim())};
  if (M.min_gens() != N.min_gens())
    return {IsoVerdict::No, Matrix(ctx, 0, 0),
            "minimal generator count mismatch: " + std::to_string(M.min_gens()) +
                " vs " + std::to_string(N.min_gens())};
  if (M.kdim() == 0) return {IsoVerdict::Yes, Matrix(ctx, 0, 0), ""};

  HomBasis H = hom_basis(M, N);
  int h = H.dim();
  int n = M.kdim();
  if (h == 0)
    return {IsoVerdict::No, Matrix(ctx, 0, 0), "Hom space is zero"};

  auto combine = [&](const std::vector<Fe>& coeff) {
    Matrix W(ctx, n, n);
    for (int t = 0; t < h; ++t) {
      if (ctx.is_zero(coeff[t])) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!H.basis[t].entry_is_zero(i, j))
            W.set(i, j,
                  ctx.add(W.get(i, j), ctx.mul(coeff[t], H.basis[t].get(i, j))));
    }
    return W;
  };

  // tiny Hom spaces over tiny prime fields: sweep everything, which also
  // makes a negative answer conclusive
  if (ctx.is_prime_field() && ctx.modulus() <= 7 && h <= 3) {
    std::uint64_t p = ctx.modulus();
    std::uint64_t total = 1;
    for (int t = 0; t < h; ++t) total *= p;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      std::vector<Fe> coeff;
      for (int t = 0; t < h; ++t) {
        coeff.push_back(Fe{c % p});
        c /= p;
      }
      Matrix W = combine(coeff);
      if (verify_iso_witness(M, N, W)) return {IsoVerdict::Yes, W, ""};
    }
    return {IsoVerdict::No, Matrix(ctx, 0, 0),
            "no invertible homomorphism exists (exhaustive search)"};
  }

  // each basis element alone, then seeded random combinations
  for (int t = 0; t < h; ++t) {
    std::vector<Fe> coeff(h, ctx.zero());
    coeff[t] = ctx.one();
    Matrix W = combine(coeff);
    if (verify_iso_witness(M, N, W)) return {IsoVerdict::Yes, W, ""};
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int it = 0; it < trials; ++it) {
    std::vector<Fe> coeff;
    coeff.reserve(h);
    for (int t = 0; t < h; ++t) coeff.push_back(ctx.sample(rng));
    Matrix W = combine(coeff);
    if (verify_iso_witness(M, N, W)) return {IsoVerdict::Yes, W, ""};
  }
  return {IsoVerdict::Unknown, Matrix(ctx, 0, 0),
          "no invertible equivariant witness found after " +
              std::to_string(trials) + " trials"};
}

FPModule injective_cogenerator(AlgebraPtr alg) {
  const LocalAlgebra& A = *alg;
  ActionData W;
  W.alg = alg;
  W.kdim = A.dim();
  for (int j = 0; j < A.dim(); ++j) W.act.push_back(transpose(A.left_mult(j)));
  Matrix gens = minimal_generators(W);
  CoverStep cs = cover_and_kernel(W, gens);
  return FPModule(std::move(alg), cs.diff);
}

FPModule random_module(AlgebraPtr alg, std::mt19937_64& rng, int gen_bound,
                       int rel_bound) {
  const LocalAlgebra& A = *alg;
  const FieldCtx& ctx = A.ctx();
  int d = A.dim();
  int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(gen_bound));
  int r = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(rel_bound));
  AlgMatrix P = alg_zero_matrix(A, g, r);
  if (d > 1) {
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < r; ++j) {
        int terms = static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
          int idx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d - 1));
          P.at(i, j)[idx] = ctx.add(P.at(i, j)[idx], ctx.sample_nonzero(rng));
        }
      }
  }
  return FPModule(std::move(alg), std::move(P));
}

}  // namespace abdim
