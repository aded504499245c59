#include "abdim/algebra.hpp"

#include <algorithm>

namespace abdim {

std::vector<Fe> LocalAlgebra::zero_elem() const {
  return std::vector<Fe>(dim(), ctx_.zero());
}

std::vector<Fe> LocalAlgebra::one_elem() const {
  auto v = zero_elem();
  v[0] = ctx_.one();
  return v;
}

std::vector<Fe> LocalAlgebra::multiply(const std::vector<Fe>& u,
                                       const std::vector<Fe>& v) const {
  std::vector<Fe> out = zero_elem();
  for (int i = 0; i < dim(); ++i) {
    if (ctx_.is_zero(u[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (ctx_.is_zero(v[j])) continue;
      Fe c = ctx_.mul(u[i], v[j]);
      const std::vector<Fe>& t = table_[i][j];
      for (int l = 0; l < dim(); ++l)
        if (!ctx_.is_zero(t[l])) out[l] = ctx_.add(out[l], ctx_.mul(c, t[l]));
    }
  }
  return out;
}

std::vector<Fe> LocalAlgebra::add_elem(const std::vector<Fe>& u,
                                       const std::vector<Fe>& v) const {
  std::vector<Fe> out(dim(), ctx_.zero());
  for (int i = 0; i < dim(); ++i) out[i] = ctx_.add(u[i], v[i]);
  return out;
}

std::vector<Fe> LocalAlgebra::scale_elem(const Fe& c,
                                         const std::vector<Fe>& u) const {
  std::vector<Fe> out(dim(), ctx_.zero());
  for (int i = 0; i < dim(); ++i) out[i] = ctx_.mul(c, u[i]);
  return out;
}

bool LocalAlgebra::elem_is_zero(const std::vector<Fe>& u) const {
  for (const Fe& c : u)
    if (!ctx_.is_zero(c)) return false;
  return true;
}

bool LocalAlgebra::elem_in_m(const std::vector<Fe>& u) const {
  return ctx_.is_zero(u[0]);
}

std::vector<Fe> LocalAlgebra::element_from_poly(const Poly& f) const {
  Poly nf = normal_form(f, gb_);
  std::vector<Fe> coords = zero_elem();
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(basis_.begin(), basis_.end(), m);
    if (it == basis_.end())
      throw std::logic_error("normal form outside quotient basis");
    coords[it - basis_.begin()] = c;
  }
  return coords;
}

Matrix LocalAlgebra::left_mult_of(const std::vector<Fe>& a) const {
  Matrix M(ctx_, dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    if (ctx_.is_zero(a[j])) continue;
    for (int r = 0; r < dim(); ++r)
      for (int c = 0; c < dim(); ++c) {
        if (left_mult_[j].entry_is_zero(r, c)) continue;
        M.set(r, c, ctx_.add(M.get(r, c), ctx_.mul(a[j], left_mult_[j].get(r, c))));
      }
  }
  return M;
}

std::string LocalAlgebra::elem_to_string(const std::vector<Fe>& a) const {
  Poly p(ctx_, nvars());
  for (int i = 0; i < dim(); ++i) p.add_term(basis_[i], a[i]);
  return p.to_string(var_names_);
}

AlgebraPtr build_algebra(std::vector<std::string> variables,
                         const std::vector<Poly>& ideal_gens, FieldCtx ctx) {
  int n = static_cast<int>(variables.size());
  if (n == 0) throw std::invalid_argument("build_algebra: no variables");
  for (const Poly& g : ideal_gens) {
    if (g.nvars() != n)
      throw std::invalid_argument("build_algebra: generator variable count mismatch");
    for (const auto& [m, c] : g.terms())
      if (m.degree() == 0)
        throw std::invalid_argument(
            "build_algebra: ideal generator has a constant term");
  }

  GroebnerBasis gb = buchberger(ideal_gens, n);
  auto alg = std::shared_ptr<LocalAlgebra>(new LocalAlgebra(ctx, std::move(gb)));
  alg->var_names_ = std::move(variables);
  alg->basis_ = quotient_monomial_basis(alg->gb_);
  int d = alg->dim();
  if (d == 0 || alg->basis_[0].degree() != 0)
    throw std::logic_error("build_algebra: quotient lost the unit");

  alg->table_ = multiplication_table(alg->gb_, alg->basis_);

  alg->left_mult_.reserve(d);
  for (int j = 0; j < d; ++j) {
    Matrix L(ctx, d, d);
    for (int i = 0; i < d; ++i) L.set_col(i, alg->table_[j][i]);
    alg->left_mult_.push_back(std::move(L));
  }

  for (int i = 1; i < d; ++i) alg->m_indices_.push_back(i);

  for (int v = 0; v < n; ++v) {
    Poly xv = Poly::term(ctx, Monomial::var(n, v), ctx.one());
    alg->var_images_.push_back(alg->element_from_poly(xv));
  }

  // locality: each variable image must be nilpotent
  for (int v = 0; v < n; ++v) {
    std::vector<Fe> p = alg->var_images_[v];
    bool nil = alg->elem_is_zero(p);
    for (int it = 0; it < d && !nil; ++it) {
      p = alg->multiply(p, alg->var_images_[v]);
      nil = alg->elem_is_zero(p);
    }
    if (!nil)
      throw NotLocalError("variable " + alg->var_names_[v] +
                          " is not nilpotent in the quotient");
  }

  // powers of m: iterate spans until zero; records the nilpotency degree
  {
    Matrix span(ctx, d, d - 1);
    for (int i = 1; i < d; ++i) span.set(i, i - 1, ctx.one());
    span = column_space_basis(span);
    int deg = 1;
    while (span.cols() > 0) {
      Matrix next(ctx, d, span.cols() * (d - 1));
      int col = 0;
      for (int i = 1; i < d; ++i) {
        Matrix prod = mat_mul(alg->left_mult_[i], span);
        for (int c = 0; c < prod.cols(); ++c) next.set_col(col++, prod.col(c));
      }
      span = column_space_basis(next);
      ++deg;
      if (deg > d + 1) throw NotLocalError("maximal ideal is not nilpotent");
    }
    alg->nilpotency_degree_ = deg;
  }

  // minimal generators of m: coordinate picks completing m^2 inside m
  {
    Matrix msq(ctx, d, (d - 1) * (d - 1));
    int col = 0;
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j) msq.set_col(col++, alg->table_[i][j]);
    RrefResult r = rref(transpose(msq));
    std::vector<bool> pivot(d, false);
    for (int p : r.pivots) pivot[p] = true;
    for (int i = 1; i < d; ++i) {
      if (pivot[i]) continue;
      std::vector<Fe> g(d, ctx.zero());
      g[i] = ctx.one();
      alg->m_min_gens_.push_back(std::move(g));
    }
    alg->embedding_dim_ = static_cast<int>(alg->m_min_gens_.size());
  }

  return alg;
}

Matrix socle(const LocalAlgebra& A) {
  const FieldCtx& ctx = A.ctx();
  int d = A.dim();
  if (d == 1) return Matrix::identity(ctx, 1);  // the whole field
  Matrix stacked(ctx, d * (d - 1), d);
  for (int idx = 1; idx < d; ++idx) {
    const Matrix& L = A.left_mult(idx);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!L.entry_is_zero(i, j)) stacked.set((idx - 1) * d + i, j, L.get(i, j));
  }
  return kernel_basis(stacked);
}

bool is_gorenstein(const LocalAlgebra& A) { return socle(A).cols() == 1; }

}  // namespace abdim
