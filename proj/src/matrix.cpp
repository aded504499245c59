#include "abdim/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace abdim {

namespace {

struct ZpOps {
  std::uint64_t p;
  using T = std::uint64_t;
  bool is_zero(const T& a) const { return a == 0; }
  T zero() const { return 0; }
  T add(const T& a, const T& b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(const T& a, const T& b) const { return a >= b ? a - b : a + p - b; }
  T mul(const T& a, const T& b) const { return (a * b) % p; }
  T inv(const T& a) const {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<T>(t);
  }
};

struct QqOps {
  using T = mpq_class;
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T zero() const { return T(0); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return T(1 / a); }
};

// In-place Gauss-Jordan with the first-nonzero pivot rule.
template <class Ops>
void rref_in_place(const Ops& ops, std::vector<typename Ops::T>& a, int rows,
                   int cols, int& rank_out, std::vector<int>& pivots) {
  using T = typename Ops::T;
  int r = 0;
  pivots.clear();
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!ops.is_zero(a[static_cast<size_t>(i) * cols + c])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j)
        std::swap(a[static_cast<size_t>(piv) * cols + j],
                  a[static_cast<size_t>(r) * cols + j]);
    T ipv = ops.inv(a[static_cast<size_t>(r) * cols + c]);
    for (int j = c; j < cols; ++j) {
      T& x = a[static_cast<size_t>(r) * cols + j];
      if (!ops.is_zero(x)) x = ops.mul(x, ipv);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = a[static_cast<size_t>(i) * cols + c];
      if (ops.is_zero(f)) continue;
      for (int j = c; j < cols; ++j) {
        const T& rv = a[static_cast<size_t>(r) * cols + j];
        if (ops.is_zero(rv)) continue;
        T& x = a[static_cast<size_t>(i) * cols + j];
        x = ops.sub(x, ops.mul(f, rv));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rank_out = r;
}

}  // namespace

Matrix::Matrix(FieldCtx ctx, int rows, int cols)
    : ctx_(ctx), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  size_t n = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  if (ctx_.is_prime_field())
    zp_.assign(n, 0);
  else
    qq_.assign(n, mpq_class(0));
}

Matrix Matrix::identity(FieldCtx ctx, int n) {
  Matrix m(ctx, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, ctx.one());
  return m;
}

Fe Matrix::get(int i, int j) const {
  size_t k = static_cast<size_t>(i) * cols_ + j;
  if (ctx_.is_prime_field()) return Fe{zp_[k]};
  return Fe{qq_[k]};
}

void Matrix::set(int i, int j, const Fe& v) {
  size_t k = static_cast<size_t>(i) * cols_ + j;
  if (ctx_.is_prime_field())
    zp_[k] = std::get<std::uint64_t>(v);
  else
    qq_[k] = std::get<mpq_class>(v);
}

bool Matrix::entry_is_zero(int i, int j) const {
  size_t k = static_cast<size_t>(i) * cols_ + j;
  if (ctx_.is_prime_field()) return zp_[k] == 0;
  return sgn(qq_[k]) == 0;
}

std::vector<Fe> Matrix::row(int i) const {
  std::vector<Fe> v;
  v.reserve(cols_);
  for (int j = 0; j < cols_; ++j) v.push_back(get(i, j));
  return v;
}

std::vector<Fe> Matrix::col(int j) const {
  std::vector<Fe> v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(get(i, j));
  return v;
}

void Matrix::set_col(int j, const std::vector<Fe>& v) {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("column length mismatch");
  for (int i = 0; i < rows_; ++i) set(i, j, v[i]);
}

bool Matrix::is_zero() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!entry_is_zero(i, j)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ctx_ != o.ctx_) return false;
  if (ctx_.is_prime_field()) return zp_ == o.zp_;
  for (size_t k = 0; k < qq_.size(); ++k)
    if (qq_[k] != o.qq_[k]) return false;
  return true;
}

RrefResult rref(const Matrix& A) {
  RrefResult res;
  res.R = A;
  if (A.ctx().is_prime_field()) {
    ZpOps ops{A.ctx().modulus()};
    rref_in_place(ops, res.R.zp(), A.rows(), A.cols(), res.rank, res.pivots);
  } else {
    QqOps ops;
    rref_in_place(ops, res.R.qq(), A.rows(), A.cols(), res.rank, res.pivots);
  }
  return res;
}

int rank(const Matrix& A) { return rref(A).rank; }

Matrix kernel_basis(const Matrix& A) {
  RrefResult r = rref(A);
  const FieldCtx& ctx = A.ctx();
  int n = A.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  Matrix K(ctx, n, n - r.rank);
  int kcol = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    K.set(f, kcol, ctx.one());
    for (int i = 0; i < r.rank; ++i)
      K.set(r.pivots[i], kcol, ctx.neg(r.R.get(i, f)));
    ++kcol;
  }
  return K;
}

std::optional<std::vector<Fe>> solve_linear(const Matrix& A,
                                            const std::vector<Fe>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  Matrix B(A.ctx(), A.rows(), 1);
  B.set_col(0, b);
  auto X = solve_linear_many(A, B);
  if (!X) return std::nullopt;
  return X->col(0);
}

std::optional<Matrix> solve_linear_many(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows())
    throw std::invalid_argument("solve_linear_many: rhs row mismatch");
  const FieldCtx& ctx = A.ctx();
  Matrix aug = hstack(A, B);
  RrefResult r = rref(aug);
  int n = A.cols(), m = B.cols();
  // any pivot beyond the coefficient block witnesses inconsistency
  for (int p : r.pivots)
    if (p >= n) return std::nullopt;
  Matrix X(ctx, n, m);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m; ++j) X.set(r.pivots[i], j, r.R.get(i, n + j));
  return X;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape");
  const FieldCtx& ctx = A.ctx();
  Matrix C(ctx, A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      if (A.entry_is_zero(i, k)) continue;
      Fe a = A.get(i, k);
      for (int j = 0; j < B.cols(); ++j) {
        if (B.entry_is_zero(k, j)) continue;
        C.set(i, j, ctx.add(C.get(i, j), ctx.mul(a, B.get(k, j))));
      }
    }
  return C;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.ctx(), A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!A.entry_is_zero(i, j)) T.set(j, i, A.get(i, j));
  return T;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows()) throw std::invalid_argument("hstack: rows");
  Matrix C(A.ctx(), A.rows(), A.cols() + B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j)
      if (!A.entry_is_zero(i, j)) C.set(i, j, A.get(i, j));
    for (int j = 0; j < B.cols(); ++j)
      if (!B.entry_is_zero(i, j)) C.set(i, A.cols() + j, B.get(i, j));
  }
  return C;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  if (A.cols() != B.cols()) throw std::invalid_argument("vstack: cols");
  Matrix C(A.ctx(), A.rows() + B.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!A.entry_is_zero(i, j)) C.set(i, j, A.get(i, j));
  for (int i = 0; i < B.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j)
      if (!B.entry_is_zero(i, j)) C.set(A.rows() + i, j, B.get(i, j));
  return C;
}

std::vector<Fe> mat_vec(const Matrix& A, const std::vector<Fe>& x) {
  if (static_cast<int>(x.size()) != A.cols())
    throw std::invalid_argument("apply: length mismatch");
  const FieldCtx& ctx = A.ctx();
  std::vector<Fe> y(A.rows(), ctx.zero());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      if (A.entry_is_zero(i, j) || ctx.is_zero(x[j])) continue;
      y[i] = ctx.add(y[i], ctx.mul(A.get(i, j), x[j]));
    }
  return y;
}

Matrix column_space_basis(const Matrix& A) {
  RrefResult r = rref(A);
  Matrix B(A.ctx(), A.rows(), r.rank);
  for (int i = 0; i < r.rank; ++i) B.set_col(i, A.col(r.pivots[i]));
  return B;
}

}  // namespace abdim
