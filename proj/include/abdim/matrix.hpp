#pragma once

#include <optional>
#include <vector>

#include "abdim/field.hpp"

namespace abdim {

// Dense matrix over a FieldCtx. Storage is typed per field kind so that the
// elimination kernels run on raw residues / mpq values instead of variants.
class Matrix {
public:
  Matrix() : ctx_(FieldCtx::rationals()) {}
  Matrix(FieldCtx ctx, int rows, int cols);

  static Matrix identity(FieldCtx ctx, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtx& ctx() const { return ctx_; }

  Fe get(int i, int j) const;
  void set(int i, int j, const Fe& v);
  bool entry_is_zero(int i, int j) const;

  std::vector<Fe> row(int i) const;
  std::vector<Fe> col(int j) const;
  void set_col(int j, const std::vector<Fe>& v);

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  // raw storage for the elimination kernels
  std::vector<std::uint64_t>& zp() { return zp_; }
  const std::vector<std::uint64_t>& zp() const { return zp_; }
  std::vector<mpq_class>& qq() { return qq_; }
  const std::vector<mpq_class>& qq() const { return qq_; }

private:
  FieldCtx ctx_;
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> zp_;  // row-major, PrimeField lane
  std::vector<mpq_class> qq_;      // row-major, Rationals lane
};

struct RrefResult {
  Matrix R;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per pivot row
};

// Reduced row echelon form with the first-nonzero pivot rule; deterministic.
RrefResult rref(const Matrix& A);

int rank(const Matrix& A);

// Columns form a deterministic basis of the right null space: one column per
// free column f, with 1 at f and -R[i][f] at the i-th pivot column.
Matrix kernel_basis(const Matrix& A);

// Particular solution of A x = b with free variables set to zero; nullopt when
// inconsistent. rows(A) must equal b's length.
std::optional<std::vector<Fe>> solve_linear(const Matrix& A,
                                            const std::vector<Fe>& b);

// Column-wise solve with shared elimination: X with A X = B, free vars zero.
std::optional<Matrix> solve_linear_many(const Matrix& A, const Matrix& B);

Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Matrix hstack(const Matrix& A, const Matrix& B);
Matrix vstack(const Matrix& A, const Matrix& B);
std::vector<Fe> mat_vec(const Matrix& A, const std::vector<Fe>& x);

// Deterministic basis of the column space, as columns (the pivot columns of A
// in ascending order, copied verbatim).
Matrix column_space_basis(const Matrix& A);

}  // namespace abdim
