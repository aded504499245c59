#pragma once

#include <memory>
#include <string>
#include <vector>

#include "abdim/groebner.hpp"
#include "abdim/matrix.hpp"

namespace abdim {

class NotLocalError : public std::runtime_error {
public:
  explicit NotLocalError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-dimensional commutative local k-algebra, realized as a monomial
// basis of a quotient k[x_1..x_n]/I together with structure constants.
// basis[0] is the monomial 1; m is spanned by the remaining basis elements.
class LocalAlgebra {
public:
  const FieldCtx& ctx() const { return ctx_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int nvars() const { return static_cast<int>(var_names_.size()); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const GroebnerBasis& groebner() const { return gb_; }
  int nilpotency_degree() const { return nilpotency_degree_; }

  // indices of the non-unit basis elements (a k-basis of m)
  const std::vector<int>& m_indices() const { return m_indices_; }
  // embedding dimension = dim m/m^2
  int embedding_dim() const { return embedding_dim_; }
  // minimal generators of m, as coordinate vectors (a lift of a basis of m/m^2)
  const std::vector<std::vector<Fe>>& m_min_gens() const { return m_min_gens_; }

  const std::vector<Fe>& mult(int i, int j) const { return table_[i][j]; }
  // dim x dim matrix of multiplication by basis[j]
  const Matrix& left_mult(int j) const { return left_mult_[j]; }
  // coordinates of the image of variable i in the quotient
  const std::vector<Fe>& var_image(int i) const { return var_images_[i]; }

  std::vector<Fe> zero_elem() const;
  std::vector<Fe> one_elem() const;
  std::vector<Fe> multiply(const std::vector<Fe>& u, const std::vector<Fe>& v) const;
  std::vector<Fe> add_elem(const std::vector<Fe>& u, const std::vector<Fe>& v) const;
  std::vector<Fe> scale_elem(const Fe& c, const std::vector<Fe>& u) const;
  bool elem_is_zero(const std::vector<Fe>& u) const;
  bool elem_in_m(const std::vector<Fe>& u) const;
  std::vector<Fe> element_from_poly(const Poly& f) const;  // reduce, then coords
  Matrix left_mult_of(const std::vector<Fe>& a) const;
  std::string elem_to_string(const std::vector<Fe>& a) const;

  friend std::shared_ptr<const LocalAlgebra> build_algebra(
      std::vector<std::string> variables, const std::vector<Poly>& ideal_gens,
      FieldCtx ctx);

private:
  LocalAlgebra(FieldCtx ctx, GroebnerBasis gb)
      : ctx_(ctx), gb_(std::move(gb)) {}

  FieldCtx ctx_;
  GroebnerBasis gb_;
  std::vector<std::string> var_names_;
  std::vector<Monomial> basis_;
  std::vector<std::vector<std::vector<Fe>>> table_;
  std::vector<Matrix> left_mult_;
  std::vector<std::vector<Fe>> var_images_;
  std::vector<int> m_indices_;
  std::vector<std::vector<Fe>> m_min_gens_;
  int embedding_dim_ = 0;
  int nilpotency_degree_ = 0;
};

using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

// Builds the quotient, checks it is artinian local, and precomputes the
// multiplication data. Generators must have no constant term.
AlgebraPtr build_algebra(std::vector<std::string> variables,
                         const std::vector<Poly>& ideal_gens, FieldCtx ctx);

// Columns form a k-basis of the annihilator of m.
Matrix socle(const LocalAlgebra& A);

// Artinian criterion: socle dimension one.
bool is_gorenstein(const LocalAlgebra& A);

}  // namespace abdim
