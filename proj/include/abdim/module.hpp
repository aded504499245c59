#pragma once

#include <optional>
#include <string>

#include "abdim/algebra.hpp"

namespace abdim {

// Element of the algebra as a coordinate vector over its monomial basis.
using AlgElem = std::vector<Fe>;

// Matrix with algebra-element entries; presents maps between free modules.
struct AlgMatrix {
  int rows = 0, cols = 0;
  std::vector<AlgElem> entries;  // row-major

  AlgElem& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
  const AlgElem& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * cols + j];
  }
};

AlgMatrix alg_zero_matrix(const LocalAlgebra& A, int rows, int cols);
AlgMatrix alg_mul(const LocalAlgebra& A, const AlgMatrix& X, const AlgMatrix& Y);
AlgMatrix alg_transpose(const AlgMatrix& X);
bool alg_matrix_is_zero(const LocalAlgebra& A, const AlgMatrix& X);
bool alg_matrix_eq(const LocalAlgebra& A, const AlgMatrix& X, const AlgMatrix& Y);
// true when every entry lies in m (minimality witness for presentations)
bool alg_matrix_in_m(const LocalAlgebra& A, const AlgMatrix& X);
// the k-linear map k^{cols*d} -> k^{rows*d} with left-multiplication blocks
Matrix alg_to_k(const LocalAlgebra& A, const AlgMatrix& X);

// k-linear realization of a module: dimension plus one action matrix per
// algebra basis element (act[0] is the identity).
struct ActionData {
  AlgebraPtr alg;
  int kdim = 0;
  std::vector<Matrix> act;

  Matrix act_of(const AlgElem& a) const;
  // throws std::invalid_argument when the matrices violate the algebra laws
  void check_laws() const;
};

// Concrete quotient model of a presented module A^g / im(presentation):
// the module basis is indexed by the free coordinates of A^g left over after
// eliminating the relation subspace.
struct Realization {
  ActionData action;
  std::vector<Matrix> var_act;   // action of each variable image
  Matrix gen_images;             // kdim x g images of the free generators
  std::vector<int> free_coords;  // ambient coordinates carrying the basis
  Matrix rel_rref;               // rref rows spanning the relation subspace
  std::vector<int> rel_pivots;
  int min_gens = 0;  // dim of the module modulo m

  int kdim() const { return action.kdim; }
  // ambient vector in A^g -> coordinates in the quotient basis
  std::vector<Fe> project(std::vector<Fe> ambient) const;
};

class FPModule {
public:
  FPModule(AlgebraPtr alg, AlgMatrix presentation);

  static FPModule free_module(AlgebraPtr alg, int rank);
  static FPModule zero(AlgebraPtr alg);
  static FPModule residue_field(AlgebraPtr alg);  // k = A/m

  const AlgebraPtr& algebra() const { return alg_; }
  const AlgMatrix& presentation() const { return pres_; }
  const Realization& realization() const { return rz_; }
  int kdim() const { return rz_.kdim(); }
  int min_gens() const { return rz_.min_gens; }
  bool is_zero_module() const { return kdim() == 0; }

private:
  AlgebraPtr alg_;
  AlgMatrix pres_;
  Realization rz_;
};

// Hom_R(M, N) as a k-space of kdim(N) x kdim(M) matrices commuting with the
// variable actions.
struct HomBasis {
  std::vector<Matrix> basis;
  int dim() const { return static_cast<int>(basis.size()); }
};

HomBasis hom_basis(const FPModule& M, const FPModule& N);

// Module structure on Hom_R(M, N): scalars act through the target.
ActionData hom_action(const FPModule& M, const FPModule& N, const HomBasis& H);

// Hom_R(M, A) minimally re-presented.
FPModule dual(const FPModule& M);

// Minimal presentation of a realized module; validates the action laws.
FPModule present_from_realization(const ActionData& W);

// One step of a minimal cover A^g -> W with its kernel realized as a module.
struct CoverStep {
  int g = 0;
  Matrix cover;            // kdim(W) x (g*d) surjection
  Matrix kernel;           // (g*d) x kd basis of the kernel, columns
  ActionData kernel_act;   // the kernel in its own coordinates
  Matrix kernel_gens;      // kd x r unit columns: minimal generators, kernel coords
  AlgMatrix diff;          // g x r: the generators as a matrix over the algebra
};

// Unit-vector lifts of a basis of W/mW, as a kdim x g matrix of columns.
Matrix minimal_generators(const ActionData& W);
CoverStep cover_and_kernel(const ActionData& W, const Matrix& gens);

FPModule syzygy(const FPModule& M, int n);
FPModule direct_sum(const FPModule& M, const FPModule& N);

struct IsoVerdict {
  enum Kind { Yes, No, Unknown } kind;
  Matrix witness;      // invertible equivariant map for Yes
  std::string reason;  // for No / Unknown
};

// Sound in both decisive directions: Yes carries an independently re-checked
// witness; No only from module invariants or an exhausted Hom space.
IsoVerdict is_isomorphic(const FPModule& M, const FPModule& N,
                         std::uint64_t seed = 0, int trials = 32);

bool verify_iso_witness(const FPModule& M, const FPModule& N, const Matrix& W);

// E = Hom_k(A, k) with the transposed regular action; injective over A.
FPModule injective_cogenerator(AlgebraPtr alg);

// Deterministic random module with 1..gen_bound generators, 1..rel_bound
// relations and presentation entries in m.
FPModule random_module(AlgebraPtr alg, std::mt19937_64& rng, int gen_bound,
                       int rel_bound);

}  // namespace abdim
