#pragma once

#include <stdexcept>
#include <vector>

#include "abdim/poly.hpp"

namespace abdim {

// Raised when a quotient k[x]/I fails to be finite-dimensional: some variable
// has no pure power among the leading monomials of the basis.
class InfiniteDimensionalError : public std::runtime_error {
public:
  explicit InfiniteDimensionalError(const std::string& what)
      : std::runtime_error(what) {}
};

// Reduced Groebner basis under degrevlex: generators monic, inter-reduced,
// sorted by ascending leading monomial.
struct GroebnerBasis {
  FieldCtx ctx;
  int nvars = 0;
  std::vector<Poly> gens;
};

struct BuchbergerOpts {
  bool coprime_criterion = true;  // drop pairs with coprime leading terms
  bool chain_criterion = true;    // drop pairs subsumed by a third element
};

GroebnerBasis buchberger(const std::vector<Poly>& gens, int nvars,
                         const BuchbergerOpts& opts = {});

Poly normal_form(const Poly& f, const std::vector<Poly>& basis);
Poly normal_form(const Poly& f, const GroebnerBasis& G);

// All monomials outside the leading-term ideal, sorted by degree then by
// descending degrevlex; throws InfiniteDimensionalError when infinite.
std::vector<Monomial> quotient_monomial_basis(const GroebnerBasis& G);

// table[i][j] = coordinates of normal_form(basis[i] * basis[j]) over basis.
std::vector<std::vector<std::vector<Fe>>> multiplication_table(
    const GroebnerBasis& G, const std::vector<Monomial>& basis);

}  // namespace abdim
