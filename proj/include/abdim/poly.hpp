#pragma once

#include <map>
#include <string>
#include <vector>

#include "abdim/field.hpp"

namespace abdim {

// Exponent vector; index 0 is the most significant variable.
struct Monomial {
  std::vector<int> e;

  static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  static Monomial var(int nvars, int i, int exp = 1) {
    Monomial m = one(nvars);
    m.e[i] = exp;
    return m;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial divide(const Monomial& m) const;  // pre: m divides *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

// Degree-reverse-lexicographic: higher total degree wins; on ties the
// monomial with the smaller exponent at the last differing variable wins.
bool degrevlex_less(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return degrevlex_less(b, a);
  }
};

// Sparse polynomial; terms iterate in descending degrevlex order, so
// begin() is the leading term. Zero coefficients are never stored.
class Poly {
public:
  using TermMap = std::map<Monomial, Fe, DegRevLexGreater>;

  Poly(FieldCtx ctx, int nvars) : ctx_(ctx), nvars_(nvars) {}

  static Poly zero(FieldCtx ctx, int nvars) { return Poly(ctx, nvars); }
  static Poly constant(FieldCtx ctx, int nvars, const Fe& c);
  static Poly term(FieldCtx ctx, const Monomial& m, const Fe& c);

  const FieldCtx& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const;
  const Fe& leading_coeff() const;
  int degree() const;  // -1 for the zero polynomial

  void add_term(const Monomial& m, const Fe& c);  // accumulates, prunes zeros

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator*(const Poly& g) const;
  Poly scaled(const Fe& c) const;
  Poly times_term(const Monomial& m, const Fe& c) const;
  Poly monic() const;  // pre: nonzero

  bool operator==(const Poly& g) const;

  // "3*x1*x3 + 2" style rendering with the given variable names
  std::string to_string(const std::vector<std::string>& vars) const;

private:
  FieldCtx ctx_;
  int nvars_;
  TermMap terms_;
};

}  // namespace abdim
