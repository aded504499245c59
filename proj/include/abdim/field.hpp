#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace abdim {

// Exact scalar: a prime-field residue in [0, p) or an arbitrary-precision
// rational kept reduced with positive denominator.
using Fe = std::variant<std::uint64_t, mpq_class>;

enum class FieldKind { Rationals, PrimeField };

// A field of coefficients. All scalar arithmetic goes through the context so
// that the same code path serves QQ and GF(p).
class FieldCtx {
public:
  static FieldCtx rationals();
  // p must be prime and < 2^31 (products of residues then fit in 64 bits).
  static FieldCtx prime_field(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

  Fe zero() const;
  Fe one() const;
  Fe from_int(long long n) const;
  Fe from_fraction(long long num, long long den) const;

  bool is_zero(const Fe& a) const;
  bool is_one(const Fe& a) const;
  bool eq(const Fe& a, const Fe& b) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe inv(const Fe& a) const;  // throws std::domain_error on zero
  Fe div(const Fe& a, const Fe& b) const;
  Fe pow(const Fe& a, long long e) const;  // negative e inverts first

  // Smallest n >= 1 with a^n = 1; nullopt when a = 0 or no finite order
  // exists (over QQ only +-1 have one).
  std::optional<int> multiplicative_order(const Fe& a) const;

  std::string to_string(const Fe& a) const;

  // Deterministic sampling; over QQ draws small integers from [-4, 4].
  Fe sample(std::mt19937_64& rng) const;
  Fe sample_nonzero(std::mt19937_64& rng) const;

  bool operator==(const FieldCtx& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldCtx& o) const { return !(*this == o); }

  std::string describe() const;  // "QQ" or "GF(p)"

private:
  FieldCtx(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_ = 0;  // modulus; 0 for the rationals
};

}  // namespace abdim
