#include "abdim/field.hpp"

#include <stdexcept>

namespace abdim {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  // extended Euclid on (a, p), p prime, a != 0 mod p
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

const std::uint64_t& zp(const Fe& a) { return std::get<std::uint64_t>(a); }
const mpq_class& qq(const Fe& a) { return std::get<mpq_class>(a); }

}  // namespace

FieldCtx FieldCtx::rationals() { return FieldCtx(FieldKind::Rationals, 0); }

FieldCtx FieldCtx::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("prime-field modulus must be < 2^31");
  if (!is_prime_u64(p))
    throw std::invalid_argument("prime-field modulus must be prime");
  return FieldCtx(FieldKind::PrimeField, p);
}

Fe FieldCtx::zero() const {
  if (is_prime_field()) return Fe{std::uint64_t{0}};
  return Fe{mpq_class(0)};
}

Fe FieldCtx::one() const {
  if (is_prime_field()) return Fe{std::uint64_t{1}};
  return Fe{mpq_class(1)};
}

Fe FieldCtx::from_int(long long n) const {
  if (is_prime_field()) {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return Fe{static_cast<std::uint64_t>(r)};
  }
  mpq_class q(static_cast<long>(n));
  return Fe{q};
}

Fe FieldCtx::from_fraction(long long num, long long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (is_prime_field()) return div(from_int(num), from_int(den));
  mpq_class q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return Fe{q};
}

bool FieldCtx::is_zero(const Fe& a) const {
  if (is_prime_field()) return zp(a) == 0;
  return sgn(qq(a)) == 0;
}

bool FieldCtx::is_one(const Fe& a) const {
  if (is_prime_field()) return zp(a) == 1;
  return qq(a) == 1;
}

bool FieldCtx::eq(const Fe& a, const Fe& b) const {
  if (is_prime_field()) return zp(a) == zp(b);
  return qq(a) == qq(b);
}

Fe FieldCtx::add(const Fe& a, const Fe& b) const {
  if (is_prime_field()) {
    std::uint64_t s = zp(a) + zp(b);
    if (s >= p_) s -= p_;
    return Fe{s};
  }
  return Fe{mpq_class(qq(a) + qq(b))};
}

Fe FieldCtx::sub(const Fe& a, const Fe& b) const {
  if (is_prime_field()) {
    std::uint64_t x = zp(a), y = zp(b);
    return Fe{x >= y ? x - y : x + p_ - y};
  }
  return Fe{mpq_class(qq(a) - qq(b))};
}

Fe FieldCtx::neg(const Fe& a) const {
  if (is_prime_field()) {
    std::uint64_t x = zp(a);
    return Fe{x == 0 ? std::uint64_t{0} : p_ - x};
  }
  return Fe{mpq_class(-qq(a))};
}

Fe FieldCtx::mul(const Fe& a, const Fe& b) const {
  if (is_prime_field()) return Fe{(zp(a) * zp(b)) % p_};
  return Fe{mpq_class(qq(a) * qq(b))};
}

Fe FieldCtx::inv(const Fe& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (is_prime_field()) return Fe{mod_inv(zp(a), p_)};
  return Fe{mpq_class(1 / qq(a))};
}

Fe FieldCtx::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe FieldCtx::pow(const Fe& a, long long e) const {
  Fe base = a;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  Fe r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::optional<int> FieldCtx::multiplicative_order(const Fe& a) const {
  if (is_zero(a)) return std::nullopt;
  if (!is_prime_field()) {
    if (is_one(a)) return 1;
    if (eq(a, from_int(-1))) return 2;
    return std::nullopt;
  }
  // order divides p-1; strip prime factors of p-1 that keep a^order = 1
  std::uint64_t order = p_ - 1;
  std::uint64_t n = order;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      n /= q;
      while (order % q == 0 &&
             is_one(pow(a, static_cast<long long>(order / q))))
        order /= q;
    }
  }
  if (n > 1)
    while (order % n == 0 && is_one(pow(a, static_cast<long long>(order / n))))
      order /= n;
  return static_cast<int>(order);
}

std::string FieldCtx::to_string(const Fe& a) const {
  if (is_prime_field()) return std::to_string(zp(a));
  return qq(a).get_str();
}

Fe FieldCtx::sample(std::mt19937_64& rng) const {
  if (is_prime_field()) return Fe{rng() % p_};
  return from_int(static_cast<long long>(rng() % 9) - 4);
}

Fe FieldCtx::sample_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    Fe a = sample(rng);
    if (!is_zero(a)) return a;
  }
}

std::string FieldCtx::describe() const {
  if (is_prime_field()) return "GF(" + std::to_string(p_) + ")";
  return "QQ";
}

}  // namespace abdim
