#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abdim/field.hpp"

using namespace abdim;

TEST_CASE("prime field construction validates the modulus") {
  CHECK_THROWS_AS(FieldCtx::prime_field(6), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::prime_field(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::prime_field(0), std::invalid_argument);
  CHECK_NOTHROW(FieldCtx::prime_field(2));
  CHECK_NOTHROW(FieldCtx::prime_field(7));
  CHECK_NOTHROW(FieldCtx::prime_field(2147483647));  // 2^31 - 1 is prime
  CHECK_THROWS_AS(FieldCtx::prime_field(std::uint64_t{1} << 31),
                  std::invalid_argument);
}

TEST_CASE("GF(7) arithmetic stays in range and inverts") {
  FieldCtx F = FieldCtx::prime_field(7);
  Fe a = F.from_int(5), b = F.from_int(4);
  CHECK(F.eq(F.add(a, b), F.from_int(2)));
  CHECK(F.eq(F.sub(a, b), F.from_int(1)));
  CHECK(F.eq(F.mul(a, b), F.from_int(6)));
  CHECK(F.eq(F.neg(a), F.from_int(2)));
  CHECK(F.eq(F.from_int(-3), F.from_int(4)));
  for (int x = 1; x < 7; ++x) {
    Fe v = F.from_int(x);
    CHECK(F.is_one(F.mul(v, F.inv(v))));
    CHECK(std::get<std::uint64_t>(v) < 7);
  }
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("rationals are reduced with positive denominator") {
  FieldCtx Q = FieldCtx::rationals();
  Fe x = Q.from_fraction(4, -6);
  CHECK(Q.to_string(x) == "-2/3");
  Fe y = Q.from_fraction(6, 4);
  CHECK(Q.to_string(y) == "3/2");
  CHECK(Q.eq(Q.mul(x, y), Q.from_int(-1)));
  CHECK(Q.eq(Q.add(x, Q.from_fraction(2, 3)), Q.zero()));
  CHECK(Q.eq(Q.div(Q.from_int(1), Q.from_int(2)), Q.from_fraction(1, 2)));
  CHECK(Q.to_string(Q.inv(Q.from_fraction(-3, 5))) == "-5/3");
  CHECK_THROWS_AS(Q.from_fraction(1, 0), std::domain_error);
}

TEST_CASE("pow handles negative exponents") {
  FieldCtx F = FieldCtx::prime_field(13);
  Fe a = F.from_int(4);
  CHECK(F.eq(F.pow(a, 6), F.one()));
  CHECK(F.eq(F.mul(F.pow(a, -2), F.pow(a, 2)), F.one()));
  FieldCtx Q = FieldCtx::rationals();
  CHECK(Q.eq(Q.pow(Q.from_int(2), -3), Q.from_fraction(1, 8)));
}

TEST_CASE("multiplicative orders") {
  FieldCtx F7 = FieldCtx::prime_field(7);
  CHECK(F7.multiplicative_order(F7.from_int(3)) == 6);
  CHECK(F7.multiplicative_order(F7.from_int(2)) == 3);
  CHECK(F7.multiplicative_order(F7.from_int(6)) == 2);
  CHECK(F7.multiplicative_order(F7.from_int(1)) == 1);
  CHECK(!F7.multiplicative_order(F7.zero()).has_value());

  FieldCtx F13 = FieldCtx::prime_field(13);
  CHECK(F13.multiplicative_order(F13.from_int(4)) == 6);
  CHECK(F13.multiplicative_order(F13.from_int(2)) == 12);

  FieldCtx F5 = FieldCtx::prime_field(5);
  CHECK(F5.multiplicative_order(F5.from_int(4)) == 2);
  CHECK(F5.multiplicative_order(F5.from_int(1)) == 1);

  FieldCtx Q = FieldCtx::rationals();
  CHECK(Q.multiplicative_order(Q.from_int(1)) == 1);
  CHECK(Q.multiplicative_order(Q.from_int(-1)) == 2);
  CHECK(!Q.multiplicative_order(Q.from_int(2)).has_value());
  CHECK(!Q.multiplicative_order(Q.from_fraction(1, 2)).has_value());
}

TEST_CASE("order agrees with brute force on all of GF(p)") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull, 31ull}) {
    FieldCtx F = FieldCtx::prime_field(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      Fe x = F.from_int(static_cast<long long>(a));
      int naive = 1;
      Fe pw = x;
      while (!F.is_one(pw)) {
        pw = F.mul(pw, x);
        ++naive;
      }
      CHECK(F.multiplicative_order(x) == naive);
    }
  }
}

TEST_CASE("sampling is deterministic given the seed") {
  FieldCtx F = FieldCtx::prime_field(7);
  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 100; ++i) CHECK(F.eq(F.sample(r1), F.sample(r2)));
  FieldCtx Q = FieldCtx::rationals();
  std::mt19937_64 r3(1);
  for (int i = 0; i < 100; ++i) CHECK(!Q.is_zero(Q.sample_nonzero(r3)));
}
