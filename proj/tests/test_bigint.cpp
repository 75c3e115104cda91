#include <doctest.h>

#include <random>

#include "braidhom/bigint.hpp"
#include "braidhom/errors.hpp"

using braidhom::BigInt;

TEST_CASE("small arithmetic matches long long") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    long long a = d(rng), b = d(rng);
    CHECK((BigInt(a) + BigInt(b)).to_ll() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_ll() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_ll() == a * b);
    CHECK((BigInt(a) == BigInt(b)) == (a == b));
  }
}

TEST_CASE("string round trip and known powers") {
  BigInt two_pow_128 = BigInt(1);
  for (int i = 0; i < 128; ++i) two_pow_128 *= BigInt(2);
  CHECK(two_pow_128.to_string() == "340282366920938463463374607431768211456");
  CHECK(BigInt::from_string("-340282366920938463463374607431768211456") == -two_pow_128);

  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> d(-1000000000000000ll, 1000000000000000ll);
  for (int i = 0; i < 200; ++i) {
    long long v = d(rng);
    CHECK(BigInt::from_string(BigInt(v).to_string()) == BigInt(v));
    CHECK(BigInt(v).to_string() == std::to_string(v));
  }
}

TEST_CASE("ring laws on random big values") {
  std::mt19937 rng(7);
  auto rand_big = [&] {
    BigInt x(static_cast<long long>(rng()) - 2147483647ll);
    int n = static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) x *= BigInt(static_cast<long long>(rng()) + 1);
    return rng() % 2 ? x : -x;
  };
  for (int i = 0; i < 300; ++i) {
    BigInt a = rand_big(), b = rand_big(), c = rand_big();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == BigInt(0));
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("edge values") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(0).is_zero());
  CHECK(BigInt(1).is_one());
  CHECK(BigInt(-1).is_minus_one());
  CHECK(BigInt(-9223372036854775807ll - 1).to_ll() == -9223372036854775807ll - 1);
  CHECK(BigInt(3).odd());
  CHECK(!BigInt(-4).odd());
  CHECK_THROWS_AS(BigInt::from_string("12x"), braidhom::FormatError);
  BigInt huge = BigInt(1);
  for (int i = 0; i < 100; ++i) huge *= BigInt(10);
  CHECK_THROWS_AS((void)huge.to_ll(), braidhom::DomainError);
}
