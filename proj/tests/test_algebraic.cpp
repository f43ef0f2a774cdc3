#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qwc/algebraic.hpp"
#include "qwc/errors.hpp"

using namespace qwc;

TEST_CASE("QuadExt canonical form") {
  CHECK(QuadExt(4, 0, 7) == QuadExt::integer(2));
  CHECK(QuadExt(2, 2, 1) == QuadExt::integer(2));
  CHECK(QuadExt(4, 2, 2).to_string() == "2+sqrt(2)");
  CHECK(QuadExt(3, -1, 5).to_string() == "(3-sqrt(5))/2");
  CHECK(QuadExt::integer(12).to_string() == "12");
  CHECK(QuadExt::integer(-3).integer_value() == -3);
  CHECK_FALSE(QuadExt(1, 0, 1).is_integer());
  CHECK(QuadExt(1, 0, 1).is_rational());
  CHECK_THROWS_AS(QuadExt(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt(0, 1, 0), std::invalid_argument);
  CHECK(QuadExt(4, -2, 2) < QuadExt(4, 2, 2));
  CHECK(QuadExt(0, 2, 3) < QuadExt::integer(2));
  CHECK(std::abs(QuadExt(3, -1, 5).value() - (3 - std::sqrt(5.0)) / 2) < 1e-15);
}

TEST_CASE("QuadRational arithmetic is exact") {
  const QuadRational a(1, 1, 1, 2), b(1, -1, 1, 2);
  CHECK(a * b == QuadRational::integer(-1));
  CHECK(a + b == QuadRational::integer(2));
  CHECK(a - b == QuadRational(0, 2, 1, 2));
  CHECK(QuadRational(2, 4, 6, 3) == QuadRational(1, 2, 3, 3));
  CHECK(QuadRational(QuadExt(3, 1, 5)) == QuadRational(3, 1, 2, 5));
  CHECK_THROWS_AS(QuadRational(0, 1, 1, 2) + QuadRational(0, 1, 1, 3), std::domain_error);
  const QuadRational big(INT64_MAX / 2, 0, 1, 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("QuadRational ring laws on random elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coeff(-50, 50), den(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const QuadRational x(coeff(rng), coeff(rng), den(rng), 7);
    const QuadRational y(coeff(rng), coeff(rng), den(rng), 7);
    const QuadRational z(coeff(rng), coeff(rng), den(rng), 7);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK((x - y) + y == x);
    CHECK(std::abs(static_cast<double>((x * y).value_ld() - x.value_ld() * y.value_ld())) < 1e-9);
  }
}

TEST_CASE("square-free part against brute force") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto d = square_free_part(n);
    CHECK(d.c == oracle::square_free_brute(n));
    CHECK(d.s * d.s * d.c == n);
    CHECK(is_square_free(n) == (d.c == n));
  }
  CHECK_THROWS_AS(square_free_part(0), std::invalid_argument);
}

TEST_CASE("square-free part beyond the trial-division ceiling") {
  // cofactors left after dividing by every p <= ceiling
  CHECK(square_free_part(101 * 103, 100).c == 101 * 103);
  CHECK(square_free_part(101 * 101, 100).s == 101);
  CHECK(square_free_part(101 * 101, 100).c == 1);
  CHECK(square_free_part(2 * 101 * 101, 100).s == 101);
  CHECK(square_free_part(2 * 101 * 101, 100).c == 2);
  CHECK(square_free_part(999983, 100).c == 999983);
  CHECK_THROWS_AS(square_free_part(101ull * 103 * 107, 100), std::range_error);

  const std::uint64_t p = 10000019, q = 10000079;
  CHECK(square_free_part(p * q).c == p * q);
  CHECK(square_free_part(p * p).s == p);
  CHECK(square_free_part(12 * p * p).c == 3);
  CHECK(square_free_part(16762772).c == 137 * 181);
  CHECK(square_free_part(16762772).s == 26);
}

TEST_CASE("integer square roots") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(UINT64_MAX) == 4294967295ull);
  CHECK(exact_sqrt(841) == 29u);
  CHECK_FALSE(exact_sqrt(840).has_value());
  CHECK(sqrt_quadext(340) == QuadExt(0, 4, 85));
  CHECK(sqrt_quadext(36) == QuadExt::integer(6));
}

TEST_CASE("recognition of quadratic integers") {
  auto rec = recognize_quadext(2 + std::sqrt(2.0));
  REQUIRE(rec.matched());
  CHECK(*rec.value == QuadExt(4, 2, 2));
  rec = recognize_quadext((3 - std::sqrt(5.0)) / 2);
  REQUIRE(rec.matched());
  CHECK(*rec.value == QuadExt(3, -1, 5));
  rec = recognize_quadext(12.0 + 1e-12);
  REQUIRE(rec.matched());
  CHECK(*rec.value == QuadExt::integer(12));
  rec = recognize_quadext(0.5);
  REQUIRE(rec.matched());
  CHECK(*rec.value == QuadExt(1, 0, 1));
  rec = recognize_quadext((29 + 2 * std::sqrt(41.0)) / 2);
  REQUIRE(rec.matched());
  CHECK(*rec.value == QuadExt(29, 2, 41));
  CHECK_FALSE(recognize_quadext(3.14159265358979).matched());
}

TEST_CASE("support classification") {
  const auto cls = classify_support({QuadExt::integer(4), QuadExt::integer(12), QuadExt::integer(6)});
  CHECK(cls.delta == 1);
  CHECK(cls.g == 2);
  CHECK(cls.support.front() == QuadExt::integer(12));
  CHECK(cls.scaled_gaps == std::vector<std::int64_t>{0, 3, 4});
  CHECK(cls.in_lambda_plus(QuadExt::integer(4)));
  CHECK_FALSE(cls.in_lambda_plus(QuadExt::integer(6)));

  // (5 + b sqrt(3))/2, b in {3, 1, -1}: gaps sqrt(3), 2 sqrt(3)
  const auto quad = classify_support({QuadExt(5, 3, 3), QuadExt(5, 1, 3), QuadExt(5, -1, 3)});
  CHECK(quad.delta == 3);
  CHECK(quad.g == 1);
  CHECK(quad.scaled_gaps == std::vector<std::int64_t>{0, 1, 2});

  CHECK_THROWS_AS(classify_support({QuadExt(4, 2, 2), QuadExt(4, 2, 3)}), InvalidSupportError);
  CHECK_THROWS_AS(classify_support({QuadExt(4, 2, 2), QuadExt(6, 2, 2)}), InvalidSupportError);
  CHECK_THROWS_AS(classify_support({QuadExt(1, 0, 1), QuadExt::integer(2)}), InvalidSupportError);
  CHECK_THROWS_AS(classify_support({QuadExt::integer(2)}), std::invalid_argument);
  CHECK(gcd_of({14, 16, 22, 24, 30, 32}) == 2);
}
