#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "pcube/counting.hpp"
#include "pcube/error.hpp"
#include "pcube/polynomial.hpp"
#include "pcube/report.hpp"

using namespace pcube;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_degree, long long max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long long> coeff(0, max_coeff);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return Polynomial(std::move(c));
}

BigInt eval_signed(const std::vector<BigInt>& c, const BigInt& t) {
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

TEST_CASE("construction normalizes and rejects negatives") {
  CHECK(Polynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  CHECK_THROWS_AS((Polynomial{1, -1}), InputError);
  CHECK(Polynomial{3, 0, 1}[7] == 0);
  CHECK(Polynomial{3, 0, 1}.to_string() == "x^2 + 3");
  CHECK(Polynomial{0, 1, 2}.to_string() == "2x^2 + x");
  CHECK(Polynomial{}.to_string() == "0");
}

TEST_CASE("arithmetic") {
  const Polynomial p{1, 1};
  CHECK(p + Polynomial{0, 0, 1} == (Polynomial{1, 1, 1}));
  CHECK(p * p == (Polynomial{1, 2, 1}));
  CHECK(pow(Polynomial{2, 1}, 3) == (Polynomial{8, 12, 6, 1}));
  CHECK(pow(p, 0) == Polynomial{1});
  CHECK(scale(p, 5) == (Polynomial{5, 5}));
  CHECK((p * Polynomial{}).is_zero());
  CHECK(Polynomial{8, 12, 6, 1}.evaluate(1) == 27);
  CHECK(coefficient_strings(Polynomial{4, 0, 9}) == std::vector<std::string>{"4", "0", "9"});
}

TEST_CASE("big coefficients stay exact") {
  const auto p = pow(Polynomial{2, 1}, 80);
  CHECK(p[0] == BigInt(1) << 80);
  CHECK(p.evaluate(1) == pow(BigInt(3), 80));
}

TEST_CASE("shift") {
  CHECK(shift(Polynomial{0, 0, 1}, 1) == (Polynomial{1, 2, 1}));
  CHECK(shift(Polynomial{5}, 9) == Polynomial{5});
  CHECK(shift(Polynomial{}, 3).is_zero());
  CHECK(shift(Polynomial{1, 1}, 0) == (Polynomial{1, 1}));
}

TEST_CASE("arithmetic properties on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng, 6, 50);
    const auto q = random_poly(rng, 6, 50);
    const auto r = random_poly(rng, 4, 50);
    REQUIRE(p * q == q * p);
    REQUIRE(p + q == q + p);
    REQUIRE(p * (q + r) == p * q + p * r);
    const unsigned long a = rng() % 5, b = rng() % 5;
    REQUIRE(shift(shift(p, a), b) == shift(p, a + b));
    for (long long t = 0; t < 4; ++t)
      REQUIRE(shift(p, a).evaluate(t) == p.evaluate(t + static_cast<long long>(a)));
    REQUIRE(poly_leq(p, p + q));
    REQUIRE(poly_leq(p, p));
    REQUIRE_FALSE(poly_lt(p, p));
  }
}

TEST_CASE("coefficientwise order") {
  CHECK(poly_leq(Polynomial{1, 2}, Polynomial{1, 2, 1}));
  CHECK(poly_lt(Polynomial{1, 2}, Polynomial{1, 2, 1}));
  CHECK_FALSE(poly_leq(Polynomial{1, 3}, Polynomial{1, 2, 1}));
  CHECK_FALSE(poly_leq(Polynomial{0, 0, 1}, Polynomial{5, 5}));
  CHECK(poly_leq(Polynomial{}, Polynomial{1}));
}

TEST_CASE("unimodality and log-concavity") {
  CHECK(is_unimodal(Polynomial{1, 3, 3, 1}));
  CHECK(is_log_concave(Polynomial{1, 3, 3, 1}));
  CHECK(is_unimodal(Polynomial{5, 5, 1}));
  CHECK_FALSE(is_unimodal(Polynomial{2, 1, 2}));
  CHECK_FALSE(is_log_concave(Polynomial{2, 1, 2}));
  // Unimodal but not log-concave.
  CHECK(is_unimodal(Polynomial{1, 1, 4}));
  CHECK_FALSE(is_log_concave(Polynomial{1, 1, 4}));
  // Internal zeros: log-concave by the inequality, not unimodal.
  CHECK(has_internal_zeros(Polynomial{1, 0, 0, 1}));
  CHECK_FALSE(is_unimodal(Polynomial{1, 0, 0, 1}));
  CHECK(is_log_concave(Polynomial{1, 0, 0, 1}));
  CHECK_FALSE(has_internal_zeros(Polynomial{0, 0, 1, 2}));
  CHECK(is_unimodal(Polynomial{}));
  CHECK(is_log_concave(Polynomial{7}));
}

TEST_CASE("log-concave without internal zeros implies unimodal") {
  std::mt19937_64 rng(11);
  int lc = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_poly(rng, 5, 6);
    if (is_log_concave(p) && !has_internal_zeros(p)) {
      ++lc;
      REQUIRE(is_unimodal(p));
    }
  }
  CHECK(lc > 50);
}

TEST_CASE("expansion in powers of x + 1") {
  const auto b = x_plus_one_expansion(pow(Polynomial{2, 1}, 3));
  CHECK(b == std::vector<BigInt>{1, 3, 3, 1});
  CHECK(x_plus_one_expansion(Polynomial{3, 2}) == std::vector<BigInt>{1, 2});
  CHECK(x_plus_one_expansion(Polynomial{0, 0, 1}) == std::vector<BigInt>{1, -2, 1});
  CHECK(x_plus_one_expansion(Polynomial{}).empty());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, 7, 1000);
    const auto c = x_plus_one_expansion(p);
    for (long long t = -3; t < 4; ++t) REQUIRE(eval_signed(c, t + 1) == eval_signed(p.coeffs(), t));
  }
}

TEST_CASE("safe integers in reports") {
  CHECK(safe_integer(BigInt(42)) == 42);
  CHECK(safe_integer(BigInt(-5)) == -5);
  const BigInt limit = (BigInt(1) << 53) - 1;
  CHECK(safe_integer(limit).is_number_integer());
  CHECK(safe_integer(limit + 1) == "9007199254740992");
  CHECK(polynomial_json(Polynomial{1, 2}) == json::array({"1", "2"}));
  CHECK(fixture::as_u64(Polynomial{4, 4, 1}) == std::vector<std::uint64_t>{4, 4, 1});
}
