#include <random>

#include "doctest.h"
#include "rhor/bounds.hpp"
#include "rhor/errors.hpp"
#include "rhor/verifier.hpp"

using namespace rhor;

TEST_CASE("edge min sum") {
  CHECK(edge_min_sum(Profile{1, 1, 2, 2, 3}) == 6);
  CHECK(edge_min_sum(Profile{1}) == 0);
  CHECK(edge_min_sum(Profile{1, 8, 5, 4}) == 10);
}

TEST_CASE("lm1 check") {
  CHECK(lm1_check(Profile{1, 1, 2, 2, 3}));
  CHECK_FALSE(check_path(Profile{1, 1, 2, 2, 3}).feasible);
  CHECK_FALSE(lm1_check(Profile{1, 1, 1, 1, 1}));
  CHECK(lm1_check(Profile{1, 2, 2, 2, 3}));
}

TEST_CASE("sorted floor check") {
  CHECK(sorted_floor_check(Profile{1, 1, 2, 2, 3}));
  CHECK_FALSE(sorted_floor_check(Profile{1, 1, 1, 2, 3}));
  CHECK(sorted_floor_check(Profile{1, 8, 5, 4, 2, 8, 6, 4, 3, 8, 7, 4, 4, 8, 8, 8}));
}

TEST_CASE("simple lower bound") {
  CHECK(simple_lower(4) == 6);
  CHECK(simple_lower(5) == 9);
  CHECK(simple_lower(16) == 72);
  for (int n = 2; n <= 40; n += 2) CHECK(simple_lower(n) == (n / 2) * (n / 2 + 1));
}

TEST_CASE("necessary conditions hold on random feasible profiles") {
  std::mt19937 rng(31);
  int feasible = 0;
  while (feasible < 10000) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<int> orders(n);
    for (int& x : orders) x = 1 + static_cast<int>(rng() % (n + 1));
    const Profile p(orders);
    if (!check_path(p).feasible) continue;
    ++feasible;
    REQUIRE(lm1_check(p));
    REQUIRE(sorted_floor_check(p));
    REQUIRE(p.total() >= simple_lower(n));
  }
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(421, 2)) == "421/2");
  CHECK(to_string(Rational(815)) == "815");
  CHECK(parse_rational("1/14") == Rational(1, 14));
  CHECK(parse_rational("0.4") == Rational(2, 5));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("th1 value") {
  const Th1Params cor = Th1Params::corollary();
  CHECK(cor.a == Rational(1, 4) + Rational(1, 14));
  CHECK(th1_value(28, cor) == Rational(421, 2));
  CHECK(th1_value(56, cor) == Rational(815));
  CHECK_THROWS_AS(th1_value(27, cor), DomainError);

  Th1Params bad = cor;
  bad.a = Rational(2, 5);
  bad.a_prime = Rational(3, 10);
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("condition 1"), ParameterError);
  CHECK_THROWS_AS(th1_value(28, bad), ParameterError);

  Th1Params wide = cor;
  wide.d = Rational(1, 2);
  CHECK_THROWS_WITH_AS(wide.validate(), doctest::Contains("condition 2"), ParameterError);

  Th1Params range = cor;
  range.c = Rational(3, 4);
  CHECK_THROWS_AS(range.validate(), ParameterError);

  // Condition 3 alone: a + 3c/2 + d <= a' but > 2b.
  const Th1Params third{Rational(1, 2), Rational(1, 5), Rational(1, 10), Rational(1, 10),
                        Rational(1, 10)};
  CHECK_THROWS_WITH_AS(third.validate(), doctest::Contains("condition 3"), ParameterError);
}

TEST_CASE("corollary value") {
  CHECK(corollary_value(28) == Rational(421, 2));
  CHECK(corollary_value(56) == Rational(815));
  CHECK(corollary_value(784) == Rational(154826));
  CHECK(corollary_value(784, true) == Rational(154826 + 14));
  for (int n = 2; n <= 1000; n += 2) {
    const Rational half(n / 2);
    CHECK(corollary_value(n) == half * (half + 1) + Rational(n * n, 784) - Rational(n, 56));
  }
  for (int n = 28; n <= 1000; n += 2) CHECK(th1_value(n, Th1Params::corollary()) == corollary_value(n));
}

TEST_CASE("th1 never exceeds known exact values") {
  const std::pair<int, int> known[] = {{6, 14}, {8, 23}, {10, 35}, {12, 49}, {14, 66}};
  for (auto [n, rho] : known) {
    CHECK(th1_value(n, Th1Params::corollary()) <= rho);
    CHECK(simple_lower(n) <= rho);
  }
}
