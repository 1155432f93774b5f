#include <doctest.h>

#include "hsum/interval_set.hpp"

using namespace hsum;

namespace {

Rational boundary_oracle(long long i, long long n) { return Rational(2 * i - 1 - n, n); }

}  // namespace

TEST_CASE("rational literals") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(5)) == "5/1");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("interval set construction") {
  const auto g = OpenIntervalSet::from_pairs({{0, 1}, {2, 4}});
  CHECK(g.size() == 2);
  CHECK(g.measure() == 3);
  CHECK(g.measure_real() == doctest::Approx(3.0));
  CHECK(g.real_components()[1].b == doctest::Approx(4.0));
  CHECK_THROWS_AS(OpenIntervalSet::from_pairs({{1, 0}}), DomainError);
  CHECK_THROWS_AS(OpenIntervalSet::from_pairs({{0, 2}, {1, 3}}), DomainError);
  CHECK_THROWS_AS(OpenIntervalSet::from_pairs({{0, 1}, {1, 3}}), DomainError);
}

TEST_CASE("locate and distance to the complement") {
  const auto g = OpenIntervalSet::from_pairs({{0, 1}, {2, 4}});
  CHECK(g.locate(Rational(1, 2)) == 0u);
  CHECK(!g.locate(Rational(1)));
  CHECK(!g.locate(Rational(3, 2)));
  CHECK(g.locate_real(3.0) == 1u);
  CHECK(g.distance_to_complement(Rational(1, 2)) == Rational(1, 2));
  CHECK(g.distance_to_complement(Rational(3, 2)) == 0);
  CHECK(g.distance_to_complement(Rational(5, 2)) == Rational(1, 2));
  CHECK(g.distance_to_complement_real(3.25) == doctest::Approx(0.75));
}

TEST_CASE("periodic alignment") {
  const OpenIntervalSet g({Interval{Rational(3, 4), Rational(5, 4)}}, kPi, Rational(2));
  CHECK(g.align(Rational(-3, 4), 0) == Rational(5, 4));
  CHECK(g.locate(Rational(-9, 10)) == 0u);
  CHECK(g.locate_real(-0.9 * kPi) == 0u);
  CHECK(g.distance_to_complement(Rational(-9, 10)) == Rational(3, 20));
}

TEST_CASE("cell boundaries") {
  for (long long n : {8, 64, 1024}) {
    for (long long i : {0LL, 1LL, n / 2, n - 1, n}) {
      CHECK(cell_boundary(static_cast<std::size_t>(i), static_cast<std::size_t>(n)) == boundary_oracle(i, n));
    }
  }
  CHECK(cell_coordinate(boundary_oracle(5, 16), 16) == 5);
}

TEST_CASE("connected components of a mask") {
  const std::size_t n = 16;
  std::vector<char> mask(n, 0);
  CHECK(connected_components(mask).empty());

  mask[0] = mask[1] = 1;
  auto one = connected_components(mask, false);
  REQUIRE(one.size() == 1);
  CHECK(one.components()[0].a == boundary_oracle(0, n));
  CHECK(one.components()[0].b == boundary_oracle(2, n));

  // two runs separated by one false cell
  std::fill(mask.begin(), mask.end(), 0);
  for (std::size_t i : {4u, 5u, 7u, 8u, 9u}) mask[i] = 1;
  const auto two = connected_components(mask);
  REQUIRE(two.size() == 2);
  CHECK(two.components()[1].a - two.components()[0].b == Rational(2, static_cast<long long>(n)));

  // a run through both ends merges across ±π on the circle
  std::fill(mask.begin(), mask.end(), 0);
  mask[0] = mask[n - 1] = 1;
  const auto wrapped = connected_components(mask, true);
  CHECK(wrapped.size() == 1);
  CHECK(wrapped.measure() == Rational(4, static_cast<long long>(n)));
  CHECK(connected_components(mask, false).size() == 2);

  std::fill(mask.begin(), mask.end(), 1);
  CHECK_THROWS_AS(connected_components(mask, true), DomainError);
}

TEST_CASE("cell mask round trip") {
  const std::size_t n = 32;
  std::vector<char> mask(n, 0);
  for (std::size_t i : {0u, 1u, 10u, 11u, 12u, 31u}) mask[i] = 1;
  const auto g = connected_components(mask);
  CHECK(cell_mask(g, n) == mask);
}

TEST_CASE("full period") {
  const auto g = OpenIntervalSet::full_period(64);
  CHECK(g.full());
  CHECK(g.measure_real() == doctest::Approx(kTwoPi));
  CHECK_THROWS_AS(g.distance_to_complement_real(0.1), DomainError);
}
