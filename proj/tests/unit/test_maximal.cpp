#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hsum/maximal.hpp"

using namespace hsum;

namespace {

// sup over all runs of whole cells containing i, straight from the definition.
double brute_maximal(const PeriodicSamples& f, std::size_t i) {
  const std::size_t n = f.size();
  double best = 0.0;
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t back = 0; back < len; ++back) {
      double s = 0.0;
      for (std::size_t t = 0; t < len; ++t) s += std::abs(f[(i + n - back + t) % n]);
      best = std::max(best, s / static_cast<double>(len));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("maximal function of a constant") {
  const auto f = PeriodicSamples::from_function(128, [](double) { return 2.5; });
  const auto m = hl_maximal(f);
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == doctest::Approx(2.5));
}

TEST_CASE("maximal function against brute force") {
  const auto f = PeriodicSamples::from_function(48, [](double x) { return std::sin(3 * x) + 0.2 * x; });
  const auto m = hl_maximal(f, 2);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(m[i] == doctest::Approx(brute_maximal(f, i)).epsilon(1e-12));
}

TEST_CASE("maximal function of an indicator") {
  const std::size_t n = 1024;
  const double a = kPi / 8.0;
  const auto f = PeriodicSamples::from_function(n, [a](double x) { return std::abs(x) <= a ? 1.0 : 0.0; });
  const auto m = hl_maximal(f);
  const std::size_t i = 3 * n / 4;  // x = π/2
  REQUIRE(PeriodicSamples::point(i, n) == doctest::Approx(kPi / 2.0));
  CHECK(std::abs(m[i] - 2.0 * a / (kPi / 2.0 + a)) < 8.0 / static_cast<double>(n));

  CHECK(level_set(PeriodicSamples::from_function(n, [](double) { return 1.0; }), 2.0).empty());
  CHECK(level_set(PeriodicSamples::from_function(n, [](double) { return 1.0; }), 0.5).full());
  CHECK_THROWS_AS(level_set(m, 0.0), DomainError);

  // 2a/(|x| + a) > 1/2 exactly when |x| < 3a
  const auto g = level_set(m, 0.5);
  REQUIRE(g.size() == 1);
  const Rational cell(2, static_cast<long long>(n));
  CHECK(abs(g.components()[0].a + Rational(3, 8)) <= cell);
  CHECK(abs(g.components()[0].b - Rational(3, 8)) <= cell);
}

TEST_CASE("A1 constants") {
  const WeightSamples unit(PeriodicSamples::from_function(256, [](double) { return 1.0; }));
  CHECK(a1_check(unit) == doctest::Approx(1.0));
  const double c1 = a1_check(floored_power_weight(512, -0.5, kTwoPi / 512));
  const double c2 = a1_check(floored_power_weight(1024, -0.5, kTwoPi / 1024));
  CHECK(std::isfinite(c1));
  CHECK(c1 < 4.0);
  CHECK(std::abs(c1 - c2) / c2 < 0.05);
  // |x| + h: ratio at x = 0 grows like 1/h
  auto shifted = [](std::size_t n) {
    const double h = kTwoPi / static_cast<double>(n);
    return a1_check(WeightSamples(PeriodicSamples::from_function(n, [h](double x) { return std::abs(x) + h; })));
  };
  CHECK(shifted(512) > 1.8 * shifted(256));
  CHECK_THROWS_AS(WeightSamples(PeriodicSamples::from_function(8, [](double x) { return x; })), DomainError);
}

TEST_CASE("weak-type report") {
  const std::size_t n = 256;
  const auto f = PeriodicSamples::from_function(n, [](double x) { return std::abs(x) < 0.3 ? 5.0 : 0.0; });
  const auto zero = PeriodicSamples::from_function(n, [](double) { return 0.0; });
  const auto lambdas = log_spaced(0.1, 10.0, 7);
  const auto rz = weak_type_report(zero, f, lambdas);
  CHECK(rz.sup_constant == 0.0);
  for (double m : rz.measures) CHECK(m == 0.0);

  const auto fstar = hl_maximal(f);
  const auto plain = weak_type_report(fstar, f, lambdas);
  const WeightSamples unit(PeriodicSamples::from_function(n, [](double) { return 1.0; }));
  const auto weighted = weak_type_report(fstar, f, lambdas, &unit);
  CHECK(plain.measures == weighted.measures);
  CHECK(plain.constants == weighted.constants);
  for (std::size_t j = 1; j < plain.measures.size(); ++j) CHECK(plain.measures[j] <= plain.measures[j - 1]);

  // the exact sup dominates every sampled level
  const auto sup = weak_type_sup(fstar, f);
  CHECK(sup.constant >= plain.sup_constant);
  const auto bad = PeriodicSamples::from_function(128, [](double) { return 1.0; });
  CHECK_THROWS_AS(weak_type_report(bad, f, lambdas), ShapeError);
}

TEST_CASE("exact weak-type sup on a step function") {
  // Tf takes 3 on 1 cell, 2 on 2 more, 1 on 3 more; ‖f‖ = 1·h·8
  std::vector<double> t(8, 0.0), ones(8, 1.0);
  t[0] = 3.0;
  t[1] = t[2] = 2.0;
  t[3] = t[4] = t[5] = 1.0;
  const PeriodicSamples tf(t), f(ones);
  const double h = kTwoPi / 8.0;
  const double norm = 8.0 * h;
  const double expect = std::max({3.0 * 1.0 * h, 2.0 * 3.0 * h, 1.0 * 6.0 * h}) / norm;
  CHECK(weak_type_sup(tf, f).constant == doctest::Approx(expect));
}

TEST_CASE("log spacing") {
  const auto v = log_spaced(0.5, 8.0, 5);
  CHECK(v.front() == doctest::Approx(0.5));
  CHECK(v[2] == doctest::Approx(2.0));
  CHECK(v.back() == doctest::Approx(8.0));
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 3), DomainError);
}
