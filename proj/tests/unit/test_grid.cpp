#include <doctest.h>

#include <cmath>
#include <complex>

#include "hsum/grid.hpp"

using namespace hsum;

namespace {

PeriodicSamples square_wave(std::size_t n) {
  return PeriodicSamples::from_function(n, [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); });
}

}  // namespace

TEST_CASE("coefficients of a constant") {
  const auto f = PeriodicSamples::from_function(64, [](double) { return 1.0; });
  const auto c = dft_coefficients(f, 3);
  CHECK(std::abs(c(0) - 1.0) < 1e-12);
  for (int k : {-3, -2, -1, 1, 2, 3}) CHECK(std::abs(c(k)) < 1e-12);
}

TEST_CASE("coefficients of cos x") {
  const auto f = PeriodicSamples::from_function(64, [](double x) { return std::cos(x); });
  const auto c = dft_coefficients(f, 2);
  CHECK(std::abs(c(1) - 0.5) < 1e-12);
  CHECK(std::abs(c(-1) - 0.5) < 1e-12);
  for (int k : {-2, 0, 2}) CHECK(std::abs(c(k)) < 1e-12);
}

TEST_CASE("square wave coefficients against the analytic integral") {
  const std::size_t n = 1024;
  const auto c = dft_coefficients(square_wave(n), 5);
  for (int k = -5; k <= 5; ++k) {
    // (1/2π)∫ sign(x) e^{−ikx} dx = (1 − (−1)^k)/(iπk)
    std::complex<double> expect = 0.0;
    if (k % 2 != 0) expect = 2.0 / (std::complex<double>(0.0, 1.0) * kPi * static_cast<double>(k));
    CHECK(std::abs(c(k) - expect) < 4.0 / static_cast<double>(n));
  }
}

TEST_CASE("degree above the grid limit is rejected") {
  const auto f = PeriodicSamples::from_function(16, [](double) { return 1.0; });
  CHECK_NOTHROW(dft_coefficients(f, 7));
  CHECK_THROWS_AS(dft_coefficients(f, 8), AliasingError);
}

TEST_CASE("partial sums of simple functions") {
  const auto one = dft_coefficients(PeriodicSamples::from_function(32, [](double) { return 1.0; }), 5);
  for (int n = 0; n <= 5; ++n) {
    for (double x : {-2.0, 0.0, 1.3}) CHECK(std::abs(partial_sum(one, n, x) - 1.0) < 1e-12);
  }
  const auto cs = dft_coefficients(PeriodicSamples::from_function(32, [](double x) { return std::cos(x); }), 5);
  for (double x : {-2.0, 0.0, 1.3}) {
    CHECK(std::abs(partial_sum(cs, 0, x)) < 1e-12);
    for (int n = 1; n <= 5; ++n) CHECK(std::abs(partial_sum(cs, n, x) - std::cos(x)) < 1e-12);
  }
  CHECK_THROWS_AS(partial_sum(cs, 6, 0.0), RangeError);
}

TEST_CASE("partial sum orientation") {
  const auto f = ComplexSamples::from_function(32, [](double x) { return std::polar(1.0, x); });
  const auto c = dft_coefficients(f, 3);
  CHECK(std::abs(partial_sum(c, 1, 0.7) - std::polar(1.0, 0.7)) < 1e-12);
}

TEST_CASE("square wave partial sum against term-by-term summation") {
  const std::size_t n = 1024;
  const auto c = dft_coefficients(square_wave(n), 5);
  const double x = kPi / 2.0;
  std::complex<double> direct = 0.0;
  for (int k = -5; k <= 5; ++k) direct += c(k) * std::exp(std::complex<double>(0.0, k * x));
  CHECK(std::abs(partial_sum(c, 5, x) - direct) < 1e-13);
  // sine series (4/π)Σ sin(kx)/k over odd k ≤ 5
  double sines = 0.0;
  for (int k = 1; k <= 5; k += 2) sines += 4.0 / (kPi * k) * std::sin(k * x);
  CHECK(std::abs(partial_sum(c, 5, x).real() - sines) < 0.02);
  CHECK(std::abs(partial_sum(c, 5, x).imag()) < 1e-12);
}

TEST_CASE("grid partial sums match pointwise partial sums") {
  const std::size_t n = 64;
  const auto f = PeriodicSamples::from_function(n, [](double x) { return std::exp(std::sin(x)) + 0.3 * std::cos(5 * x); });
  const auto c = dft_coefficients(f, 20);
  GridPartialSums g(c, n);
  for (int k = 0; k <= 20; ++k) {
    for (std::size_t i = 0; i < n; i += 7) {
      CHECK(std::abs(g.values()[i] - partial_sum(c, k, PeriodicSamples::point(i, n))) < 1e-12);
    }
    if (k < 20) g.advance();
  }
  CHECK_THROWS_AS(g.advance(), RangeError);
}

TEST_CASE("Dirichlet kernel") {
  CHECK(dirichlet_kernel(3, 0.0) == doctest::Approx(3.5));
  const double x = 0.9;
  double direct = 0.5;
  for (int k = 1; k <= 4; ++k) direct += std::cos(k * x);
  CHECK(dirichlet_kernel(4, x) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("Dirichlet estimate") {
  // n = 1, u = π: |sin(3π/2)/sin(π/2)| = 1
  const double lhs = std::abs(std::sin(1.5 * kPi) / std::sin(kPi / 2.0));
  CHECK(lhs == doctest::Approx(1.0));
  CHECK(lhs <= 2.0 * (1.0 / kPi + 0.5));
  const auto rep = dirichlet_estimate_check(50, 4096);
  CHECK(rep.ok());
  CHECK(rep.violations == 0);
  CHECK(rep.max_excess <= 1e-9);
}

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(PeriodicSamples(std::vector<double>{1.0}), DomainError);
  CHECK_THROWS_AS(PeriodicSamples(std::vector<double>{1.0, NAN}), DomainError);
  CHECK_NOTHROW(PeriodicSamples(std::vector<double>{1.0, INFINITY}, true));
  const auto f = PeriodicSamples::from_function(8, [](double x) { return x; });
  CHECK(f.point(0) == doctest::Approx(-kPi));
  CHECK(f.point(4) == doctest::Approx(0.0));
}
