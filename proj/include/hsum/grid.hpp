#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "hsum/errors.hpp"

namespace hsum {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A 2π-periodic function sampled on N equispaced points of [−π, π).
///
/// Sample i sits at x_i = −π + 2πi/N and represents the cell
/// [x_i − π/N, x_i + π/N).  Cell-based operations (averages, level sets,
/// measures) treat the function as constant on each cell.
template <class T>
class Samples {
 public:
  using value_type = T;

  Samples() = default;
  explicit Samples(std::vector<T> values, bool singular = false)
      : values_(std::move(values)), singular_(singular) {
    if (values_.size() < 2) throw DomainError("sample grid needs at least 2 points");
    if (!singular_) {
      for (const T& v : values_) {
        if (!is_finite(v)) throw DomainError("non-finite sample in a regular sample set");
      }
    }
  }

  template <class F>
  static Samples from_function(std::size_t n, F&& f) {
    std::vector<T> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<T>(f(point(i, n)));
    return Samples(std::move(v));
  }

  static double point(std::size_t i, std::size_t n) {
    return -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(n);
  }

  std::size_t size() const { return values_.size(); }
  double cell_width() const { return kTwoPi / static_cast<double>(values_.size()); }
  double point(std::size_t i) const { return point(i, values_.size()); }
  bool singular() const { return singular_; }

  const T& operator[](std::size_t i) const { return values_[i]; }
  T& operator[](std::size_t i) { return values_[i]; }
  std::span<const T> values() const { return values_; }
  std::vector<T>& mutable_values() { return values_; }

  // ∫|f| over one period, by cell sums.
  double l1_norm() const {
    double s = 0.0;
    for (const T& v : values_) s += std::abs(v);
    return s * cell_width();
  }

 private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const std::complex<double>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }

  std::vector<T> values_;
  bool singular_ = false;
};

using PeriodicSamples = Samples<double>;
using ComplexSamples = Samples<std::complex<double>>;

/// Fourier coefficients c_k for |k| ≤ K.
class FourierCoeffs {
 public:
  FourierCoeffs(int max_degree, std::vector<std::complex<double>> coeffs);

  int max_degree() const { return max_degree_; }
  const std::complex<double>& operator()(int k) const { return coeffs_[static_cast<std::size_t>(k + max_degree_)]; }
  std::span<const std::complex<double>> raw() const { return coeffs_; }

 private:
  int max_degree_;
  std::vector<std::complex<double>> coeffs_;
};

/// Trapezoid-rule coefficients c_k = (1/N) Σ_i f(x_i) e^{−ik x_i}, |k| ≤ K.
/// Throws AliasingError when K > N/2 − 1.
FourierCoeffs dft_coefficients(const PeriodicSamples& f, int max_degree);
FourierCoeffs dft_coefficients(const ComplexSamples& f, int max_degree);

/// Contribution of the frequency pair ±k to a partial sum at x.  Every
/// partial-sum path in the library accumulates these terms in increasing k.
std::complex<double> partial_sum_term(const FourierCoeffs& c, int k, double x);

/// S_n(f, x) = Σ_{|k| ≤ n} c_k e^{ikx}.  The pair is oriented so that
/// f = e^{ix} gives S_1 = e^{ix}.
std::complex<double> partial_sum(const FourierCoeffs& c, int n, double x);

/// D_ν(x) = sin((ν+1/2)x) / (2 sin(x/2)); ν + 1/2 at x ≡ 0 (mod 2π).
double dirichlet_kernel(int nu, double x);

struct DirichletEstimateReport {
  int n_max = 0;
  std::size_t grid_size = 0;
  double scale = 2.0;
  double max_excess = 0.0;  // max of ratio − scale·(1/|u| + 1/2)
  int worst_n = 0;
  double worst_u = 0.0;
  std::size_t violations = 0;  // excess above 1e−9
  bool ok() const { return violations == 0; }
};

/// Sweeps u over the grid points of (−π, π) \ {0} and n ≤ n_max, comparing
/// |sin((n+1/2)u) / sin(u/2)| with 2·(1/|u| + 1/2).
DirichletEstimateReport dirichlet_estimate_check(int n_max, std::size_t grid_size);

/// e^{−2πi m/N} for m = 0..N−1; exact-index twiddles for grid transforms.
std::vector<std::complex<double>> grid_twiddles(std::size_t n);

/// Partial sums S_k(f, x_i) on every grid point, for one k at a time.
/// Used by the grid-wide maximal operators; k advances from 0 upward.
class GridPartialSums {
 public:
  GridPartialSums(const FourierCoeffs& c, std::size_t n_points);

  int degree() const { return k_; }
  void advance();  // k → k + 1
  std::span<const std::complex<double>> values() const { return sums_; }

 private:
  const FourierCoeffs& c_;
  std::vector<std::complex<double>> twiddles_;
  std::vector<std::complex<double>> sums_;
  int k_ = 0;
};

}  // namespace hsum
