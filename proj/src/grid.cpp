#include "hsum/grid.hpp"

#include <limits>
#include <string>

namespace hsum {

FourierCoeffs::FourierCoeffs(int max_degree, std::vector<std::complex<double>> coeffs)
    : max_degree_(max_degree), coeffs_(std::move(coeffs)) {
  if (max_degree_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * max_degree_ + 1)) {
    throw DomainError("coefficient array must hold 2K+1 entries");
  }
}

std::vector<std::complex<double>> grid_twiddles(std::size_t n) {
  std::vector<std::complex<double>> tw(n);
  for (std::size_t m = 0; m < n; ++m) {
    tw[m] = std::polar(1.0, -kTwoPi * static_cast<double>(m) / static_cast<double>(n));
  }
  return tw;
}

namespace {

std::size_t wrap_index(long long k, std::size_t i, std::size_t n) {
  long long m = (k * static_cast<long long>(i)) % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::size_t>(m);
}

template <class T>
FourierCoeffs dft_impl(const Samples<T>& f, int max_degree) {
  const std::size_t n = f.size();
  if (max_degree < 0) throw DomainError("negative degree");
  if (2 * static_cast<long long>(max_degree) + 2 > static_cast<long long>(n)) {
    throw AliasingError("degree " + std::to_string(max_degree) + " exceeds N/2 - 1 for N = " +
                        std::to_string(n));
  }
  const auto tw = grid_twiddles(n);
  std::vector<std::complex<double>> c(static_cast<std::size_t>(2 * max_degree + 1));
  for (int k = -max_degree; k <= max_degree; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += f[i] * tw[wrap_index(k, i, n)];
    // x_i = −π + 2πi/N contributes the factor e^{ikπ} = (−1)^k.
    if (k % 2 != 0) acc = -acc;
    c[static_cast<std::size_t>(k + max_degree)] = acc / static_cast<double>(n);
  }
  return FourierCoeffs(max_degree, std::move(c));
}

}  // namespace

FourierCoeffs dft_coefficients(const PeriodicSamples& f, int max_degree) { return dft_impl(f, max_degree); }
FourierCoeffs dft_coefficients(const ComplexSamples& f, int max_degree) { return dft_impl(f, max_degree); }

std::complex<double> partial_sum_term(const FourierCoeffs& c, int k, double x) {
  if (k == 0) return c(0);
  const std::complex<double> e = std::polar(1.0, static_cast<double>(k) * x);
  return c(k) * e + c(-k) * std::conj(e);
}

std::complex<double> partial_sum(const FourierCoeffs& c, int n, double x) {
  if (n < 0 || n > c.max_degree()) {
    throw RangeError("partial sum order " + std::to_string(n) + " outside [0, " +
                     std::to_string(c.max_degree()) + "]");
  }
  std::complex<double> s{0.0, 0.0};
  for (int k = 0; k <= n; ++k) s += partial_sum_term(c, k, x);
  return s;
}

double dirichlet_kernel(int nu, double x) {
  if (nu < 0) throw DomainError("Dirichlet kernel order must be non-negative");
  const double r = std::remainder(x, kTwoPi);
  const double half = static_cast<double>(nu) + 0.5;
  if (std::abs(r) < 1e-8) {
    // sin(ax)/(2 sin(x/2)) = a − (a³ − a/4)x²/6 + O(x⁴)
    return half - (half * half * half - half / 4.0) * r * r / 6.0;
  }
  return std::sin(half * r) / (2.0 * std::sin(r / 2.0));
}

DirichletEstimateReport dirichlet_estimate_check(int n_max, std::size_t grid_size) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (grid_size < 2) throw DomainError("grid too small");
  DirichletEstimateReport rep;
  rep.n_max = n_max;
  rep.grid_size = grid_size;
  rep.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < grid_size; ++i) {
    const double u = PeriodicSamples::point(i, grid_size);
    if (std::abs(u) < 1e-15) continue;
    const double bound = rep.scale * (1.0 / std::abs(u) + 0.5);
    const double s = std::sin(u / 2.0);
    for (int n = 0; n <= n_max; ++n) {
      const double ratio = std::abs(std::sin((n + 0.5) * u) / s);
      const double excess = ratio - bound;
      if (excess > rep.max_excess) {
        rep.max_excess = excess;
        rep.worst_n = n;
        rep.worst_u = u;
      }
      if (excess > 1e-9) ++rep.violations;
    }
  }
  return rep;
}

GridPartialSums::GridPartialSums(const FourierCoeffs& c, std::size_t n_points)
    : c_(c), twiddles_(grid_twiddles(n_points)), sums_(n_points, c(0)) {}

void GridPartialSums::advance() {
  if (k_ >= c_.max_degree()) throw RangeError("partial sums exhausted the coefficient degree");
  ++k_;
  const std::size_t n = sums_.size();
  const std::complex<double> cp = c_(k_);
  const std::complex<double> cm = c_(-k_);
  const bool odd = (k_ % 2) != 0;
  for (std::size_t i = 0; i < n; ++i) {
    // e^{ik x_i} = (−1)^k conj(e^{−2πi k i/N})
    std::complex<double> e = std::conj(twiddles_[wrap_index(k_, i, n)]);
    if (odd) e = -e;
    sums_[i] += cp * e + cm * std::conj(e);
  }
}

}  // namespace hsum
