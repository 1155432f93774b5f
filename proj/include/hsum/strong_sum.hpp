#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/whitney.hpp"

namespace hsum {

/// Partial sums S_0..S_n of one Fourier series at a point x.
struct StrongMeanSeries {
  double x = 0.0;
  std::vector<std::complex<double>> partials;  // partials[k] = S_k(f, x)
  double alpha = 1.0;                          // in (0, 2]
  std::complex<double> target{0.0, 0.0};

  int order() const { return static_cast<int>(partials.size()) - 1; }
};

/// Builds S_0..S_n at x by accumulating partial_sum_term, so every entry is
/// bit-identical to partial_sum(c, k, x).
StrongMeanSeries make_strong_series(const FourierCoeffs& c, double x, int n, double alpha,
                                    std::complex<double> target = {});

/// A series with prescribed partial sums (synthetic inputs).
StrongMeanSeries series_from_partials(std::vector<std::complex<double>> partials, double alpha = 2.0,
                                      std::complex<double> target = {});

/// (1/n) Σ_{k=1}^n |S_k − s|^α.
double h_alpha_mean(const StrongMeanSeries& s, int n);

/// sup_{1≤n≤n_max} [(1/n) Σ_{k=1}^n |S_k|^α]^{1/α}.
double sigma_alpha_star(const StrongMeanSeries& s, int n_max);

/// σ*_α at every grid point for each α, streaming the partial sums degree by
/// degree.  Requires c.max_degree() ≥ n_max.
std::vector<PeriodicSamples> sigma_alpha_star_grid(const FourierCoeffs& c, int n_max, std::size_t n_points,
                                                   std::span<const double> alphas);

/// (1/π)·ε/(ε² + θ²), ε = 1 − r.
double poisson_kernel(double r, double theta);

struct PoissonBound {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;  // lhs ≤ rhs + 1e−12·rhs
};

/// lhs = ∫_J ε/(ε² + (u − v)²) f(v) dv with f given as equal-width cell values
/// on J = [a, b]; rhs = λ/(2c), from ε/(ε² + d²) ≤ 1/(2d) and d ≥ c|J|.
/// Throws DomainError when the average of f exceeds λ or d(u, J) < c|J|.
PoissonBound poisson_average_bound(std::span<const double> f, double a, double b, double u, double c, double r,
                                   double lambda);

struct KernelParams {
  double r = 0.0;
  double eps = 1.0;  // 1 − r
  int n_tail = 0;    // r^{n_tail} < 1e−14

  /// Smallest admissible truncation unless `n_tail` is larger.
  static KernelParams make(double r, int n_tail = 0);
};

/// (1 − r) Σ_{ν=0}^{N_tail} r^ν |S_ν|², with S_ν frozen at the last available
/// partial sum beyond the series' order.
double abel_square_mean(const StrongMeanSeries& s, double r);

struct AbelDomination {
  double cesaro = 0.0;
  double abel = 0.0;
  double ratio = 0.0;
  bool holds = true;  // cesaro ≤ 4·abel
};

/// Compares (1/n) Σ_{ν<n} |S_ν|² with the Abel mean at r = 1 − 1/n.
AbelDomination abel_domination_check(const StrongMeanSeries& s, int n);

struct SeriesValue {
  double value = 0.0;
  double truncation_bound = 0.0;
};

/// Σ_{ν=0}^{N_tail} r^ν D_ν(x) D_ν(y) with compensated summation; the bound
/// uses |D_ν| ≤ ν + 1/2 on the dropped tail.
SeriesValue d_kernel_series(const KernelParams& p, double x, double y);

/// (1−r)[(1−r)² + 2r(2 + cos x + cos y)] / [4(1 − 2r cos(x−y) + r²)(1 − 2r cos(x+y) + r²)]
double d_kernel_closed(const KernelParams& p, double x, double y);

struct MajorantReport {
  double c3 = 0.0;  // largest constant valid at every sampled strip point
  double tight_x = 0.0;
  double tight_y = 0.0;
  double tight_r = 0.0;
  std::size_t strip_points = 0;
  std::size_t exterior_points = 0;
  std::size_t exterior_violations = 0;
};

/// Grid search for C₃ in D ≤ 9(1−r)/([(1−r)² + rC₃(x−y)²][(1−r)² + rC₃(x+y)²])
/// over (x, y) ∈ [−π, π]² with |x ± y| ≤ π − eps_strip.  Points outside the
/// strip are then tested against the same C₃.
MajorantReport d_kernel_majorant_check(std::span<const double> radii, double eps_strip, std::size_t grid = 121);

struct CaseEstimates {
  double adjacent_sum = 0.0;
  double nonadjacent_sum = 0.0;
  double marcinkiewicz = 0.0;  // 𝓕(x)
  double adjacent_constant = 0.0;     // adjacent_sum / (λ 𝓕(x))
  double nonadjacent_constant = 0.0;  // nonadjacent_sum / λ²
  std::size_t max_adjacent_neighbours = 0;
};

/// Splits Σ_{i,j} (1−r)² ∫_{I_i}∫_{I_j} |f(v)||f(u)| / ([(1−r)² + c(v−x)²][(1−r)² + c(u−v)²])
/// by whether I_j is I_i or touches it.  Cells are weighted by their overlap
/// with each cover interval.  x inside G throws DomainError.
CaseEstimates double_integral_case_estimates(const PeriodicSamples& f, const WhitneyCover& cover, double x, double r,
                                             double lambda, double c);

struct AbelIdentity {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double bound = 0.0;  // |S_last|·|z|^{N_tail+1} plus rounding allowance
  bool holds = true;
};

/// Σ a_k z^k against (1 − z) Σ_{k=0}^{N_tail} S_k z^k, S_k frozen past the
/// end of a.  N_tail defaults to the length of a or the point where |z|^k
/// drops below 1e−17, whichever is larger.
AbelIdentity power_series_abel_identity(std::span<const std::complex<double>> a, std::complex<double> z,
                                        int n_tail = 0);

struct HausdorffYoung {
  double coeff_norm = 0.0;     // (Σ|c_k|^q)^{1/q}
  double function_norm = 0.0;  // ((1/2π)∫|f|^p)^{1/p}
  double ratio = 0.0;
};

/// Classical constant-one inequality with coefficients up to N/2 − 1.
HausdorffYoung hausdorff_young_check(const ComplexSamples& f, double p);
HausdorffYoung hausdorff_young_check(const PeriodicSamples& f, double p);

}  // namespace hsum
