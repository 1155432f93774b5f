#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/interval_set.hpp"

namespace hsum {

/// Non-centred Hardy–Littlewood maximal function of |f| on the grid.
///
/// f*(x_i) is the largest average of |f| over runs of whole cells that
/// contain cell i, including runs wrapping across ±π, up to the full period.
/// Exhaustive O(N²); work is split across `threads` (0 = hardware).
PeriodicSamples hl_maximal(const PeriodicSamples& f, unsigned threads = 0);

/// G = {f* > λ} as maximal runs of cells snapped to cell boundaries.
/// An all-true mask yields OpenIntervalSet::full_period.  λ ≤ 0 throws.
OpenIntervalSet level_set(const PeriodicSamples& fstar, double lambda);

/// Positive weight ω on the grid, optionally carrying sup ω*/ω.
class WeightSamples {
 public:
  explicit WeightSamples(PeriodicSamples base);

  const PeriodicSamples& base() const { return base_; }
  std::size_t size() const { return base_.size(); }
  double operator[](std::size_t i) const { return base_[i]; }

  const std::optional<double>& a1_constant() const { return a1_constant_; }
  void set_a1_constant(double c) { a1_constant_ = c; }

  /// ω(E) for a cell mask: Σ_{cells in E} ω(x_i)·(2π/N).
  double measure(std::span<const char> mask) const;

 private:
  PeriodicSamples base_;
  std::optional<double> a1_constant_;
};

/// max(|x|, floor)^exponent, the grid-floored power weight.
WeightSamples floored_power_weight(std::size_t n, double exponent, double floor);

/// sup_i ω*(x_i)/ω(x_i).
double a1_check(const WeightSamples& w);

struct WeakTypeReport {
  std::vector<double> lambdas;
  std::vector<double> measures;
  std::vector<double> constants;
  double sup_constant = 0.0;
  double norm = 0.0;  // ∫|f| dx or ∫|f| ω dx
};

/// λ·m({Tf > λ}) / ‖f‖ for each λ; Lebesgue cell counting, or ω-weighted
/// when a weight is supplied.  All inputs must share one grid.
WeakTypeReport weak_type_report(const PeriodicSamples& tf, const PeriodicSamples& f,
                                std::span<const double> lambdas,
                                const WeightSamples* w = nullptr);

struct WeakTypeSup {
  double constant = 0.0;
  double lambda = 0.0;  // the sup is approached as λ increases to this value
};

/// sup over all λ > 0 of λ·m({Tf > λ})/‖f‖, read off the sorted values of Tf.
WeakTypeSup weak_type_sup(const PeriodicSamples& tf, const PeriodicSamples& f, const WeightSamples* w = nullptr);

/// λ_j = lo·(hi/lo)^{j/(count−1)}.
std::vector<double> log_spaced(double lo, double hi, std::size_t count);

}  // namespace hsum
