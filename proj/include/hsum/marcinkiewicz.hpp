#pragma once

#include <limits>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/interval_set.hpp"
#include "hsum/maximal.hpp"
#include "hsum/whitney.hpp"

namespace hsum {

/// Midpoint quadrature near a singularity: cells closer than the exclusion
/// radius to the evaluation point are not integrated through.
struct SingularQuadratureConfig {
  double exclusion_radius;
  double cell_width;

  SingularQuadratureConfig(double exclusion_radius, double cell_width);
  /// Exclusion radius of one cell on an N-point grid.
  static SingularQuadratureConfig for_grid(std::size_t n);
};

/// d(x, F) for F the complement of G, real coordinates.  Throws when F is empty.
double distance_to_set(double x, const OpenIntervalSet& g);
/// Exact variant for rational x in the units of G.
Rational distance_to_set(const Rational& x, const OpenIntervalSet& g);

/// 𝓕(x) = ∫_G d(y, F)/(x − y)² dy by the midpoint rule on subcells of each
/// component.  Within the exclusion radius the integrand is replaced by its
/// cap min(d(y,F)/(x−y)², 1/h), valid because d(y, F) ≤ |x − y| for x ∈ F.
/// Points inside G are rejected unless `extended` is set.  On a periodic G
/// the nearest periodic image of y is used.
double marcinkiewicz_function(double x, const OpenIntervalSet& g, const SingularQuadratureConfig& cfg,
                              bool extended = false);

/// Piecewise-constant function with breakpoints in real coordinates.
struct PiecewiseConstant {
  struct Piece {
    double a;
    double b;
    double value;
  };
  std::vector<Piece> pieces;  // zero outside the pieces
  double period = kTwoPi;

  double operator()(double x) const;
  PeriodicSamples sample(std::size_t n) const;
};

/// φ = |Δ_ν| on each component Δ_ν of G, 0 on the complement P.
PiecewiseConstant phi_function(const OpenIntervalSet& g);

/// ∫_{−π}^{π} φ(t + x)/t² dt, integrated exactly piece by piece.  Returns
/// +∞ when a non-zero piece reaches t = 0.
double phi_integral(double x, const PiecewiseConstant& phi);

/// Σ_k f̄_k |I_k| ∫_{I_k} dy/(x − y)², each term in closed form.
/// Throws DomainError when x lies in the closure of some I_k.
double series_majorant(double x, const WhitneyCover& cover, std::span<const double> averages);
/// Same with the cover intervals already in real coordinates; period 0 means the line.
double series_majorant(double x, std::span<const RealInterval> intervals, double period,
                       std::span<const double> averages);
std::vector<RealInterval> real_intervals(const WhitneyCover& cover);

struct WeightedLevelMeasure {
  double mu_g = 0.0;       // ω(G)
  double bound_rhs = 0.0;  // (1/λ)∫|f| ω dx
  double ratio() const { return bound_rhs > 0.0 ? mu_g / bound_rhs : 0.0; }
};

WeightedLevelMeasure weighted_level_measure(const OpenIntervalSet& g, const WeightSamples& w,
                                            const PeriodicSamples& f, double lambda);

/// The ε-dilated components (1+ε)J_k, scaled about their centres.
std::vector<RealInterval> dilated_components(const OpenIntervalSet& g, double shrink_eps);

struct SurprisingIntegral {
  double value = 0.0;
  std::vector<double> per_component;
};

/// ∫ f_G(x + y)/y² dy = ∫_G f(t)/(x − t)² dt with f_G = f·χ_G, by cell sums
/// weighted by the overlap of each cell with G.  x must lie outside every
/// dilated component, otherwise DomainError.
SurprisingIntegral surprising_integral(double x, const PeriodicSamples& f, const OpenIntervalSet& g,
                                       double shrink_eps);

struct ComponentBound {
  double contribution = 0.0;  // ∫_{J_k} |f|(y) ∫_{F̃} dx/(x−y)² dy
  double mass = 0.0;          // ∫_{J_k} |f|
  double length = 0.0;        // |J_k|
  double ratio = 0.0;         // contribution·ε|J_k|/mass
};

/// Per-component form of the tail bound over F̃ = (∪(1+ε)J_k)^c on the line.
/// Each ratio is at most 4: a point y ∈ J_k is at distance ≥ ε|J_k|/2 from F̃
/// on both sides.
std::vector<ComponentBound> surprising_component_bounds(const PeriodicSamples& f, const OpenIntervalSet& g,
                                                        double shrink_eps);

/// ∫_ℝ ε^{p−1}/(ε^p + |y|^p) dy, which equals ∫ ds/(1 + |s|^p) for every ε.
double p_kernel_normalization(double p, double eps);

/// Gaps removed from [0, 1] through generation g of the fat Cantor
/// construction: each remaining interval loses an open middle piece of length
/// 4^{−gen}.  Exact rational endpoints, unit 1.
OpenIntervalSet fat_cantor_gaps(int generations);
/// The closed intervals left after `generations` removals.
std::vector<Interval> fat_cantor_remaining(int generations);

}  // namespace hsum
