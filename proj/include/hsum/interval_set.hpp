#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hsum/grid.hpp"

namespace hsum {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p".  Throws DomainError on malformed input or q = 0.
Rational parse_rational(std::string_view text);
/// Always "p/q" with q > 0 and gcd(p, q) = 1.
std::string format_rational(const Rational& r);
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Interval with exact endpoints and per-end closure flags.
struct Interval {
  Rational a;
  Rational b;
  bool closed_left = false;
  bool closed_right = false;

  Rational length() const { return b - a; }
  bool contains(const Rational& x) const {
    return (closed_left ? x >= a : x > a) && (closed_right ? x <= b : x < b);
  }
  // Closures share at least one point.
  bool touches(const Interval& o) const { return a <= o.b && o.a <= b; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval endpoints in real coordinates.
struct RealInterval {
  double a;
  double b;
};

/// Gap between the closures of two disjoint-closure intervals on the line; 0 if they touch.
Rational closure_gap(const Interval& u, const Interval& v);

/// Disjoint open intervals (a_k, b_k) with exact endpoints.
///
/// Coordinates are expressed in multiples of `unit`: 1 for literal sets such
/// as (0,1) ∪ (2,4), π for sets snapped to a sample grid.  A set with a period
/// lives on the circle of that length (in units); its last component may run
/// past the canonical range, which is how a component crossing ±π is stored.
class OpenIntervalSet {
 public:
  OpenIntervalSet() = default;
  OpenIntervalSet(std::vector<Interval> components, double unit = 1.0,
                  std::optional<Rational> period = std::nullopt);

  /// Convenience for literal sets: {{"0","1"},{"2","4"}}.
  static OpenIntervalSet from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs,
                                    double unit = 1.0, std::optional<Rational> period = std::nullopt);
  /// The whole circle of an N-point grid; its complement F is empty.
  static OpenIntervalSet full_period(std::size_t grid_size);

  const std::vector<Interval>& components() const { return components_; }
  /// Components in real coordinates (units applied), same order.
  const std::vector<RealInterval>& real_components() const { return real_; }
  double period_real() const { return period_real_; }
  double unit() const { return unit_; }
  const std::optional<Rational>& period() const { return period_; }
  bool periodic() const { return period_.has_value(); }
  bool full() const { return full_; }
  bool empty() const { return components_.empty(); }
  std::size_t size() const { return components_.size(); }

  /// Grid size for sets snapped to a sample grid (unit π, period 2), else 0.
  std::size_t grid_size() const { return grid_size_; }
  void set_grid_size(std::size_t n) { grid_size_ = n; }

  Rational measure() const;  // in units
  double measure_real() const { return to_double(measure()) * unit_; }

  /// Index of the component containing x (open), if any.
  std::optional<std::size_t> locate(const Rational& x) const;
  std::optional<std::size_t> locate_real(double x) const;

  /// Shifts x by a multiple of the period so that it lies in [a_k, a_k + period).
  Rational align(const Rational& x, std::size_t k) const;
  double align_real(double x, std::size_t k) const;

  /// d(x, F) with F the complement.  Exact for rational x.
  Rational distance_to_complement(const Rational& x) const;
  double distance_to_complement_real(double x) const;

 private:
  void validate() const;
  void cache_real();

  std::vector<Interval> components_;
  std::vector<RealInterval> real_;
  double period_real_ = 0.0;
  double unit_ = 1.0;
  std::optional<Rational> period_;
  bool full_ = false;
  std::size_t grid_size_ = 0;
};

/// Left boundary of grid cell i in units of π: (2i − 1 − N)/N.
Rational cell_boundary(std::size_t i, std::size_t n);

/// Position p (units of π) in cell coordinates, where cell i is [i, i+1).
Rational cell_coordinate(const Rational& p, std::size_t n);

/// Maximal runs of set cells as open intervals snapped to cell boundaries
/// (units of π, period 2).  With `periodic`, a run touching both ends of the
/// grid is merged across ±π.  An all-true periodic mask has an empty
/// complement and is rejected with DomainError.
OpenIntervalSet connected_components(std::span<const char> mask, bool periodic = true);

/// Cell i lies in G when its centre x_i lies in one of the components.
std::vector<char> cell_mask(const OpenIntervalSet& g, std::size_t n);

}  // namespace hsum
