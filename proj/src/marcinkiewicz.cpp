#include "hsum/marcinkiewicz.hpp"

#include <algorithm>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hsum {

SingularQuadratureConfig::SingularQuadratureConfig(double exclusion, double width)
    : exclusion_radius(exclusion), cell_width(width) {
  if (!(width > 0.0)) throw DomainError("cell width must be positive");
  if (!(exclusion >= width)) throw DomainError("exclusion radius must cover at least one cell");
}

SingularQuadratureConfig SingularQuadratureConfig::for_grid(std::size_t n) {
  const double h = kTwoPi / static_cast<double>(n);
  return SingularQuadratureConfig(h, h);
}

double distance_to_set(double x, const OpenIntervalSet& g) { return g.distance_to_complement_real(x); }
Rational distance_to_set(const Rational& x, const OpenIntervalSet& g) { return g.distance_to_complement(x); }

namespace {

double nearest_image_period(double d, double p) {
  if (p <= 0.0) return d;
  return d - p * std::round(d / p);
}

double nearest_image(double d, const OpenIntervalSet& g) {
  if (!g.periodic()) return d;
  return nearest_image_period(d, g.period_real());
}

struct RealOverlap {
  long long first = 0;
  std::vector<double> fractions;  // in cells
  std::vector<double> centres;    // real coordinate of each overlap's midpoint
};

// Cells of an n-point grid overlapping the real interval [a, b].
RealOverlap overlap_real(double a, double b, std::size_t n) {
  const double h = kTwoPi / static_cast<double>(n);
  const double u0 = (a + kPi) / h + 0.5;
  const double u1 = (b + kPi) / h + 0.5;
  RealOverlap out;
  out.first = static_cast<long long>(std::floor(u0));
  for (long long c = out.first; static_cast<double>(c) < u1; ++c) {
    const double lo = std::max(u0, static_cast<double>(c));
    const double hi = std::min(u1, static_cast<double>(c + 1));
    if (hi <= lo) continue;
    out.fractions.push_back(hi - lo);
    out.centres.push_back(((lo + hi) / 2.0 - 0.5) * h - kPi);
  }
  return out;
}

// Same, exact for sets snapped to the grid.
RealOverlap overlap_component(const Interval& j, const OpenIntervalSet& g, std::size_t n) {
  if (g.grid_size() != n) {
    const std::size_t k = static_cast<std::size_t>(&j - g.components().data());
    return overlap_real(g.real_components()[k].a, g.real_components()[k].b, n);
  }
  const double h = kTwoPi / static_cast<double>(n);
  const CellOverlap co = cell_overlap(j, n);
  const Rational u0 = cell_coordinate(j.a, n);
  RealOverlap out;
  const auto base = u0.convert_to<double>();
  out.first = static_cast<long long>(std::floor(base));
  double cursor = base;
  for (double frac : co.fractions) {
    out.fractions.push_back(frac);
    out.centres.push_back((cursor + frac / 2.0 - 0.5) * h - kPi);
    cursor = std::floor(cursor) + 1.0;
  }
  return out;
}

std::size_t wrap(long long c, std::size_t n) {
  long long m = c % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::size_t>(m);
}

}  // namespace

double marcinkiewicz_function(double x, const OpenIntervalSet& g, const SingularQuadratureConfig& cfg,
                              bool extended) {
  if (g.empty()) return 0.0;
  if (!extended && g.locate_real(x)) throw DomainError("point lies inside G");
  const double cap = 1.0 / cfg.exclusion_radius;
  double total = 0.0;
  for (const auto& [a, b] : g.real_components()) {
    const double len = b - a;
    const auto m = static_cast<std::size_t>(std::max(1.0, std::ceil(len / cfg.cell_width)));
    const double w = len / static_cast<double>(m);
    double part = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double y = a + (static_cast<double>(i) + 0.5) * w;
      const double d = std::min(y - a, b - y);
      const double diff = std::abs(nearest_image(x - y, g));
      if (diff < cfg.exclusion_radius) {
        part += diff > 0.0 ? std::min(d / (diff * diff), cap) : cap;
      } else {
        part += d / (diff * diff);
      }
    }
    total += part * w;
  }
  return total;
}

double PiecewiseConstant::operator()(double x) const {
  for (const auto& p : pieces) {
    const double y = p.a + std::fmod(std::fmod(x - p.a, period) + period, period);
    if (y > p.a && y < p.b) return p.value;
  }
  return 0.0;
}

PeriodicSamples PiecewiseConstant::sample(std::size_t n) const {
  return PeriodicSamples::from_function(n, [this](double x) { return (*this)(x); });
}

PiecewiseConstant phi_function(const OpenIntervalSet& g) {
  PiecewiseConstant phi;
  for (const auto& [a, b] : g.real_components()) {
    phi.pieces.push_back({a, b, b - a});
  }
  return phi;
}

double phi_integral(double x, const PiecewiseConstant& phi) {
  double total = 0.0;
  for (const auto& p : phi.pieces) {
    if (p.value == 0.0) continue;
    for (int m = -2; m <= 2; ++m) {
      const double lo = std::max(p.a - x + m * phi.period, -kPi);
      const double hi = std::min(p.b - x + m * phi.period, kPi);
      if (!(lo < hi)) continue;
      if (lo <= 0.0 && hi >= 0.0) return std::numeric_limits<double>::infinity();
      // ∫_lo^hi dt/t² = 1/lo − 1/hi on either side of 0
      total += p.value * (1.0 / lo - 1.0 / hi);
    }
  }
  return total;
}

std::vector<RealInterval> real_intervals(const WhitneyCover& cover) {
  std::vector<RealInterval> out;
  out.reserve(cover.intervals.size());
  const double u = cover.source.unit();
  for (const auto& ci : cover.intervals) out.push_back({to_double(ci.interval.a) * u, to_double(ci.interval.b) * u});
  return out;
}

double series_majorant(double x, const WhitneyCover& cover, std::span<const double> averages) {
  const auto ivs = real_intervals(cover);
  return series_majorant(x, ivs, cover.source.period_real(), averages);
}

double series_majorant(double x, std::span<const RealInterval> intervals, double period,
                       std::span<const double> averages) {
  if (averages.size() != intervals.size()) throw ShapeError("one average per cover interval");
  double total = 0.0;
  for (std::size_t k = 0; k < averages.size(); ++k) {
    const double a = intervals[k].a;
    const double b = intervals[k].b;
    const double c = (a + b) / 2.0;
    const double xs = c + nearest_image_period(x - c, period);
    if (xs >= a && xs <= b) throw DomainError("point lies in a cover interval");
    const double len = b - a;
    total += averages[k] * len * (len / ((a - xs) * (b - xs)));
  }
  return total;
}

WeightedLevelMeasure weighted_level_measure(const OpenIntervalSet& g, const WeightSamples& w,
                                            const PeriodicSamples& f, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("level must be positive");
  if (w.size() != f.size()) throw ShapeError("weight and function on different grids");
  WeightedLevelMeasure out;
  const auto mask = cell_mask(g, f.size());
  out.mu_g = w.measure(mask);
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::abs(f[i]) * w[i];
  out.bound_rhs = s * f.cell_width() / lambda;
  return out;
}

std::vector<RealInterval> dilated_components(const OpenIntervalSet& g, double shrink_eps) {
  if (!(shrink_eps > 0.0)) throw DomainError("dilation parameter must be positive");
  std::vector<RealInterval> out;
  for (const auto& [a, b] : g.real_components()) {
    const double grow = shrink_eps * (b - a) / 2.0;
    out.push_back({a - grow, b + grow});
  }
  return out;
}

SurprisingIntegral surprising_integral(double x, const PeriodicSamples& f, const OpenIntervalSet& g,
                                       double shrink_eps) {
  const auto dilated = dilated_components(g, shrink_eps);
  for (const auto& d : dilated) {
    const double c = (d.a + d.b) / 2.0;
    const double xs = c + nearest_image(x - c, g);
    if (xs > d.a && xs < d.b) throw DomainError("point lies in a dilated component");
  }
  const std::size_t n = f.size();
  const double h = f.cell_width();
  SurprisingIntegral out;
  for (const auto& j : g.components()) {
    const RealOverlap ov = overlap_component(j, g, n);
    double part = 0.0;
    for (std::size_t c = 0; c < ov.fractions.size(); ++c) {
      const double diff = nearest_image(x - ov.centres[c], g);
      part += std::abs(f[wrap(ov.first + static_cast<long long>(c), n)]) * ov.fractions[c] * h / (diff * diff);
    }
    out.per_component.push_back(part);
    out.value += part;
  }
  return out;
}

std::vector<ComponentBound> surprising_component_bounds(const PeriodicSamples& f, const OpenIntervalSet& g,
                                                        double shrink_eps) {
  auto dilated = dilated_components(g, shrink_eps);
  std::sort(dilated.begin(), dilated.end(), [](const RealInterval& a, const RealInterval& b) { return a.a < b.a; });
  std::vector<RealInterval> merged;
  for (const auto& d : dilated) {
    if (!merged.empty() && d.a <= merged.back().b) {
      merged.back().b = std::max(merged.back().b, d.b);
    } else {
      merged.push_back(d);
    }
  }
  // ∫_{F̃} dx/(x − y)² for y inside the dilated union.
  auto tail = [&](double y) {
    double s = 0.0;
    for (std::size_t m = 0; m <= merged.size(); ++m) {
      const double lo = m == 0 ? -std::numeric_limits<double>::infinity() : merged[m - 1].b;
      const double hi = m == merged.size() ? std::numeric_limits<double>::infinity() : merged[m].a;
      if (y <= lo) {
        s += 1.0 / (lo - y) - (std::isinf(hi) ? 0.0 : 1.0 / (hi - y));
      } else if (y >= hi) {
        s += 1.0 / (y - hi) - (std::isinf(lo) ? 0.0 : 1.0 / (y - lo));
      }
    }
    return s;
  };

  const std::size_t n = f.size();
  const double h = f.cell_width();
  std::vector<ComponentBound> out;
  for (const auto& j : g.components()) {
    ComponentBound cb;
    const auto& rj = g.real_components()[static_cast<std::size_t>(&j - g.components().data())];
    cb.length = rj.b - rj.a;
    const RealOverlap ov = overlap_component(j, g, n);
    for (std::size_t c = 0; c < ov.fractions.size(); ++c) {
      const double piece = std::abs(f[wrap(ov.first + static_cast<long long>(c), n)]) * ov.fractions[c] * h;
      cb.mass += piece;
      cb.contribution += piece * tail(ov.centres[c]);
    }
    cb.ratio = cb.mass > 0.0 ? cb.contribution * shrink_eps * cb.length / cb.mass : 0.0;
    out.push_back(cb);
  }
  return out;
}

double p_kernel_normalization(double p, double eps) {
  if (!(p > 1.0)) throw DomainError("p must exceed 1 for the kernel to be integrable");
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  const double scale = std::pow(eps, p - 1.0);
  const double eps_p = std::pow(eps, p);
  auto kernel = [&](double y) { return scale / (eps_p + std::pow(y, p)); };
  const double split = 8.0 * eps;
  const double near = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(kernel, 0.0, split, 20, 1e-15);
  boost::math::quadrature::exp_sinh<double> tail;
  const double far = tail.integrate(kernel, split, std::numeric_limits<double>::infinity(), 1e-14);
  return 2.0 * (near + far);
}

OpenIntervalSet fat_cantor_gaps(int generations) {
  if (generations < 0) throw DomainError("generation count must be non-negative");
  using boost::multiprecision::cpp_int;
  std::vector<Interval> remaining{Interval{Rational(0), Rational(1), true, true}};
  std::vector<std::pair<Rational, Rational>> gaps;
  for (int gen = 1; gen <= generations; ++gen) {
    const Rational removed = Rational(1) / Rational(cpp_int(1) << (2 * gen));
    std::vector<Interval> next;
    for (const auto& r : remaining) {
      const Rational mid = (r.a + r.b) / 2;
      gaps.emplace_back(mid - removed / 2, mid + removed / 2);
      next.push_back(Interval{r.a, mid - removed / 2, true, true});
      next.push_back(Interval{mid + removed / 2, r.b, true, true});
    }
    remaining = std::move(next);
  }
  return OpenIntervalSet::from_pairs(gaps);
}

std::vector<Interval> fat_cantor_remaining(int generations) {
  const OpenIntervalSet gaps = fat_cantor_gaps(generations);
  std::vector<Interval> out;
  Rational cursor(0);
  for (const auto& g : gaps.components()) {
    out.push_back(Interval{cursor, g.a, true, true});
    cursor = g.b;
  }
  out.push_back(Interval{cursor, Rational(1), true, true});
  return out;
}

}  // namespace hsum
