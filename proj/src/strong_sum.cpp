#include "hsum/strong_sum.hpp"

#include <algorithm>
#include <limits>

#include "hsum/marcinkiewicz.hpp"

namespace hsum {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (0, 2]");
}

// Neumaier's compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

double wrap_angle(double d) { return std::remainder(d, kTwoPi); }

}  // namespace

StrongMeanSeries make_strong_series(const FourierCoeffs& c, double x, int n, double alpha,
                                    std::complex<double> target) {
  check_alpha(alpha);
  if (n < 0 || n > c.max_degree()) throw RangeError("series order outside the coefficient range");
  StrongMeanSeries s;
  s.x = x;
  s.alpha = alpha;
  s.target = target;
  s.partials.reserve(static_cast<std::size_t>(n) + 1);
  std::complex<double> acc{0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    acc += partial_sum_term(c, k, x);
    s.partials.push_back(acc);
  }
  return s;
}

StrongMeanSeries series_from_partials(std::vector<std::complex<double>> partials, double alpha,
                                      std::complex<double> target) {
  check_alpha(alpha);
  if (partials.empty()) throw DomainError("a series needs at least S_0");
  StrongMeanSeries s;
  s.partials = std::move(partials);
  s.alpha = alpha;
  s.target = target;
  return s;
}

double h_alpha_mean(const StrongMeanSeries& s, int n) {
  if (n < 1) throw DomainError("mean order must be at least 1");
  if (n > s.order()) throw RangeError("mean order exceeds the available partial sums");
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) acc += std::pow(std::abs(s.partials[static_cast<std::size_t>(k)] - s.target), s.alpha);
  return acc / n;
}

double sigma_alpha_star(const StrongMeanSeries& s, int n_max) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (n_max > s.order()) throw RangeError("n_max exceeds the available partial sums");
  double acc = 0.0;
  double best = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    acc += std::pow(std::abs(s.partials[static_cast<std::size_t>(k)]), s.alpha);
    best = std::max(best, acc / k);
  }
  return std::pow(best, 1.0 / s.alpha);
}

std::vector<PeriodicSamples> sigma_alpha_star_grid(const FourierCoeffs& c, int n_max, std::size_t n_points,
                                                   std::span<const double> alphas) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (n_max > c.max_degree()) throw RangeError("n_max exceeds the coefficient degree");
  for (double a : alphas) check_alpha(a);
  const std::size_t m = alphas.size();
  std::vector<std::vector<double>> acc(m, std::vector<double>(n_points, 0.0));
  std::vector<std::vector<double>> best(m, std::vector<double>(n_points, 0.0));
  GridPartialSums sums(c, n_points);
  for (int k = 1; k <= n_max; ++k) {
    sums.advance();
    const auto vals = sums.values();
    const double inv = 1.0 / k;
    for (std::size_t j = 0; j < m; ++j) {
      const double a = alphas[j];
      auto& aj = acc[j];
      auto& bj = best[j];
      for (std::size_t i = 0; i < n_points; ++i) {
        const double mag = std::abs(vals[i]);
        aj[i] += a == 2.0 ? mag * mag : (a == 1.0 ? mag : std::pow(mag, a));
        bj[i] = std::max(bj[i], aj[i] * inv);
      }
    }
  }
  std::vector<PeriodicSamples> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (double& v : best[j]) v = std::pow(v, 1.0 / alphas[j]);
    out.emplace_back(std::move(best[j]));
  }
  return out;
}

double poisson_kernel(double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  const double eps = 1.0 - r;
  return eps / (kPi * (eps * eps + theta * theta));
}

PoissonBound poisson_average_bound(std::span<const double> f, double a, double b, double u, double c, double r,
                                   double lambda) {
  if (f.empty() || !(b > a)) throw DomainError("empty interval");
  if (!(c > 0.0) || !(lambda > 0.0)) throw DomainError("c and lambda must be positive");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  const double len = b - a;
  const double w = len / static_cast<double>(f.size());
  double mass = 0.0;
  for (double v : f) mass += std::abs(v) * w;
  if (mass > lambda * len * (1.0 + 1e-12)) throw DomainError("average over J exceeds lambda");
  const double d = u < a ? a - u : (u > b ? u - b : 0.0);
  if (d < c * len * (1.0 - 1e-12)) throw DomainError("u is closer to J than c|J|");
  const double eps = 1.0 - r;
  PoissonBound out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = a + (static_cast<double>(i) + 0.5) * w;
    out.lhs += eps / (eps * eps + (u - v) * (u - v)) * std::abs(f[i]) * w;
  }
  out.rhs = lambda / (2.0 * c);
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-12);
  return out;
}

KernelParams KernelParams::make(double r, int n_tail) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  KernelParams p;
  p.r = r;
  p.eps = 1.0 - r;
  int need = 0;
  if (r > 0.0) {
    need = static_cast<int>(std::ceil(std::log(1e-14) / std::log(r)));
    if (std::pow(r, need) >= 1e-14) ++need;
  }
  p.n_tail = std::max(need, n_tail);
  return p;
}

double abel_square_mean(const StrongMeanSeries& s, double r) {
  const KernelParams p = KernelParams::make(r);
  const auto last = static_cast<std::size_t>(s.order());
  double acc = 0.0;
  double rk = 1.0;
  for (int nu = 0; nu <= p.n_tail; ++nu) {
    const double v = std::abs(s.partials[std::min(static_cast<std::size_t>(nu), last)]);
    acc += rk * v * v;
    rk *= r;
  }
  return (1.0 - r) * acc;
}

AbelDomination abel_domination_check(const StrongMeanSeries& s, int n) {
  if (n < 2) throw DomainError("comparison needs n >= 2");
  if (n - 1 > s.order()) throw RangeError("series lacks partial sums below n");
  AbelDomination out;
  for (int nu = 0; nu < n; ++nu) {
    const double v = std::abs(s.partials[static_cast<std::size_t>(nu)]);
    out.cesaro += v * v;
  }
  out.cesaro /= n;
  out.abel = abel_square_mean(s, 1.0 - 1.0 / n);
  out.ratio = out.abel > 0.0 ? out.cesaro / out.abel : (out.cesaro > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
  out.holds = out.cesaro <= 4.0 * out.abel;
  return out;
}

SeriesValue d_kernel_series(const KernelParams& p, double x, double y) {
  SeriesValue out;
  CompensatedSum acc;
  double rk = 1.0;
  for (int nu = 0; nu <= p.n_tail; ++nu) {
    acc.add(rk * dirichlet_kernel(nu, x) * dirichlet_kernel(nu, y));
    rk *= p.r;
    if (rk == 0.0) break;
  }
  out.value = acc.value();
  if (p.r > 0.0) {
    const double r = p.r;
    const double e = 1.0 - r;
    const double m = p.n_tail + 1.5;
    out.truncation_bound = std::pow(r, p.n_tail + 1) * (m * m / e + 2.0 * m * r / (e * e) + r * (1.0 + r) / (e * e * e));
  }
  return out;
}

double d_kernel_closed(const KernelParams& p, double x, double y) {
  const double r = p.r;
  const double e = 1.0 - r;
  // 1 − 2r cos θ + r² = (1 − r)² + 4r sin²(θ/2)
  const double sm = std::sin((x - y) / 2.0);
  const double sp = std::sin((x + y) / 2.0);
  const double dm = e * e + 4.0 * r * sm * sm;
  const double dp = e * e + 4.0 * r * sp * sp;
  return e * (e * e + 2.0 * r * (2.0 + std::cos(x) + std::cos(y))) / (4.0 * dm * dp);
}

MajorantReport d_kernel_majorant_check(std::span<const double> radii, double eps_strip, std::size_t grid) {
  if (!(eps_strip > 0.0 && eps_strip < kPi)) throw DomainError("strip parameter must lie in (0, pi)");
  if (grid < 3) throw DomainError("grid too small");
  MajorantReport rep;
  rep.c3 = std::numeric_limits<double>::infinity();
  const double limit = kPi - eps_strip;
  auto coord = [&](std::size_t i) { return -kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(grid - 1); };

  for (double r : radii) {
    const KernelParams p = KernelParams::make(r);
    if (r == 0.0) continue;  // D ≡ 1/4 ≤ 9: no constraint on C₃
    const double a = p.eps * p.eps;
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        const double x = coord(i);
        const double y = coord(j);
        const double u = x - y;
        const double v = x + y;
        if (std::abs(u) > limit || std::abs(v) > limit) continue;
        ++rep.strip_points;
        const double d = d_kernel_closed(p, x, y);
        if (d <= 0.0) continue;
        // Largest C with (a + rCu²)(a + rCv²) ≤ 9(1−r)/D.
        const double b = 9.0 * p.eps / d;
        const double qa = r * r * u * u * v * v;
        const double qb = r * a * (u * u + v * v);
        const double qc = a * a - b;
        double cmax;
        if (qc > 0.0) {
          cmax = 0.0;
        } else if (qa > 0.0 || qb > 0.0) {
          // Positive root of qa·C² + qb·C + qc, in the cancellation-free form.
          cmax = -2.0 * qc / (qb + std::sqrt(qb * qb - 4.0 * qa * qc));
        } else {
          continue;
        }
        if (cmax < rep.c3) {
          rep.c3 = cmax;
          rep.tight_x = x;
          rep.tight_y = y;
          rep.tight_r = r;
        }
      }
    }
  }
  if (!std::isfinite(rep.c3)) return rep;

  for (double r : radii) {
    const KernelParams p = KernelParams::make(r);
    const double a = p.eps * p.eps;
    for (std::size_t i = 0; i < grid; ++i) {
      for (std::size_t j = 0; j < grid; ++j) {
        const double x = coord(i);
        const double y = coord(j);
        const double u = x - y;
        const double v = x + y;
        if (std::abs(u) <= limit && std::abs(v) <= limit) continue;
        ++rep.exterior_points;
        const double bound = 9.0 * p.eps / ((a + r * rep.c3 * u * u) * (a + r * rep.c3 * v * v));
        if (d_kernel_closed(p, x, y) > bound * (1.0 + 1e-12)) ++rep.exterior_violations;
      }
    }
  }
  return rep;
}

CaseEstimates double_integral_case_estimates(const PeriodicSamples& f, const WhitneyCover& cover, double x, double r,
                                             double lambda, double c) {
  const OpenIntervalSet& g = cover.source;
  if (g.grid_size() != f.size()) throw ShapeError("cover is not snapped to the sample grid");
  if (g.locate_real(x)) throw DomainError("point lies inside G");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  if (!(lambda > 0.0) || !(c > 0.0)) throw DomainError("lambda and c must be positive");

  const std::size_t n = f.size();
  const double h = f.cell_width();
  const std::size_t m = cover.intervals.size();

  // Adjacency: identical or touching closures, including across the period.
  std::vector<std::vector<char>> adjacent(m, std::vector<char>(m, 0));
  std::vector<Rational> shifts{Rational(0)};
  if (g.periodic()) {
    shifts.push_back(*g.period());
    shifts.push_back(-*g.period());
  }
  CaseEstimates out;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) {
        adjacent[i][j] = 1;
        continue;
      }
      const Interval& a = cover.intervals[i].interval;
      const Interval& b = cover.intervals[j].interval;
      for (const Rational& s : shifts) {
        if (a.a <= b.b + s && b.a + s <= a.b) adjacent[i][j] = 1;
      }
      count += adjacent[i][j];
    }
    out.max_adjacent_neighbours = std::max(out.max_adjacent_neighbours, count);
  }

  struct Cell {
    std::size_t owner;
    double pos;
    double mass;
  };
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < m; ++k) {
    const Interval& iv = cover.intervals[k].interval;
    const CellOverlap ov = cell_overlap(iv, n);
    const double lo = to_double(cell_coordinate(iv.a, n));
    double cursor = lo;
    for (std::size_t q = 0; q < ov.fractions.size(); ++q) {
      const double frac = ov.fractions[q];
      const double mass = std::abs(f[(ov.first_cell + q) % n]) * frac * h;
      if (mass > 0.0) cells.push_back({k, (cursor + frac / 2.0 - 0.5) * h - kPi, mass});
      cursor = std::floor(cursor) + 1.0;
    }
  }

  const double e2 = (1.0 - r) * (1.0 - r);
  CompensatedSum adj;
  CompensatedSum non;
  for (const Cell& v : cells) {
    const double dv = wrap_angle(v.pos - x);
    const double outer = e2 * v.mass / (e2 + c * dv * dv);
    for (const Cell& u : cells) {
      const double du = wrap_angle(u.pos - v.pos);
      const double term = outer * u.mass / (e2 + c * du * du);
      if (adjacent[v.owner][u.owner]) {
        adj.add(term);
      } else {
        non.add(term);
      }
    }
  }
  out.adjacent_sum = adj.value();
  out.nonadjacent_sum = non.value();
  out.marcinkiewicz = marcinkiewicz_function(x, g, SingularQuadratureConfig::for_grid(n));
  out.adjacent_constant = out.marcinkiewicz > 0.0 ? out.adjacent_sum / (lambda * out.marcinkiewicz) : 0.0;
  out.nonadjacent_constant = out.nonadjacent_sum / (lambda * lambda);
  return out;
}

AbelIdentity power_series_abel_identity(std::span<const std::complex<double>> a, std::complex<double> z, int n_tail) {
  const double rho = std::abs(z);
  if (!(rho < 1.0)) throw DomainError("power series point must satisfy |z| < 1");
  if (a.empty()) throw DomainError("empty coefficient list");
  int tail = std::max(n_tail, static_cast<int>(a.size()) - 1);
  if (n_tail == 0 && rho > 0.0) tail = std::max(tail, static_cast<int>(std::ceil(std::log(1e-17) / std::log(rho))));

  AbelIdentity out;
  std::complex<double> zk{1.0, 0.0};
  std::complex<double> s{0.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  double scale = 0.0;
  for (int k = 0; k <= tail; ++k) {
    if (static_cast<std::size_t>(k) < a.size()) {
      out.lhs += a[static_cast<std::size_t>(k)] * zk;
      s += a[static_cast<std::size_t>(k)];
    }
    acc += s * zk;
    scale += std::abs(s) * std::abs(zk);
    zk *= z;
  }
  out.rhs = (1.0 - z) * acc;
  out.bound = std::abs(s) * std::pow(rho, tail + 1) + 64.0 * std::numeric_limits<double>::epsilon() * (1.0 + scale);
  out.holds = std::abs(out.lhs - out.rhs) <= out.bound;
  return out;
}

namespace {

template <class T>
HausdorffYoung hausdorff_young_impl(const Samples<T>& f, double p) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("p must lie in (1, 2]");
  const double q = p / (p - 1.0);
  const int k = static_cast<int>(f.size() / 2) - 1;
  const FourierCoeffs c = dft_coefficients(f, k);
  HausdorffYoung out;
  double cs = 0.0;
  for (const auto& v : c.raw()) cs += std::pow(std::abs(v), q);
  out.coeff_norm = std::pow(cs, 1.0 / q);
  double fs = 0.0;
  for (const auto& v : f.values()) fs += std::pow(std::abs(v), p);
  out.function_norm = std::pow(fs / static_cast<double>(f.size()), 1.0 / p);
  out.ratio = out.function_norm > 0.0 ? out.coeff_norm / out.function_norm : 0.0;
  return out;
}

}  // namespace

HausdorffYoung hausdorff_young_check(const ComplexSamples& f, double p) { return hausdorff_young_impl(f, p); }
HausdorffYoung hausdorff_young_check(const PeriodicSamples& f, double p) { return hausdorff_young_impl(f, p); }

}  // namespace hsum
