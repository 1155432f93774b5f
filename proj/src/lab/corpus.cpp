#include "hsum/lab/corpus.hpp"

#include <algorithm>
#include <random>

#include "hsum/marcinkiewicz.hpp"

namespace hsum::lab {

namespace {

// Adds value·χ[a, b] to cell averages, a and b real with −π ≤ a ≤ b ≤ π.
void add_indicator(std::vector<double>& cells, double a, double b, double value) {
  const std::size_t n = cells.size();
  const double h = kTwoPi / static_cast<double>(n);
  const double u0 = (a + kPi) / h + 0.5;
  const double u1 = (b + kPi) / h + 0.5;
  for (auto c = static_cast<long long>(std::floor(u0)); static_cast<double>(c) < u1; ++c) {
    const double lo = std::max(u0, static_cast<double>(c));
    const double hi = std::min(u1, static_cast<double>(c + 1));
    if (hi > lo) cells[static_cast<std::size_t>(c) % n] += value * (hi - lo);
  }
}

// ∫_lo^hi |x|^{−a} dx for −π ≤ lo ≤ hi ≤ π.
double power_integral(double lo, double hi, double a) {
  auto prim = [a](double x) { return std::copysign(std::pow(std::abs(x), 1.0 - a), x) / (1.0 - a); };
  return prim(hi) - prim(lo);
}

std::vector<double> singular_cells(std::size_t n, double a) {
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<double> cells(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = PeriodicSamples::point(i, n);
    double mass;
    if (i == 0) {
      mass = power_integral(-kPi, -kPi + h / 2.0, a) + power_integral(kPi - h / 2.0, kPi, a);
    } else {
      mass = power_integral(x - h / 2.0, x + h / 2.0, a);
    }
    cells[i] = mass / h;
  }
  return cells;
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

double uniform01(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

double mean_abs(const PeriodicSamples& f) { return f.l1_norm() / kTwoPi; }

CorpusEntry make_entry(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed) {
  CorpusEntry e;
  e.name = spec.name;
  e.kind = spec.kind;
  e.params = spec.params;
  const auto& p = spec.params;
  std::vector<double> cells(n, 0.0);

  if (spec.kind == "constant") {
    cells.assign(n, p.at(0));
  } else if (spec.kind == "harmonic") {
    const double k = p.at(0);
    for (std::size_t i = 0; i < n; ++i) cells[i] = std::cos(k * PeriodicSamples::point(i, n));
  } else if (spec.kind == "square_wave") {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = PeriodicSamples::point(i, n);
      cells[i] = i == 0 ? 0.0 : sign(x);
    }
  } else if (spec.kind == "spike") {
    const double m = p.at(0);
    if (!(m * kPi > 1.0)) throw DomainError("spike height too small for its support");
    add_indicator(cells, 0.0, 1.0 / m, m);
    e.support_radius = 1.0 / m;
  } else if (spec.kind == "spike_train") {
    const auto k = static_cast<std::size_t>(p.at(0));
    const double m = p.at(1);
    if (k == 0 || !(m * kTwoPi / static_cast<double>(k) > 1.0)) throw DomainError("spikes overlap");
    for (std::size_t j = 0; j < k; ++j) {
      const double centre = -kPi + kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(k);
      add_indicator(cells, centre - 0.5 / m, centre + 0.5 / m, m);
    }
    e.support_radius = kPi;
  } else if (spec.kind == "fat_cantor_indicator") {
    const int g = static_cast<int>(p.at(0));
    for (const auto& iv : fat_cantor_remaining(g)) add_indicator(cells, to_double(iv.a), to_double(iv.b), 1.0);
    e.support_radius = 1.0;
  } else if (spec.kind == "sqrt_singular") {
    const double a = p.at(0);
    if (!(a > 0.0 && a < 1.0)) throw DomainError("singularity exponent must lie in (0, 1)");
    cells = singular_cells(n, a);
  } else if (spec.kind == "random_trig") {
    const int d = static_cast<int>(p.at(0));
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(p.at(1)));
    std::vector<double> ca(static_cast<std::size_t>(d) + 1), cb(static_cast<std::size_t>(d) + 1);
    for (int k = 1; k <= d; ++k) {
      ca[static_cast<std::size_t>(k)] = 2.0 * uniform01(rng()) - 1.0;
      cb[static_cast<std::size_t>(k)] = 2.0 * uniform01(rng()) - 1.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double x = PeriodicSamples::point(i, n);
      double v = 0.0;
      for (int k = 1; k <= d; ++k) {
        v += ca[static_cast<std::size_t>(k)] * std::cos(k * x) + cb[static_cast<std::size_t>(k)] * std::sin(k * x);
      }
      cells[i] = v;
    }
  } else {
    throw DomainError("unknown generator kind '" + spec.kind + "'");
  }
  e.kernel_experiment = e.support_radius <= kPi / 8.0;
  e.samples = PeriodicSamples(std::move(cells));
  return e;
}

std::vector<CorpusEntry> build_corpus(const ExperimentConfig& cfg, std::size_t n) {
  std::vector<CorpusEntry> out;
  out.reserve(cfg.corpus.size());
  for (const auto& spec : cfg.corpus) out.push_back(make_entry(spec, n, cfg.seed));
  return out;
}

WeightSamples make_weight(const GeneratorSpec& spec, std::size_t n) {
  const double h = kTwoPi / static_cast<double>(n);
  if (spec.kind == "unit") return WeightSamples(PeriodicSamples(std::vector<double>(n, 1.0)));
  if (spec.kind == "floored_power") return floored_power_weight(n, spec.params.at(0), h);
  if (spec.kind == "shifted_abs") {
    return WeightSamples(PeriodicSamples::from_function(n, [h](double x) { return std::abs(x) + h; }));
  }
  throw DomainError("unknown weight kind '" + spec.kind + "'");
}

std::vector<ShiftedPiece> shift_and_split(const PeriodicSamples& f) {
  const std::size_t n = f.size();
  if (n % 32 != 0) throw ShapeError("shift_and_split needs N divisible by 32");
  const std::size_t arc = n / 16;
  std::vector<ShiftedPiece> out;
  for (std::size_t p = 0; p < 16; ++p) {
    ShiftedPiece sp;
    sp.arc = p;
    sp.shift = (n / 2 - n / 32 + n - p * arc) % n;
    std::vector<double> v(n, 0.0);
    for (std::size_t i = p * arc; i < (p + 1) * arc; ++i) v[(i + sp.shift) % n] = f[i];
    sp.piece = PeriodicSamples(std::move(v));
    out.push_back(std::move(sp));
  }
  return out;
}

PeriodicSamples unshift_and_sum(const std::vector<ShiftedPiece>& pieces) {
  if (pieces.empty()) throw DomainError("no pieces");
  const std::size_t n = pieces.front().piece.size();
  std::vector<double> v(n, 0.0);
  for (const auto& sp : pieces) {
    if (sp.piece.size() != n) throw ShapeError("pieces on different grids");
    for (std::size_t i = 0; i < n; ++i) v[i] += sp.piece[(i + sp.shift) % n];
  }
  return PeriodicSamples(std::move(v));
}

}  // namespace hsum::lab
