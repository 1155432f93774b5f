#include "hsum/maximal.hpp"

#include <algorithm>
#include <thread>

namespace hsum {

namespace {

// For every start cell s in [s_begin, s_end), sweep run lengths L = N..1 and
// carry the suffix max of run averages onto the last cell of each run.  The
// last cell of run (s, L) is covered by every run (s, L') with L' ≥ L.
void maximal_block(std::span<const double> prefix, std::span<const double> inv_len, std::size_t n,
                   std::size_t s_begin, std::size_t s_end, std::vector<double>& best) {
  for (std::size_t s = s_begin; s < s_end; ++s) {
    const double base = prefix[s];
    double run_max = 0.0;
    // Lengths whose last cell index s + L − 1 wraps past N − 1.
    for (std::size_t len = n; len > n - s; --len) {
      const double avg = (prefix[s + len] - base) * inv_len[len];
      run_max = std::max(run_max, avg);
      double& slot = best[s + len - 1 - n];
      slot = std::max(slot, run_max);
    }
    for (std::size_t len = n - s; len >= 1; --len) {
      const double avg = (prefix[s + len] - base) * inv_len[len];
      run_max = std::max(run_max, avg);
      double& slot = best[s + len - 1];
      slot = std::max(slot, run_max);
    }
  }
}

}  // namespace

PeriodicSamples hl_maximal(const PeriodicSamples& f, unsigned threads) {
  const std::size_t n = f.size();
  std::vector<double> prefix(2 * n + 1, 0.0);
  for (std::size_t i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + std::abs(f[i % n]);
  std::vector<double> inv_len(n + 1, 0.0);
  for (std::size_t len = 1; len <= n; ++len) inv_len[len] = 1.0 / static_cast<double>(len);

  unsigned t = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  t = static_cast<unsigned>(std::min<std::size_t>(t, n));
  std::vector<std::vector<double>> partial(t, std::vector<double>(n, 0.0));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w) {
    const std::size_t lo = n * w / t;
    const std::size_t hi = n * (w + 1) / t;
    if (t == 1) {
      maximal_block(prefix, inv_len, n, lo, hi, partial[w]);
    } else {
      pool.emplace_back([&, lo, hi, w] { maximal_block(prefix, inv_len, n, lo, hi, partial[w]); });
    }
  }
  for (auto& th : pool) th.join();
  std::vector<double> out = std::move(partial[0]);
  for (unsigned w = 1; w < t; ++w) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::max(out[i], partial[w][i]);
  }
  return PeriodicSamples(std::move(out));
}

OpenIntervalSet level_set(const PeriodicSamples& fstar, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("level must be positive");
  const std::size_t n = fstar.size();
  std::vector<char> mask(n);
  bool all = true;
  for (std::size_t i = 0; i < n; ++i) {
    mask[i] = fstar[i] > lambda ? 1 : 0;
    all = all && mask[i];
  }
  if (all) return OpenIntervalSet::full_period(n);
  return connected_components(mask, true);
}

WeightSamples::WeightSamples(PeriodicSamples base) : base_(std::move(base)) {
  for (double v : base_.values()) {
    if (!(v > 0.0)) throw DomainError("weight must be strictly positive");
  }
}

double WeightSamples::measure(std::span<const char> mask) const {
  if (mask.size() != base_.size()) throw ShapeError("mask and weight grids differ");
  double s = 0.0;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) s += base_[i];
  }
  return s * base_.cell_width();
}

WeightSamples floored_power_weight(std::size_t n, double exponent, double floor) {
  return WeightSamples(PeriodicSamples::from_function(
      n, [&](double x) { return std::pow(std::max(std::abs(x), floor), exponent); }));
}

double a1_check(const WeightSamples& w) {
  const PeriodicSamples wstar = hl_maximal(w.base());
  double c = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) c = std::max(c, wstar[i] / w[i]);
  return c;
}

WeakTypeReport weak_type_report(const PeriodicSamples& tf, const PeriodicSamples& f,
                                std::span<const double> lambdas, const WeightSamples* w) {
  const std::size_t n = f.size();
  if (tf.size() != n || (w != nullptr && w->size() != n)) throw ShapeError("operands on different grids");
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    if (!(lambdas[j] > 0.0)) throw DomainError("levels must be positive");
    if (j > 0 && !(lambdas[j] > lambdas[j - 1])) throw DomainError("levels must increase");
  }
  WeakTypeReport rep;
  const double h = f.cell_width();
  for (std::size_t i = 0; i < n; ++i) rep.norm += std::abs(f[i]) * (w ? (*w)[i] : 1.0);
  rep.norm *= h;

  // Sort the operator values once; a level's measure is a suffix sum.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tf[a] < tf[b]; });
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t r = n; r-- > 0;) suffix[r] = suffix[r + 1] + (w ? (*w)[order[r]] : 1.0);

  rep.lambdas.assign(lambdas.begin(), lambdas.end());
  for (double lam : lambdas) {
    const auto it = std::upper_bound(order.begin(), order.end(), lam,
                                     [&](double v, std::size_t i) { return v < tf[i]; });
    const double m = suffix[static_cast<std::size_t>(it - order.begin())] * h;
    rep.measures.push_back(m);
    const double c = rep.norm > 0.0 ? lam * m / rep.norm : 0.0;
    rep.constants.push_back(c);
    rep.sup_constant = std::max(rep.sup_constant, c);
  }
  return rep;
}

WeakTypeSup weak_type_sup(const PeriodicSamples& tf, const PeriodicSamples& f, const WeightSamples* w) {
  const std::size_t n = f.size();
  if (tf.size() != n || (w != nullptr && w->size() != n)) throw ShapeError("operands on different grids");
  const double h = f.cell_width();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm += std::abs(f[i]) * (w ? (*w)[i] : 1.0);
  norm *= h;
  WeakTypeSup out;
  if (!(norm > 0.0)) return out;

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tf[a] > tf[b]; });
  double mass = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    mass += (w ? (*w)[order[r]] : 1.0) * h;
    const double t = tf[order[r]];
    if (r + 1 < n && tf[order[r + 1]] == t) continue;
    if (!(t > 0.0)) break;
    // For λ just below t the level set holds every value ≥ t.
    const double c = t * mass / norm;
    if (c > out.constant) {
      out.constant = c;
      out.lambda = t;
    }
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw DomainError("invalid log-spaced range");
  std::vector<double> v(count);
  const double ratio = std::log(hi / lo);
  for (std::size_t j = 0; j < count; ++j) {
    v[j] = lo * std::exp(ratio * static_cast<double>(j) / static_cast<double>(count - 1));
  }
  return v;
}

}  // namespace hsum
