// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/lab/config.hpp"
#include "hsum/lab/corpus.hpp"
#include "hsum/marcinkiewicz.hpp"
#include "hsum/maximal.hpp"
#include "hsum/strong_sum.hpp"
#include "hsum/whitney.hpp"

using namespace hsum;
using namespace hsum::lab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double rel_change(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

// sup over λ of λ·|{v > λ}|/norm for cell values of width h.
double level_sup(std::vector<double> v, double h, double norm) {
  std::sort(v.begin(), v.end(), std::greater<>());
  double best = 0.0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (r + 1 < v.size() && v[r + 1] == v[r]) continue;
    if (!(v[r] > 0.0)) break;
    best = std::max(best, v[r] * static_cast<double>(r + 1) * h / norm);
  }
  return best;
}

// ---------------------------------------------------------------------------

Outcome whitney_exactness() {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(1, 6), den(1, 40);
  std::size_t checked = 0;
  Rational worst(100);
  for (int t = 0; t < 50; ++t) {
    const int k = count(rng);
    std::vector<Rational> ends;
    while (ends.size() < static_cast<std::size_t>(2 * k)) {
      const int q = den(rng);
      std::uniform_int_distribution<int> p(-3 * q, 3 * q);
      const Rational v(p(rng), q);
      if (std::find(ends.begin(), ends.end(), v) == ends.end()) ends.push_back(v);
    }
    std::sort(ends.begin(), ends.end());
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int j = 0; j < k; ++j) pairs.emplace_back(ends[2 * j], ends[2 * j + 1]);
    const auto g = OpenIntervalSet::from_pairs(pairs);
    const auto cover = whitney_refine(g, 12);
    const auto rep = verify_cover(cover, g);
    if (!rep.distance_identity_holds) return {false, "d(I,F) != |I| in set " + std::to_string(t)};
    if (!rep.disjoint || !rep.contained) return {false, "cover not disjoint/contained in set " + std::to_string(t)};
    if (rep.uncovered_measure != rep.tail_formula) return {false, "tail formula mismatch in set " + std::to_string(t)};
    if (rep.min_separation_ratio) {
      if (*rep.min_separation_ratio < Rational(1, 2)) return {false, "separation below 1/2 in set " + std::to_string(t)};
      worst = std::min(worst, *rep.min_separation_ratio);
    }
    checked += rep.interval_count;
  }
  return {true, std::to_string(checked) + " intervals, min separation ratio " + format_rational(worst)};
}

Outcome kernel_identity() {
  double worst = 0.0;
  for (double r : {0.0, 0.5, 0.9}) {
    const auto p = KernelParams::make(r);
    if (r > 0.0 && !(std::pow(r, p.n_tail) < 1e-14)) return {false, "truncation too short"};
    for (int i = 0; i < 20; ++i) {
      for (int j = 0; j < 20; ++j) {
        const double x = -kPi + kTwoPi * (i + 0.5) / 20.0;
        const double y = -kPi + kTwoPi * (j + 0.5) / 20.0;
        worst = std::max(worst, std::abs(d_kernel_closed(p, x, y) - d_kernel_series(p, x, y).value));
      }
    }
  }
  const double spot = d_kernel_closed(KernelParams::make(0.5), 0.0, 0.0);
  const bool ok = worst <= 1e-10 && std::abs(spot - 8.5) <= 1e-12;
  return {ok, "max |closed - series| " + num(worst) + ", D(0.5,0,0) = " + num(spot)};
}

Outcome maximal_weak_type() {
  double c[2];
  for (int level = 0; level < 2; ++level) {
    const std::size_t n = std::size_t{1} << (14 + level);
    const auto e = make_entry({"spike64", "spike", {64.0}}, n, 1);
    c[level] = weak_type_sup(hl_maximal(e.samples), e.samples).constant;
  }
  const bool ok = c[0] >= 1.8 && c[0] <= 2.05 && rel_change(c[0], c[1]) < 0.05;
  return {ok, "N=2^14: " + num(c[0]) + ", N=2^15: " + num(c[1])};
}

Outcome sigma_weak_type() {
  const auto cfg = default_config();
  const std::vector<double> alphas{0.5, 1.0, 2.0};
  std::vector<double> sup[2] = {std::vector<double>(3, 0.0), std::vector<double>(3, 0.0)};
  std::vector<std::vector<double>> per_entry[2];
  for (int level = 0; level < 2; ++level) {
    const std::size_t n = cfg.grid_size << level;
    const int nm = 256 << level;
    for (const auto& e : build_corpus(cfg, n)) {
      const auto c = dft_coefficients(e.samples, nm);
      const auto stars = sigma_alpha_star_grid(c, nm, n, alphas);
      std::vector<double> row;
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        row.push_back(weak_type_sup(stars[j], e.samples).constant);
        sup[level][j] = std::max(sup[level][j], row.back());
      }
      per_entry[level].push_back(row);
    }
  }
  bool ok = true;
  std::string detail;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    ok = ok && std::isfinite(sup[0][j]) && rel_change(sup[0][j], sup[1][j]) < 0.10;
    detail += "alpha=" + num(alphas[j]) + ": " + num(sup[0][j]) + " -> " + num(sup[1][j]) + "; ";
  }
  double entry_change = 0.0;
  for (std::size_t k = 0; k < per_entry[0].size(); ++k) {
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      entry_change = std::max(entry_change, rel_change(per_entry[0][k][j], per_entry[1][k][j]));
    }
  }
  ok = ok && entry_change < 0.10;
  return {ok, detail + "max per-entry change " + num(entry_change)};
}

Outcome weighted_weak_type() {
  const auto cfg = default_config();
  const std::size_t n = cfg.grid_size;
  auto w = floored_power_weight(n, -0.5, kTwoPi / static_cast<double>(n));
  const double a1 = a1_check(w);
  double worst = 0.0;
  std::string failing;
  for (const auto& e : build_corpus(cfg, n)) {
    // the maximal function and σ*_α for every α of the config
    std::vector<PeriodicSamples> ops{hl_maximal(e.samples)};
    const auto c = dft_coefficients(e.samples, cfg.n_max);
    for (auto& s : sigma_alpha_star_grid(c, cfg.n_max, n, cfg.alphas)) ops.push_back(std::move(s));
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const double plain = weak_type_sup(ops[k], e.samples).constant;
      const double weighted = weak_type_sup(ops[k], e.samples, &w).constant;
      worst = std::max(worst, weighted / (a1 * plain));
      if (weighted > a1 * plain) failing += e.name + "#" + std::to_string(k) + " ";
    }
  }
  return {failing.empty(), "a1 = " + num(a1) + ", max weighted/(a1 x unweighted) = " + num(worst) +
                               (failing.empty() ? "" : ", failing: " + failing)};
}

Outcome marcinkiewicz_closed_form() {
  const auto g = OpenIntervalSet::from_pairs({{0, 1}});
  const double v = marcinkiewicz_function(-1.0, g, SingularQuadratureConfig::for_grid(std::size_t{1} << 14));
  const auto phi = phi_function(g);
  const double at = phi_integral(-1.0, phi);
  const bool diverges = std::isinf(phi_integral(0.0, phi));
  const bool ok = std::abs(v - std::log(9.0 / 8.0)) <= 1e-3 && at == 0.5 && diverges;
  return {ok, "F(-1) = " + num(v) + ", phi integral at -1 = " + num(at) + (diverges ? ", diverges at 0" : "")};
}

double fat_cantor_weak(int gens, std::size_t n) {
  const auto g = fat_cantor_gaps(gens);
  const auto cfg = SingularQuadratureConfig::for_grid(n);
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = PeriodicSamples::point(i, n);
    if (!g.locate_real(x)) v[i] = marcinkiewicz_function(x, g, cfg);
  }
  return level_sup(v, kTwoPi / static_cast<double>(n), g.measure_real());
}

Outcome fat_cantor_stability() {
  std::string detail;
  bool ok = true;
  for (int gens : {3, 5}) {
    // cells no wider than a quarter of the smallest gap 4^{-g}
    std::size_t n = 1024;
    while (static_cast<double>(n) < 4.0 * kTwoPi * std::ldexp(1.0, 2 * gens)) n *= 2;
    const double a = fat_cantor_weak(gens, n), b = fat_cantor_weak(gens, 2 * n);
    ok = ok && std::isfinite(a) && rel_change(a, b) < 0.10;
    detail += "g=" + std::to_string(gens) + ": " + num(a) + " -> " + num(b) + "; ";
  }
  return {ok, detail};
}

Outcome abel_domination() {
  const auto cfg = default_config();
  const std::size_t n = cfg.grid_size;
  const int kmax = 256;
  double worst = 0.0, worst256 = 0.0;
  bool holds = true;
  for (const auto& e : build_corpus(cfg, n)) {
    const auto c = dft_coefficients(e.samples, kmax);
    for (std::size_t i = 0; i < n; i += n / 16) {
      const auto s = make_strong_series(c, PeriodicSamples::point(i, n), kmax, 2.0);
      for (int m : {4, 16, 64, 256}) {
        const auto r = abel_domination_check(s, m);
        holds = holds && r.holds;
        worst = std::max(worst, r.ratio);
        if (m == 256) worst256 = std::max(worst256, r.ratio);
      }
    }
  }
  const double corpus256 = worst256;
  // cos((m−1)t) − cos(mt): S_ν(0) is 1 at ν = m − 1 and 0 elsewhere, the extremal case
  for (int m : {4, 16, 64, 256}) {
    const auto f = PeriodicSamples::from_function(n, [m](double t) { return std::cos((m - 1) * t) - std::cos(m * t); });
    const auto r = abel_domination_check(make_strong_series(dft_coefficients(f, kmax), 0.0, kmax, 2.0), m);
    holds = holds && r.holds;
    worst = std::max(worst, r.ratio);
    if (m == 256) worst256 = std::max(worst256, r.ratio);
  }
  const bool ok = holds && worst <= 4.0 && std::abs(worst256 - std::numbers::e) <= 0.15 * std::numbers::e;
  return {ok, "max ratio " + num(worst) + ", at n=256: " + num(worst256) + " (corpus alone " + num(corpus256) + ")"};
}

Outcome poisson_sweep() {
  bool ok = true;
  double worst = 0.0;
  std::size_t cases = 0;
  const std::size_t cells = 64;
  for (double c : {0.25, 0.5, 1.0}) {
    for (int j = 1; j <= 12; ++j) {
      const double eps = std::ldexp(1.0, -j);
      for (int i = 0; i <= 8; ++i) {
        const double len = std::ldexp(1.0, -i);
        for (std::size_t pos = 0; pos < cells; pos += 9) {
          std::vector<double> f(cells, 0.0);
          f[pos] = static_cast<double>(cells);
          const auto pb = poisson_average_bound(f, 0.0, len, -c * len, c, 1.0 - eps, 1.0);
          // ε·mass/(ε² + d²) at the spike's distance d, maximized over ε at 1/(2d)
          const double d = c * len + (static_cast<double>(pos) + 0.5) * len / cells;
          const double calculus = eps * len / (eps * eps + d * d);
          ok = ok && pb.lhs <= 1.0 / (2.0 * c) + 1e-6 && std::abs(pb.lhs - calculus) <= 1e-12 * (1.0 + calculus);
          worst = std::max(worst, pb.lhs * 2.0 * c);
          ++cases;
        }
      }
    }
  }
  return {ok, std::to_string(cases) + " cases, max lhs/(lambda/(2c)) = " + num(worst)};
}

Outcome hausdorff_young() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(1, 40), freq(-100, 100);
  const std::size_t n = 1024;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<int, std::complex<double>>> terms(static_cast<std::size_t>(deg(rng)));
    for (auto& term : terms) term = {freq(rng), {u(rng), u(rng)}};
    const auto f = ComplexSamples::from_function(n, [&](double x) {
      std::complex<double> s = 0.0;
      for (const auto& [k, a] : terms) s += a * std::polar(1.0, k * x);
      return s;
    });
    for (double p : {4.0 / 3.0, 1.5}) worst = std::max(worst, hausdorff_young_check(f, p).ratio);
  }
  const double p2 = p_kernel_normalization(2.0, 0.1);
  const double p4 = p_kernel_normalization(4.0, 0.1);
  const double drift = std::abs(p_kernel_normalization(3.0, 0.1) - p_kernel_normalization(3.0, 0.001));
  const bool ok = worst <= 1.0 + 1e-6 && std::abs(p2 - kPi) <= 1e-6 &&
                  std::abs(p4 - kPi / std::numbers::sqrt2) <= 1e-5 && drift <= 1e-6;
  return {ok, "max ratio " + num(worst) + ", p=2: " + num(p2) + ", p=4: " + num(p4) + ", eps drift " + num(drift)};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "hsum_acceptance_determinism";
  fs::remove_all(root);
  for (const char* run : {"a", "b"}) {
    const std::string cmd = std::string("\"") + HSUMLAB_PATH + "\" run --suite all --seed 7 --out \"" +
                            (root / run).string() + "\" > \"" + (root / (std::string(run) + ".log")).string() + "\"";
    fs::create_directories(root);
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "hsumlab exited with status " + std::to_string(rc)};
  }
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  std::size_t files = 0, bytes = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv") continue;
    const auto other = root / "b" / entry.path().filename();
    const auto x = slurp(entry.path());
    if (!fs::exists(other) || slurp(other) != x) return {false, entry.path().filename().string() + " differs"};
    ++files;
    bytes += x.size();
  }
  return {files == 6, std::to_string(files) + " CSV files identical (" + std::to_string(bytes) + " bytes)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "Whitney exactness", 10, whitney_exactness},
      {2, "kernel identity", 5, kernel_identity},
      {3, "maximal weak type", 60, maximal_weak_type},
      {4, "sigma* weak-type stability", 300, sigma_weak_type},
      {5, "weighted weak type", 300, weighted_weak_type},
      {6, "Marcinkiewicz closed form", 5, marcinkiewicz_closed_form},
      {7, "fat Cantor weak (1,1)", 120, fat_cantor_stability},
      {8, "Abel domination", 120, abel_domination},
      {9, "Poisson key inequality", 30, poisson_sweep},
      {10, "Hausdorff-Young", 30, hausdorff_young},
      {11, "determinism", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("criterion %2d %-28s %s  [%.1fs / %.0fs] %s%s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs, c.limit_s,
                o.detail.c_str(), in_time ? "" : " (over time limit)");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
