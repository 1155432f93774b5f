#include "hsum/whitney.hpp"

#include <algorithm>
#include <limits>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace hsum {

char side_code(Side s) {
  switch (s) {
    case Side::Left: return 'L';
    case Side::Central: return 'C';
    case Side::Right: return 'R';
  }
  return '?';
}

Side side_from_code(char c) {
  switch (c) {
    case 'L': return Side::Left;
    case 'C': return Side::Central;
    case 'R': return Side::Right;
    default: throw DomainError(std::string("unknown side code '") + c + "'");
  }
}

Rational WhitneyCover::covered_measure() const {
  Rational m(0);
  for (const auto& ci : intervals) m += ci.interval.length();
  return m;
}

Rational WhitneyCover::tail_formula() const {
  using boost::multiprecision::cpp_int;
  const Rational scale = Rational(2, 3) / Rational(cpp_int(1) << truncation_depth);
  return scale * source.measure();
}

namespace {

unsigned bit_length(const boost::multiprecision::cpp_int& v) {
  return v == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1u;
}

// u shifted by a multiple of the period so that it comes closest to v.
std::vector<Interval> images(const Interval& u, const std::optional<Rational>& period) {
  if (!period) return {u};
  std::vector<Interval> out;
  for (int m = -1; m <= 1; ++m) {
    Interval w = u;
    w.a += *period * m;
    w.b += *period * m;
    out.push_back(w);
  }
  return out;
}

// Whether two intervals share a point, honouring closure flags.
bool overlaps(const Interval& u, const Interval& v) {
  if (u.b < v.a || v.b < u.a) return false;
  if (u.b == v.a) return u.closed_right && v.closed_left;
  if (v.b == u.a) return v.closed_right && u.closed_left;
  return true;
}

}  // namespace

WhitneyCover whitney_refine(const OpenIntervalSet& g, int depth) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  if (g.empty()) throw DomainError("cannot refine an empty set");
  if (g.full()) throw DomainError("complement is empty; Whitney cover undefined");
  using boost::multiprecision::cpp_int;
  for (const auto& j : g.components()) {
    const unsigned bits = bit_length(denominator(j.length())) + 2u + static_cast<unsigned>(depth);
    if (bits > kMaxDenominatorBits || bit_length(denominator(j.a)) + bits > 2 * kMaxDenominatorBits) {
      throw CapacityError("depth " + std::to_string(depth) + " exceeds the rational denominator budget");
    }
  }

  WhitneyCover cover;
  cover.source = g;
  cover.truncation_depth = depth;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto& j = g.components()[k];
    const Rational third = j.length() / 3;
    // Left pieces, outermost first so the output stays sorted.
    for (int gen = depth; gen >= 1; --gen) {
      const Rational inner = third / Rational(cpp_int(1) << (gen - 1));
      const Rational outer = inner / 2;
      cover.intervals.push_back({Interval{j.a + outer, j.a + inner, true, false}, k, gen, Side::Left});
    }
    cover.intervals.push_back({Interval{j.a + third, j.b - third, true, true}, k, 0, Side::Central});
    for (int gen = 1; gen <= depth; ++gen) {
      const Rational inner = third / Rational(cpp_int(1) << (gen - 1));
      const Rational outer = inner / 2;
      cover.intervals.push_back({Interval{j.b - inner, j.b - outer, false, true}, k, gen, Side::Right});
    }
  }
  return cover;
}

Rational distance_to_complement(const Interval& iv, const OpenIntervalSet& g) {
  if (g.full()) throw DomainError("complement is empty");
  const Rational mid = (iv.a + iv.b) / 2;
  const auto k = g.locate(mid);
  if (!k) return Rational(0);
  const auto& j = g.components()[*k];
  const Rational shift = g.align(mid, *k) - mid;
  const Rational a = iv.a + shift;
  const Rational b = iv.b + shift;
  if (a < j.a || b > j.b || (a == j.a && iv.closed_left) || (b == j.b && iv.closed_right)) {
    return Rational(0);
  }
  return std::min(a - j.a, j.b - b);
}

CoverReport verify_cover(const WhitneyCover& cover, const OpenIntervalSet& g) {
  CoverReport rep;
  const auto& ivs = cover.intervals;
  rep.interval_count = ivs.size();
  std::vector<std::size_t> neighbours(ivs.size(), 0);

  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const Interval& iv = ivs[i].interval;
    const auto k = g.locate((iv.a + iv.b) / 2);
    const Rational d = distance_to_complement(iv, g);
    if (!k || d == 0) {
      rep.contained = false;
      rep.violations.push_back({i, i, "interval not inside a component of G"});
      continue;
    }
    if (d != iv.length()) {
      rep.distance_identity_holds = false;
      rep.violations.push_back({i, i, "d(I,F) = " + format_rational(d) + " but |I| = " +
                                          format_rational(iv.length())});
    }
  }

  std::vector<double> lo(ivs.size()), hi(ivs.size());
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    lo[i] = to_double(ivs[i].interval.a);
    hi[i] = to_double(ivs[i].interval.b);
  }
  const double period = g.period() ? to_double(*g.period()) : 0.0;
  double best = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      // Floating-point screen; pairs near a decision boundary or the running
      // minimum are redone exactly below.
      double dgap = std::numeric_limits<double>::infinity();
      for (int m = period > 0.0 ? -1 : 0; m <= (period > 0.0 ? 1 : 0); ++m) {
        const double a = lo[i] + m * period;
        const double b = hi[i] + m * period;
        dgap = std::min(dgap, std::max(lo[j] - b, a - hi[j]));
      }
      const double dratio = dgap / std::max(hi[i] - lo[i], hi[j] - lo[j]);
      if (dgap > 1e-12 && dratio > 0.5 + 1e-9 && dratio > best * (1.0 + 1e-9)) {
        ++rep.pair_count;
        continue;
      }
      best = std::min(best, dratio);
      const Interval& v = ivs[j].interval;
      bool touching = false;
      bool overlap = false;
      std::optional<Rational> gap;
      for (const Interval& u : images(ivs[i].interval, g.period())) {
        if (overlaps(u, v)) overlap = true;
        if (u.touches(v)) {
          touching = true;
        } else {
          const Rational d = closure_gap(u, v);
          if (!gap || d < *gap) gap = d;
        }
      }
      if (overlap) {
        rep.disjoint = false;
        rep.violations.push_back({i, j, "intervals overlap"});
      }
      const Rational li = ivs[i].interval.length();
      const Rational lj = v.length();
      if (touching) {
        ++neighbours[i];
        ++neighbours[j];
        if (2 * lj < li || lj > 2 * li) {
          rep.adjacent_ratio_holds = false;
          rep.violations.push_back({i, j, "adjacent lengths differ by more than a factor 2"});
        }
        continue;
      }
      ++rep.pair_count;
      const Rational ratio = *gap / std::max(li, lj);
      if (!rep.min_separation_ratio || ratio < *rep.min_separation_ratio) rep.min_separation_ratio = ratio;
      if (ratio < Rational(1, 2)) {
        rep.violations.push_back({i, j, "separation ratio " + format_rational(ratio) + " < 1/2"});
      }
    }
  }
  for (std::size_t n : neighbours) rep.max_adjacent_neighbours = std::max(rep.max_adjacent_neighbours, n);

  rep.uncovered_measure = g.measure() - cover.covered_measure();
  rep.tail_formula = cover.tail_formula();
  return rep;
}

Interval expanded_interval(const Interval& iv, const OpenIntervalSet& g) {
  const Rational mid = (iv.a + iv.b) / 2;
  const auto k = g.locate(mid);
  if (!k) throw DomainError("interval is not inside the open set");
  const auto& j = g.components()[*k];
  const Rational shift = g.align(mid, *k) - mid;
  const Rational to_left = iv.a + shift - j.a;
  const Rational to_right = j.b - (iv.b + shift);
  const Rational len = iv.length();
  if (to_left <= to_right) return Interval{iv.a - len, iv.b, false, iv.closed_right};
  return Interval{iv.a, iv.b + len, iv.closed_left, false};
}

namespace {

boost::multiprecision::cpp_int floor_of(const Rational& q) {
  boost::multiprecision::cpp_int fl = numerator(q) / denominator(q);
  if (q < 0 && Rational(fl) != q) fl -= 1;
  return fl;
}

// ∫_0^u |f| in cell units for any real u, extended periodically.
double cumulative(const std::vector<double>& prefix, std::span<const double> absf, const Rational& u) {
  const std::size_t n = absf.size();
  const auto cell = floor_of(u);
  const auto period = floor_of(Rational(cell, static_cast<long long>(n)));
  const auto idx = static_cast<std::size_t>(static_cast<long long>(cell - period * static_cast<long long>(n)));
  const double frac = to_double(u - Rational(cell));
  return static_cast<double>(static_cast<long long>(period)) * prefix[n] + prefix[idx] + frac * absf[idx];
}

}  // namespace

double integrate_abs(const PeriodicSamples& f, const Interval& iv) {
  const std::size_t n = f.size();
  std::vector<double> absf(n);
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    absf[i] = std::abs(f[i]);
    prefix[i + 1] = prefix[i] + absf[i];
  }
  const double cells = cumulative(prefix, absf, cell_coordinate(iv.b, n)) -
                       cumulative(prefix, absf, cell_coordinate(iv.a, n));
  return cells * f.cell_width();
}

CellOverlap cell_overlap(const Interval& iv, std::size_t n) {
  const Rational u0 = cell_coordinate(iv.a, n);
  const Rational u1 = cell_coordinate(iv.b, n);
  const auto first = floor_of(u0);
  auto last = floor_of(u1);
  if (Rational(last) == u1) last -= 1;
  CellOverlap out;
  const auto nn = static_cast<long long>(n);
  long long f = static_cast<long long>(first) % nn;
  if (f < 0) f += nn;
  out.first_cell = static_cast<std::size_t>(f);
  for (auto c = first; c <= last; ++c) {
    const Rational lo = std::max(u0, Rational(c));
    const Rational hi = std::min(u1, Rational(c + 1));
    out.fractions.push_back(to_double(hi - lo));
  }
  return out;
}

std::vector<Piece> piece_decomposition(const PeriodicSamples& f, const WhitneyCover& cover, double lambda) {
  const std::size_t n = f.size();
  if (cover.source.grid_size() != n) throw ShapeError("cover is not snapped to the sample grid");
  if (!(lambda > 0.0)) throw DomainError("level must be positive");
  const double h = f.cell_width();
  std::vector<Piece> pieces;
  pieces.reserve(cover.intervals.size());
  for (const auto& ci : cover.intervals) {
    Piece p;
    p.source = ci;
    const double len = to_double(ci.interval.length()) * kPi;
    p.average = integrate_abs(f, ci.interval) / len;
    const Interval wide = expanded_interval(ci.interval, cover.source);
    p.expanded_average = integrate_abs(f, wide) / (2.0 * len);
    p.slack = 2.0 * lambda * h / len + 1e-12 * lambda;
    p.within_bound = p.average <= 2.0 * lambda + p.slack;
    p.restriction = cell_overlap(ci.interval, n);
    for (std::size_t c = 0; c < p.restriction.fractions.size(); ++c) {
      p.mass += f[(p.restriction.first_cell + c) % n] * p.restriction.fractions[c] * h;
    }
    pieces.push_back(std::move(p));
  }
  return pieces;
}

void write_cover_jsonl(std::ostream& out, const WhitneyCover& cover) {
  for (const auto& ci : cover.intervals) {
    nlohmann::ordered_json j;
    j["a"] = format_rational(ci.interval.a);
    j["b"] = format_rational(ci.interval.b);
    j["parent"] = ci.parent;
    j["gen"] = ci.generation;
    j["side"] = std::string(1, side_code(ci.side));
    j["closed_left"] = ci.interval.closed_left;
    j["closed_right"] = ci.interval.closed_right;
    out << j.dump() << '\n';
  }
}

std::vector<CoverInterval> read_cover_jsonl(std::istream& in) {
  std::vector<CoverInterval> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    CoverInterval ci;
    ci.interval.a = parse_rational(j.at("a").get<std::string>());
    ci.interval.b = parse_rational(j.at("b").get<std::string>());
    ci.interval.closed_left = j.at("closed_left").get<bool>();
    ci.interval.closed_right = j.at("closed_right").get<bool>();
    ci.parent = j.at("parent").get<std::size_t>();
    ci.generation = j.at("gen").get<int>();
    const auto side = j.at("side").get<std::string>();
    if (side.size() != 1) throw DomainError("side must be one of L, C, R");
    ci.side = side_from_code(side[0]);
    out.push_back(std::move(ci));
  }
  return out;
}

}  // namespace hsum
