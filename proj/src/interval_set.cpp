#include "hsum/interval_set.hpp"

#include <algorithm>
#include <cctype>

namespace hsum {

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw DomainError("empty integer in rational literal");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw DomainError("malformed rational literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw DomainError("malformed rational literal: " + std::string(s));
      }
    }
    if (s.front() == '+') s.remove_prefix(1);
    return boost::multiprecision::cpp_int(std::string(s));
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto num = parse_int(trim(text.substr(0, slash)));
  const auto den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw DomainError("zero denominator in rational literal");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational closure_gap(const Interval& u, const Interval& v) {
  if (u.b < v.a) return v.a - u.b;
  if (v.b < u.a) return u.a - v.b;
  return Rational(0);
}

OpenIntervalSet::OpenIntervalSet(std::vector<Interval> components, double unit,
                                 std::optional<Rational> period)
    : components_(std::move(components)), unit_(unit), period_(std::move(period)) {
  for (auto& c : components_) {
    c.closed_left = false;
    c.closed_right = false;
  }
  validate();
  cache_real();
}

void OpenIntervalSet::cache_real() {
  real_.clear();
  for (const auto& c : components_) real_.push_back({to_double(c.a) * unit_, to_double(c.b) * unit_});
  period_real_ = period_ ? to_double(*period_) * unit_ : 0.0;
}

OpenIntervalSet OpenIntervalSet::from_pairs(const std::vector<std::pair<Rational, Rational>>& pairs,
                                            double unit, std::optional<Rational> period) {
  std::vector<Interval> comps;
  comps.reserve(pairs.size());
  for (const auto& [a, b] : pairs) comps.push_back(Interval{a, b});
  std::sort(comps.begin(), comps.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  return OpenIntervalSet(std::move(comps), unit, std::move(period));
}

OpenIntervalSet OpenIntervalSet::full_period(std::size_t grid_size) {
  OpenIntervalSet s;
  s.unit_ = kPi;
  s.period_ = Rational(2);
  s.full_ = true;
  s.grid_size_ = grid_size;
  const Rational a = cell_boundary(0, grid_size);
  s.components_.push_back(Interval{a, a + 2});
  s.cache_real();
  return s;
}

void OpenIntervalSet::validate() const {
  if (!(unit_ > 0.0)) throw DomainError("interval set unit must be positive");
  if (period_ && *period_ <= 0) throw DomainError("period must be positive");
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    if (!(c.a < c.b)) throw DomainError("component with a >= b");
    if (k + 1 < components_.size() && !(c.b < components_[k + 1].a)) {
      throw DomainError("components must be sorted with gaps between them");
    }
  }
  if (period_ && !components_.empty()) {
    if (!(components_.back().b < components_.front().a + *period_)) {
      throw DomainError("components overlap across the period");
    }
  }
}

Rational OpenIntervalSet::measure() const {
  Rational m(0);
  for (const auto& c : components_) m += c.length();
  return m;
}

Rational OpenIntervalSet::align(const Rational& x, std::size_t k) const {
  if (!period_) return x;
  const Rational& a = components_[k].a;
  const Rational q = (x - a) / *period_;
  // floor of a rational
  boost::multiprecision::cpp_int fl = numerator(q) / denominator(q);
  if (q < 0 && Rational(fl) != q) fl -= 1;
  return x - Rational(fl) * *period_;
}

double OpenIntervalSet::align_real(double x, std::size_t k) const {
  if (!period_) return x;
  const double p = period_real_;
  const double a = real_[k].a;
  return x - std::floor((x - a) / p) * p;
}

std::optional<std::size_t> OpenIntervalSet::locate(const Rational& x) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const Rational y = align(x, k);
    if (y > components_[k].a && y < components_[k].b) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> OpenIntervalSet::locate_real(double x) const {
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const double y = align_real(x, k);
    if (y > real_[k].a && y < real_[k].b) return k;
  }
  return std::nullopt;
}

Rational OpenIntervalSet::distance_to_complement(const Rational& x) const {
  if (full_) throw DomainError("complement of the set is empty");
  const auto k = locate(x);
  if (!k) return Rational(0);
  const Rational y = align(x, *k);
  const auto& c = components_[*k];
  return std::min(y - c.a, c.b - y);
}

double OpenIntervalSet::distance_to_complement_real(double x) const {
  if (full_) throw DomainError("complement of the set is empty");
  const auto k = locate_real(x);
  if (!k) return 0.0;
  const double y = align_real(x, *k);
  const auto& c = real_[*k];
  return std::min(y - c.a, c.b - y);
}

Rational cell_boundary(std::size_t i, std::size_t n) {
  using boost::multiprecision::cpp_int;
  return Rational(cpp_int(2) * cpp_int(i) - 1 - cpp_int(n), cpp_int(n));
}

Rational cell_coordinate(const Rational& p, std::size_t n) {
  return (p + 1) * Rational(static_cast<long long>(n), 2) + Rational(1, 2);
}

OpenIntervalSet connected_components(std::span<const char> mask, bool periodic) {
  const std::size_t n = mask.size();
  if (n < 2) throw DomainError("mask too short");
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // [first, last] cells
  std::size_t i = 0;
  while (i < n) {
    if (!mask[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < n && mask[j + 1]) ++j;
    runs.emplace_back(i, j);
    i = j + 1;
  }
  if (periodic && runs.size() == 1 && runs[0].first == 0 && runs[0].second == n - 1) {
    throw DomainError("mask covers the whole circle; complement is empty");
  }
  std::vector<Interval> comps;
  bool wrap = periodic && runs.size() >= 2 && runs.front().first == 0 && runs.back().second == n - 1;
  const std::size_t first = wrap ? 1 : 0;
  const std::size_t last = wrap ? runs.size() - 1 : runs.size();
  for (std::size_t r = first; r < last; ++r) {
    comps.push_back(Interval{cell_boundary(runs[r].first, n), cell_boundary(runs[r].second + 1, n)});
  }
  if (wrap) {
    comps.push_back(Interval{cell_boundary(runs.back().first, n),
                             cell_boundary(runs.front().second + 1, n) + 2});
  }
  OpenIntervalSet set(std::move(comps), kPi, periodic ? std::optional<Rational>(2) : std::nullopt);
  set.set_grid_size(n);
  return set;
}

std::vector<char> cell_mask(const OpenIntervalSet& g, std::size_t n) {
  std::vector<char> mask(n, 0);
  if (g.full()) {
    std::fill(mask.begin(), mask.end(), 1);
    return mask;
  }
  for (std::size_t i = 0; i < n; ++i) {
    mask[i] = g.locate_real(PeriodicSamples::point(i, n)).has_value() ? 1 : 0;
  }
  return mask;
}

}  // namespace hsum
