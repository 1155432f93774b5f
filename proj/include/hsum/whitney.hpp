#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/interval_set.hpp"

namespace hsum {

enum class Side { Left, Central, Right };

char side_code(Side s);
Side side_from_code(char c);

/// One interval of a Whitney-type cover.
struct CoverInterval {
  Interval interval;
  std::size_t parent = 0;  // index of the component J_k of G
  int generation = 0;      // 0 for the central third, g ≥ 1 for side pieces
  Side side = Side::Central;

  friend bool operator==(const CoverInterval&, const CoverInterval&) = default;
};

/// Truncated Whitney-type refinement of an open set G.
///
/// Each component J = (a, b) contributes its closed central third and, on
/// each side, pieces of generation g = 1..depth, each half the length of the
/// previous one and adjacent to it:
///   left  g: [a + |J|/(3·2^g), a + |J|/(3·2^{g−1}))
///   right g: (b − |J|/(3·2^{g−1}), b − |J|/(3·2^g)]
/// so that d(I, F) = |I| for every piece.  Intervals are sorted by left end.
struct WhitneyCover {
  OpenIntervalSet source;
  std::vector<CoverInterval> intervals;
  int truncation_depth = 0;

  Rational covered_measure() const;
  /// Σ_k (2/3)|J_k|·2^{−depth}: the part of G left out by truncation.
  Rational tail_formula() const;
};

/// Denominators above this many bits raise CapacityError.
inline constexpr unsigned kMaxDenominatorBits = 4096;

WhitneyCover whitney_refine(const OpenIntervalSet& g, int depth);

struct CoverViolation {
  std::size_t first = 0;
  std::size_t second = 0;  // equals first for single-interval checks
  std::string what;
};

struct CoverReport {
  std::size_t interval_count = 0;
  std::size_t pair_count = 0;              // non-adjacent pairs examined
  bool distance_identity_holds = true;     // d(I, F) = |I| for all I, exactly
  bool disjoint = true;
  bool contained = true;
  bool adjacent_ratio_holds = true;        // |I|/2 ≤ |I'| ≤ 2|I| for adjacent pairs
  std::optional<Rational> min_separation_ratio;  // min d(I, I')/max(|I|, |I'|)
  std::size_t max_adjacent_neighbours = 0;
  Rational uncovered_measure;
  Rational tail_formula;
  std::vector<CoverViolation> violations;

  bool ok() const {
    return distance_identity_holds && disjoint && contained && adjacent_ratio_holds &&
           (!min_separation_ratio || *min_separation_ratio >= Rational(1, 2)) &&
           uncovered_measure == tail_formula;
  }
};

/// Exact checks of a cover against the open set G it refines.
CoverReport verify_cover(const WhitneyCover& cover, const OpenIntervalSet& g);

/// d(I, F) for an interval inside G: the gap to the nearest point outside G.
Rational distance_to_complement(const Interval& iv, const OpenIntervalSet& g);

/// Ĩ: I extended by |I| towards its nearest complement point (ties go left).
/// The extended end is open and touches F.
Interval expanded_interval(const Interval& iv, const OpenIntervalSet& g);

/// ∫ |f| over an interval of an OpenIntervalSet snapped to f's grid, by cell
/// sums with fractional end cells.  Wraps across the period.
double integrate_abs(const PeriodicSamples& f, const Interval& iv);

/// Overlap length (in cells) of each grid cell with an interval, as
/// (first cell index, fractions).  Cell indices wrap modulo N.
struct CellOverlap {
  std::size_t first_cell = 0;
  std::vector<double> fractions;
};
CellOverlap cell_overlap(const Interval& iv, std::size_t n);

struct Piece {
  CoverInterval source;
  double average = 0.0;           // (1/|I|)∫_I |f|
  double expanded_average = 0.0;  // (1/|Ĩ|)∫_Ĩ |f|
  double slack = 0.0;             // grid allowance on the 2λ bound
  bool within_bound = true;       // average ≤ 2λ + slack
  CellOverlap restriction;        // f·χ_I as cell fractions of f
  double mass = 0.0;              // ∫ f_k
};

/// Splits f over a cover of G = {f* > λ} and checks every average against 2λ.
///
/// With the cover snapped to f's grid, Ĩ together with the complement cell it
/// touches lies inside a run of whole cells with average ≤ λ, which yields
/// the allowance 2λh/|I| used as `slack`, h being the cell width.
std::vector<Piece> piece_decomposition(const PeriodicSamples& f, const WhitneyCover& cover, double lambda);

/// JSON lines, one interval per line, rational strings exact.
void write_cover_jsonl(std::ostream& out, const WhitneyCover& cover);
std::vector<CoverInterval> read_cover_jsonl(std::istream& in);

}  // namespace hsum
