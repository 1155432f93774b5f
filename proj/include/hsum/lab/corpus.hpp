#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsum/grid.hpp"
#include "hsum/lab/config.hpp"
#include "hsum/maximal.hpp"

namespace hsum::lab {

struct CorpusEntry {
  std::string name;
  std::string kind;
  std::vector<double> params;
  double support_radius = kPi;     // radius of the smallest centred arc holding the support
  bool kernel_experiment = false;  // support_radius ≤ π/8
  PeriodicSamples samples;
};

/// Samples one generator on an N-point grid.
///
/// Smooth kinds are sampled pointwise.  spike, spike_train,
/// fat_cantor_indicator and sqrt_singular are stored as exact cell averages,
/// so ‖f‖₁ is reproduced by the cell sum.
///   constant {c}, harmonic {k} = cos kx, square_wave = sign x,
///   spike {m} = m·χ[0, 1/m], spike_train {k, m} = k spikes m·χ[p_j, p_j + 1/m],
///   fat_cantor_indicator {g} = χ of the fat Cantor set on [0, 1],
///   sqrt_singular {a} = |x|^{−a}, random_trig {d, offset} with coefficients
///   uniform in [−1, 1] drawn from seed + offset.
CorpusEntry make_entry(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed);
std::vector<CorpusEntry> build_corpus(const ExperimentConfig& cfg, std::size_t n);

/// unit, floored_power {e} = max(|x|, h)^e, shifted_abs = |x| + h; h = 2π/N.
WeightSamples make_weight(const GeneratorSpec& spec, std::size_t n);

/// Mean of |f| over the period.
double mean_abs(const PeriodicSamples& f);

/// Uniform double in [0, 1) from 53 random bits.
double uniform01(std::uint64_t bits);

struct ShiftedPiece {
  std::size_t arc = 0;
  std::size_t shift = 0;  // cells; piece[i] = f[(i + N − shift) mod N] on the arc
  PeriodicSamples piece;  // recentred at 0
};

/// Splits the period into 16 arcs of length π/8 and moves each arc's
/// restriction of f so that the arc is centred at x = 0.  Needs N divisible
/// by 32.
std::vector<ShiftedPiece> shift_and_split(const PeriodicSamples& f);
/// Undoes the shifts and adds the pieces back together.
PeriodicSamples unshift_and_sum(const std::vector<ShiftedPiece>& pieces);

}  // namespace hsum::lab
