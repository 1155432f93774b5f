#pragma once

#include <iosfwd>
#include <string>

namespace hsum::lab {

/// Long-format plot series (series,label,x,y,z) gathered from a results
/// directory: weak-type curves (λ, measure, constant) from weaktype.csv and
/// 𝓕 profiles (x, 𝓕(x)) from marcinkiewicz.csv.  Missing report files are
/// skipped; a missing directory throws std::invalid_argument.
void emit_plot_data(const std::string& results_dir, std::ostream& out);

}  // namespace hsum::lab
