#pragma once

#include <string>
#include <string_view>

#include "signed_circular/coloring.hpp"

namespace sc {

/// `.col` certificate: `rate <p> <q>` then `color <v> <i>` for v = 0..n-1.
/// The grid is written verbatim, so (p, q) may share a factor.
std::string emit_col(const DiscreteColoring& c);

/// Accepts `#` comments and blank lines; vertices may appear in any order but
/// each of 0..n-1 exactly once. Throws ParseError.
DiscreteColoring parse_col(std::string_view text);
DiscreteColoring read_col_file(const std::string& path);
void write_col_file(const std::string& path, const DiscreteColoring& c);

} // namespace sc
