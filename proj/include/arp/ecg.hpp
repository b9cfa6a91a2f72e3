#pragma once

#include <iosfwd>
#include <string>

#include "arp/coloring.hpp"

// On-disk edge-colored-graph format, line-based ASCII:
//   first line "n m c", then m lines "u v color" (0 <= u < v < n),
//   '#' starts a comment line. Writes are canonical: edges in ascending
//   lexicographic order, so construct -> file -> parse is bit-exact.

namespace arp {

void write_ecg(std::ostream& out, const EdgeColoring& col);
void write_ecg_file(const std::string& path, const EdgeColoring& col);

// Parses and validates: m and c must match the body, colors must be
// exactly {0,...,c-1}, no duplicate edges. Throws std::invalid_argument
// on any violation.
EdgeColoring read_ecg(std::istream& in);
EdgeColoring read_ecg_file(const std::string& path);

}  // namespace arp
