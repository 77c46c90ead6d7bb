#pragma once

#include <string>
#include <string_view>

#include "sqfr/graph.hpp"

namespace sqfr {

/// Decodes a single graph6 record: byte 63+n, then ceil(n(n-1)/2 / 6) bytes,
/// each in 63..126, carrying the upper-triangle bits x01, x02, x12, x03, ...
/// column-major, 6 per byte, most significant first, zero padded.
/// Throws ParseError on bytes out of range, wrong length, nonzero padding,
/// or n > 32.
Graph parse_graph6(std::string_view record);

/// Inverse of parse_graph6; bit-exact round trip.
std::string to_graph6(const Graph& g);

}  // namespace sqfr
