#pragma once

#include <cstdint>
#include <vector>

#include "sqfr/graph.hpp"

namespace sqfr {

/// Rank over GF(2); each row is bit-packed into 64-bit words.
int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int cols);

/// Rank over GF(p), dense rows of residues.
int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Reduced homology ranks of an abstract simplicial complex. levels[t] lists
/// the faces with t vertices as vertex masks, so levels[0] is {0} for any
/// nonvoid complex. Returns h with h[t] = dim H~_{t-1} over GF(p). An empty
/// levels[0] (the void complex) yields all zeros.
std::vector<int> reduced_homology_of_faces(const std::vector<std::vector<VertexSet>>& levels,
                                           std::int64_t p);

bool is_prime(std::int64_t p);

}  // namespace sqfr
