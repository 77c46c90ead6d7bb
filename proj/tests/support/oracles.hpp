#pragma once

// Independent test oracles. These deliberately avoid the library's homology
// scan, matching solver, and graph6 codec so that agreement is meaningful.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqfr/graph.hpp"
#include "sqfr/ideal.hpp"

namespace oracle {

/// Graded Betti numbers of S/I from Koszul-complex homology per squarefree
/// multidegree (a different complex than the Stanley-Reisner scan).
std::map<std::pair<int, int>, long long> betti_of_quotient(const sqfr::Ideal& ideal,
                                                           std::int64_t p);

/// Betti numbers of the ideal itself: beta_{i,j}(I) = beta_{i+1,j}(S/I).
std::map<std::pair<int, int>, long long> betti_of_ideal(const sqfr::Ideal& ideal,
                                                        std::int64_t p);

/// max{j - i} over the ideal's table.
int regularity_of_ideal(const sqfr::Ideal& ideal, std::int64_t p);

/// Maximum matching size by plain include/exclude recursion over edges.
int max_matching_brute(const sqfr::Graph& g);

/// Maximum induced matching size by subset enumeration over edges.
int max_induced_matching_brute(const sqfr::Graph& g);

/// Generators of the squarefree part of the ordinary power I^s, found by
/// expanding exponent vectors and scanning all squarefree monomials.
sqfr::Ideal squarefree_part_of_power(const sqfr::Ideal& ideal, int s);

/// Reference graph6 decoder (separate bit handling from the library's).
sqfr::Graph decode_graph6(const std::string& record);

}  // namespace oracle
