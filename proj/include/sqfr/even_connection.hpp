#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqfr/graph.hpp"

namespace sqfr {

/// An even-connection between u and v with respect to an edge multiset
/// e_1..e_s: vertices p_0..p_{2r+1} where consecutive pairs are edges of G,
/// every pair (p_{2k+1}, p_{2k+2}) is some e_i, and no e_i is consumed more
/// often than it occurs. edge_assignment[k] is that i for step k.
struct WitnessPath {
    std::vector<int> vertices;
    std::vector<int> edge_assignment;
};

/// Shortest witness (fewest vertices), ties broken by lexicographically
/// smallest vertex sequence; absent when no even-connection exists. u may
/// equal v. Throws PreconditionError when some e_i is not an edge of g.
std::optional<WitnessPath> even_connection_witness(const Graph& g,
                                                   const std::vector<Edge>& edges, int u, int v);

/// Direct transcription of the even-connection conditions; used to re-check
/// witnesses independently of the search.
bool witness_is_valid(const Graph& g, const std::vector<Edge>& edges, int u, int v,
                      const WitnessPath& w);

/// The graph H with I(H) = (I(G)^[s+1] : e_1...e_s): vertices V(G) minus the
/// matching support (labels preserved; dropped vertices isolated), an edge
/// iff a G-edge or an even-connected pair. Witnesses are kept for the edges
/// that are not G-edges.
struct ColonGraph {
    Graph graph;                                  // same ambient labels as g
    std::vector<int> vertices;                    // V(G) \ supp, sorted
    std::map<std::pair<int, int>, WitnessPath> witnesses;
};

/// Requires m to be a matching of g with 1 <= |m| <= match(g) - 1.
ColonGraph colon_graph(const Graph& g, const Matching& m);

nlohmann::ordered_json colon_graph_report(const ColonGraph& h);

/// Parses "u-v,u-v,..." into an edge list (not validated against any graph).
std::vector<Edge> parse_edge_pairs(const std::string& text);

}  // namespace sqfr
