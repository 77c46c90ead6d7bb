#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqfr {

/// Subset of {0..31} as a bitmask.
using VertexSet = std::uint64_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

/// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    VertexSet mask() const { return vbit(u) | vbit(v); }
    auto operator<=>(const Edge&) const = default;
};

/// A set of pairwise disjoint edges, kept sorted.
using Matching = std::vector<Edge>;

/// Simple undirected graph on labeled vertices 0..n-1, n <= 32.
/// Adjacency is symmetric and irreflexive; neighbor sets are bitmasks.
class Graph {
public:
    static constexpr int kMaxVertices = 32;

    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;

    /// All vertices as a mask.
    VertexSet vertex_mask() const { return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_)); }

    /// Edges in canonical sorted order.
    std::vector<Edge> edges() const;

    /// Same vertex labels; every edge meeting `drop` removed (dropped
    /// vertices become isolated).
    Graph without_vertices(VertexSet drop) const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;

    void check_vertex(int v) const;
};

// ---- matchings ------------------------------------------------------------

/// True iff m is a set of pairwise disjoint edges of g.
bool is_matching(const Graph& g, const Matching& m);

/// A maximum matching, deterministic (exact branch and bound over vertices,
/// memoized on the remaining-vertex set).
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

/// A maximum induced matching: pairwise disjoint edges with no further edge
/// of g inside the union of any two of them.
Matching maximum_induced_matching(const Graph& g);
int induced_matching_number(const Graph& g);

/// Exactly the matchings of cardinality s, each once, in lexicographic order
/// on their sorted edge lists. s = 0 yields the single empty matching.
std::vector<Matching> enumerate_matchings(const Graph& g, int s);

// ---- graph classes --------------------------------------------------------

/// 2-coloring per connected component, the side of the smallest vertex index
/// going to X; isolated vertices land in X. Absent iff g has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

/// True iff g has no isolated vertices, even order, and every minimal vertex
/// cover (complement of a maximal independent set) has size n/2.
bool is_very_well_covered(const Graph& g);

/// Exact test via subset DP over (visited set, endpoint) states.
/// Throws CapExceededError when vertex_count exceeds `cap`.
bool has_hamiltonian_path(const Graph& g, int cap = 20);

enum class CwKind {
    NotCw,
    Star,
    StarTriangle,
    BipartiteWithPendants,
    DisconnectedCw,
};

std::string to_string(CwKind k);

/// Decomposition data for the bipartite-core shape: a connected bipartite
/// core (X, Y), at least one pendant edge on every X vertex, and pendant
/// triangles hanging off Y vertices.
struct CwCore {
    std::vector<int> core_x;
    std::vector<int> core_y;
    std::vector<std::pair<int, int>> pendant_edges;      // (leaf, core vertex)
    std::vector<std::array<int, 3>> pendant_triangles;   // (a, b, apex)
};

struct CwClassification {
    CwKind kind = CwKind::NotCw;
    std::vector<CwKind> components;  // per component, by smallest vertex; empty when NotCw
    std::optional<CwCore> core;      // set for connected BipartiteWithPendants only

    bool is_cameron_walker() const { return kind != CwKind::NotCw; }
};

/// Classifies via the matching equality match(G) = ind-match(G) and, when it
/// holds, recognizes each component's structure (star / star triangle /
/// bipartite core with pendants). Throws std::logic_error if the two routes
/// disagree, which would mean a bug.
CwClassification classify_cameron_walker(const Graph& g);

/// Triangles with at least two vertices of degree exactly 2, listed as
/// (x, y, z) with the canonical degree-2 pair first, sorted canonically.
std::vector<std::array<int, 3>> pendant_triangles(const Graph& g);

// ---- edge-list text format ------------------------------------------------

/// Parses "u-v,u-v,..." (0-based decimal); vertex count is max index + 1, or
/// 0 for the empty string. Throws ParseError.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace sqfr
