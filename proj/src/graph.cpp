#include "sqfr/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <unordered_map>

#include "sqfr/errors.hpp"

namespace sqfr {

namespace {

int lowest_bit(VertexSet m) { return std::countr_zero(m); }

template <typename F>
void for_each_vertex(VertexSet m, F&& f) {
    while (m) {
        f(lowest_bit(m));
        m &= m - 1;
    }
}

}  // namespace

// ---- Graph -----------------------------------------------------------------

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) {
        throw PreconditionError("vertex count out of range 0..32: " + std::to_string(n));
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex out of range: " + std::to_string(v));
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= vbit(v);
    adj_[static_cast<std::size_t>(v)] |= vbit(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] & vbit(v)) != 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[static_cast<std::size_t>(v)]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~((vbit(u) << 1) - 1),
                        [&](int v) { out.emplace_back(u, v); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Graph::without_vertices(VertexSet drop) const {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) {
        if (drop & vbit(v)) continue;
        h.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)] & ~drop;
    }
    return h;
}

// ---- matchings -------------------------------------------------------------

bool is_matching(const Graph& g, const Matching& m) {
    VertexSet used = 0;
    for (const Edge& e : m) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (used & e.mask()) return false;
        used |= e.mask();
    }
    return true;
}

namespace {

// Exact maximum matching by vertex branching, memoized on the remaining set.
struct MatchingSolver {
    const Graph& g;
    std::unordered_map<VertexSet, int> memo;

    explicit MatchingSolver(const Graph& graph) : g(graph) {}

    int solve(VertexSet avail) {
        int v = -1;
        for (VertexSet m = avail; m; m &= m - 1) {
            int c = lowest_bit(m);
            if (g.neighbors(c) & avail) {
                v = c;
                break;
            }
        }
        if (v < 0) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int cap = std::popcount(avail) / 2;
        int best = 0;
        for (VertexSet m = g.neighbors(v) & avail; m && best < cap; m &= m - 1) {
            int u = lowest_bit(m);
            best = std::max(best, 1 + solve(avail & ~vbit(v) & ~vbit(u)));
        }
        if (best < cap) best = std::max(best, solve(avail & ~vbit(v)));
        memo.emplace(avail, best);
        return best;
    }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
    MatchingSolver solver(g);
    Matching out;
    VertexSet avail = g.vertex_mask();
    while (true) {
        int v = -1;
        for (VertexSet m = avail; m; m &= m - 1) {
            int c = lowest_bit(m);
            if (g.neighbors(c) & avail) {
                v = c;
                break;
            }
        }
        if (v < 0) break;
        int target = solver.solve(avail);
        if (solver.solve(avail & ~vbit(v)) == target) {
            avail &= ~vbit(v);
            continue;
        }
        for (VertexSet m = g.neighbors(v) & avail; m; m &= m - 1) {
            int u = lowest_bit(m);
            if (1 + solver.solve(avail & ~vbit(v) & ~vbit(u)) == target) {
                out.emplace_back(v, u);
                avail &= ~(vbit(v) | vbit(u));
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

namespace {

// Two edges are compatible in an induced matching iff they are disjoint and
// no edge of g joins their endpoints.
bool induced_compatible(const Graph& g, const Edge& a, const Edge& b) {
    if (a.mask() & b.mask()) return false;
    for (int x : {a.u, a.v}) {
        for (int y : {b.u, b.v}) {
            if (g.has_edge(x, y)) return false;
        }
    }
    return true;
}

struct InducedSolver {
    std::vector<std::vector<int>> compat;  // compat[i] = sorted compatible indices > any
    std::vector<char> alive;
    std::vector<int> chosen, best;
    int m = 0;

    void run(int start, int alive_count) {
        if (static_cast<int>(chosen.size()) + alive_count <= static_cast<int>(best.size()))
            return;
        int i = start;
        while (i < m && !alive[static_cast<std::size_t>(i)]) ++i;
        if (i >= m) {
            if (chosen.size() > best.size()) best = chosen;
            return;
        }
        // include i
        std::vector<int> killed;
        for (int j = i; j < m; ++j) {
            if (alive[static_cast<std::size_t>(j)] &&
                (j == i || !std::binary_search(compat[static_cast<std::size_t>(i)].begin(),
                                               compat[static_cast<std::size_t>(i)].end(), j))) {
                alive[static_cast<std::size_t>(j)] = 0;
                killed.push_back(j);
            }
        }
        chosen.push_back(i);
        run(i + 1, alive_count - static_cast<int>(killed.size()));
        chosen.pop_back();
        for (int j : killed) alive[static_cast<std::size_t>(j)] = 1;
        // exclude i
        alive[static_cast<std::size_t>(i)] = 0;
        run(i + 1, alive_count - 1);
        alive[static_cast<std::size_t>(i)] = 1;
    }
};

}  // namespace

Matching maximum_induced_matching(const Graph& g) {
    std::vector<Edge> es = g.edges();
    int m = static_cast<int>(es.size());
    if (m == 0) return {};
    InducedSolver s;
    s.m = m;
    s.compat.assign(static_cast<std::size_t>(m), {});
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j && induced_compatible(g, es[static_cast<std::size_t>(i)],
                                             es[static_cast<std::size_t>(j)])) {
                s.compat[static_cast<std::size_t>(i)].push_back(j);
            }
        }
    }
    s.alive.assign(static_cast<std::size_t>(m), 1);
    s.run(0, m);
    Matching out;
    for (int i : s.best) out.push_back(es[static_cast<std::size_t>(i)]);
    std::sort(out.begin(), out.end());
    return out;
}

int induced_matching_number(const Graph& g) {
    return static_cast<int>(maximum_induced_matching(g).size());
}

std::vector<Matching> enumerate_matchings(const Graph& g, int s) {
    if (s < 0) throw PreconditionError("matching size must be nonnegative");
    std::vector<Matching> out;
    if (s == 0) {
        out.push_back({});
        return out;
    }
    std::vector<Edge> es = g.edges();
    int m = static_cast<int>(es.size());
    Matching cur;
    auto rec = [&](auto&& self, int start, VertexSet used) -> void {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        int need = s - static_cast<int>(cur.size());
        for (int i = start; i + need <= m; ++i) {
            if (es[static_cast<std::size_t>(i)].mask() & used) continue;
            cur.push_back(es[static_cast<std::size_t>(i)]);
            self(self, i + 1, used | es[static_cast<std::size_t>(i)].mask());
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// ---- graph classes ---------------------------------------------------------

namespace {

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen & vbit(v)) continue;
        VertexSet comp = vbit(v);
        VertexSet frontier = vbit(v);
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int x) { next |= g.neighbors(x); });
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

}  // namespace

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> queue = {start};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for_each_vertex(g.neighbors(x), [&](int y) {
                if (color[static_cast<std::size_t>(y)] == -1) {
                    color[static_cast<std::size_t>(y)] = 1 - color[static_cast<std::size_t>(x)];
                    queue.push_back(y);
                }
            });
        }
    }
    std::vector<int> xs, ys;
    for (int v = 0; v < n; ++v) {
        bool odd = false;
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) odd = true;
        });
        if (odd) return std::nullopt;
        (color[static_cast<std::size_t>(v)] == 0 ? xs : ys).push_back(v);
    }
    return std::make_pair(xs, ys);
}

namespace {

// Bron-Kerbosch with pivoting over the complement graph: reports maximal
// independent sets of g. Returns false from the callback to stop early.
template <typename F>
bool maximal_independent_sets(const Graph& g, F&& report) {
    int n = g.vertex_count();
    std::vector<VertexSet> non(static_cast<std::size_t>(n));
    VertexSet full = g.vertex_mask();
    for (int v = 0; v < n; ++v) {
        non[static_cast<std::size_t>(v)] = full & ~g.neighbors(v) & ~vbit(v);
    }
    auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> bool {
        if (!p && !x) return report(r);
        VertexSet px = p | x;
        int pivot = lowest_bit(px);
        int best = -1;
        for_each_vertex(px, [&](int u) {
            int cnt = std::popcount(p & non[static_cast<std::size_t>(u)]);
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        });
        VertexSet cand = p & ~non[static_cast<std::size_t>(pivot)];
        while (cand) {
            int v = lowest_bit(cand);
            cand &= cand - 1;
            if (!self(self, r | vbit(v), p & non[static_cast<std::size_t>(v)],
                      x & non[static_cast<std::size_t>(v)]))
                return false;
            p &= ~vbit(v);
            x |= vbit(v);
        }
        return true;
    };
    if (n == 0) return report(0);
    return bk(bk, 0, full, 0);
}

}  // namespace

bool is_very_well_covered(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || n % 2 != 0) return false;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) return false;
    }
    bool ok = true;
    maximal_independent_sets(g, [&](VertexSet s) {
        if (std::popcount(s) != n / 2) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool has_hamiltonian_path(const Graph& g, int cap) {
    int n = g.vertex_count();
    if (n > cap) {
        throw CapExceededError("hamiltonian path DP capped at " + std::to_string(cap) +
                               " vertices, got " + std::to_string(n));
    }
    if (n <= 1) return true;
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) dp[vbit(v)] = static_cast<std::uint32_t>(vbit(v));
    VertexSet full = g.vertex_mask();
    for (VertexSet mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        if (!ends) continue;
        if (mask == full) return true;
        for (int v = 0; v < n; ++v) {
            if (mask & vbit(v)) continue;
            if (ends & g.neighbors(v)) {
                dp[mask | vbit(v)] |= static_cast<std::uint32_t>(vbit(v));
            }
        }
    }
    return false;
}

// ---- Cameron-Walker recognition --------------------------------------------

std::string to_string(CwKind k) {
    switch (k) {
        case CwKind::NotCw: return "not-CW";
        case CwKind::Star: return "star";
        case CwKind::StarTriangle: return "star-triangle";
        case CwKind::BipartiteWithPendants: return "bipartite-with-pendants";
        case CwKind::DisconnectedCw: return "disconnected-CW";
    }
    return "?";
}

namespace {

bool is_star_component(const Graph& g, VertexSet comp) {
    int size = std::popcount(comp);
    if (size == 1) return true;
    int max_deg = 0, edges2 = 0;
    for_each_vertex(comp, [&](int v) {
        int d = g.degree(v);
        max_deg = std::max(max_deg, d);
        edges2 += d;
    });
    return max_deg == size - 1 && edges2 == 2 * (size - 1);
}

bool is_star_triangle_component(const Graph& g, VertexSet comp) {
    int size = std::popcount(comp);
    if (size < 3 || size % 2 == 0) return false;
    std::vector<int> apex_candidates;
    for_each_vertex(comp, [&](int v) {
        if (size == 3 || g.degree(v) > 2) apex_candidates.push_back(v);
    });
    for (int a : apex_candidates) {
        if (g.degree(a) != size - 1) continue;
        bool ok = true;
        for_each_vertex(comp & ~vbit(a), [&](int v) {
            if (!ok) return;
            VertexSet nb = g.neighbors(v);
            if (std::popcount(nb) != 2 || !(nb & vbit(a))) {
                ok = false;
                return;
            }
            int w = lowest_bit(nb & ~vbit(a));
            if (w == a || !(g.neighbors(w) & vbit(v))) ok = false;
        });
        if (ok) return true;
    }
    return false;
}

std::vector<std::array<int, 3>> triangles_in(const Graph& g, VertexSet within) {
    std::vector<std::array<int, 3>> out;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        if (!(within & vbit(a))) continue;
        for (int b = a + 1; b < n; ++b) {
            if (!(within & vbit(b)) || !g.has_edge(a, b)) continue;
            VertexSet common = g.neighbors(a) & g.neighbors(b) & within;
            for_each_vertex(common & ~((vbit(b) << 1) - 1),
                            [&](int c) { out.push_back({a, b, c}); });
        }
    }
    return out;
}

std::optional<CwCore> recognize_bipartite_core(const Graph& g, VertexSet comp) {
    CwCore core;
    VertexSet pair_vertices = 0;
    VertexSet apexes = 0;
    for (const auto& tri : triangles_in(g, comp)) {
        std::vector<int> deg2;
        int other = -1;
        for (int v : tri) {
            if (g.degree(v) == 2) deg2.push_back(v);
            else other = v;
        }
        if (deg2.size() < 2 || other < 0) return std::nullopt;
        if (pair_vertices & (vbit(deg2[0]) | vbit(deg2[1]))) return std::nullopt;
        pair_vertices |= vbit(deg2[0]) | vbit(deg2[1]);
        apexes |= vbit(other);
        core.pendant_triangles.push_back({deg2[0], deg2[1], other});
    }
    if (apexes & pair_vertices) return std::nullopt;

    VertexSet g1 = comp & ~pair_vertices;
    VertexSet leaves = 0;
    bool bad = false;
    for_each_vertex(g1, [&](int v) {
        int d = std::popcount(g.neighbors(v) & g1);
        if (d == 0) bad = true;  // would have been a star / star triangle
        if (d == 1 && !(apexes & vbit(v))) leaves |= vbit(v);
    });
    if (bad) return std::nullopt;

    VertexSet hmask = g1 & ~leaves;
    if (!hmask) return std::nullopt;
    for_each_vertex(leaves, [&](int leaf) {
        VertexSet nb = g.neighbors(leaf) & g1;
        if (!(nb & hmask)) bad = true;  // leaf hanging off another leaf
        else core.pendant_edges.emplace_back(leaf, lowest_bit(nb & hmask));
    });
    if (bad) return std::nullopt;

    // H must be connected and bipartite.
    Graph h = g.without_vertices(~hmask);
    std::vector<VertexSet> hcomps;
    for (VertexSet c : connected_components(h)) {
        if (std::popcount(c & hmask) > 0 && (c & hmask) != c) return std::nullopt;
        if (c & hmask) hcomps.push_back(c);
    }
    if (hcomps.size() != 1) return std::nullopt;
    auto parts = bipartition(h);
    if (!parts) return std::nullopt;
    VertexSet a = 0, b = 0;
    for (int v : parts->first)
        if (hmask & vbit(v)) a |= vbit(v);
    for (int v : parts->second)
        if (hmask & vbit(v)) b |= vbit(v);

    VertexSet leafed = 0;
    for (const auto& [leaf, anchor] : core.pendant_edges) leafed |= vbit(anchor);
    for (VertexSet x : {a, b}) {
        VertexSet y = (x == a) ? b : a;
        if ((x & leafed) == x && (leafed & y) == 0 && (apexes & x) == 0 && (apexes | y) == y) {
            for_each_vertex(x, [&](int v) { core.core_x.push_back(v); });
            for_each_vertex(y, [&](int v) { core.core_y.push_back(v); });
            return core;
        }
    }
    return std::nullopt;
}

CwKind classify_component(const Graph& g, VertexSet comp, std::optional<CwCore>* core_out) {
    if (is_star_component(g, comp)) return CwKind::Star;
    if (is_star_triangle_component(g, comp)) return CwKind::StarTriangle;
    if (auto core = recognize_bipartite_core(g, comp)) {
        if (core_out) *core_out = std::move(core);
        return CwKind::BipartiteWithPendants;
    }
    return CwKind::NotCw;
}

}  // namespace

CwClassification classify_cameron_walker(const Graph& g) {
    CwClassification out;
    bool definitional = matching_number(g) == induced_matching_number(g);
    std::vector<VertexSet> comps = connected_components(g);
    bool structural = true;
    std::vector<CwKind> kinds;
    std::optional<CwCore> core;
    for (VertexSet c : comps) {
        std::optional<CwCore> comp_core;
        CwKind k = classify_component(g, c, &comp_core);
        kinds.push_back(k);
        if (k == CwKind::NotCw) structural = false;
        if (comps.size() == 1 && comp_core) core = std::move(comp_core);
    }
    if (definitional != structural) {
        throw std::logic_error(
            "Cameron-Walker classification mismatch between matching equality and "
            "structure recognition");
    }
    if (!definitional) {
        out.kind = CwKind::NotCw;
        return out;
    }
    out.components = std::move(kinds);
    if (comps.size() == 1) {
        out.kind = out.components[0];
        out.core = std::move(core);
    } else {
        out.kind = CwKind::DisconnectedCw;
    }
    return out;
}

std::vector<std::array<int, 3>> pendant_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const auto& tri : triangles_in(g, g.vertex_mask())) {
        std::vector<int> deg2, rest;
        for (int v : tri) {
            (g.degree(v) == 2 ? deg2 : rest).push_back(v);
        }
        if (deg2.size() < 2) continue;
        // canonical pair: the two smallest degree-2 vertices
        int x = deg2[0], y = deg2[1];
        int z = deg2.size() == 3 ? deg2[2] : rest[0];
        out.push_back({x, y, z});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- edge-list text --------------------------------------------------------

namespace {

int parse_int_strict(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("bad vertex index '" + tok + "'");
    }
    return value;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::string body = trimmed(text);
    std::vector<Edge> edges;
    int max_v = -1;
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trimmed(tok);
            std::size_t dash = tok.find('-');
            if (dash == std::string::npos) throw ParseError("edge '" + tok + "' is not 'u-v'");
            int u = parse_int_strict(tok.substr(0, dash));
            int v = parse_int_strict(tok.substr(dash + 1));
            if (u == v) throw ParseError("loop edge '" + tok + "'");
            if (u < 0 || v < 0 || u >= Graph::kMaxVertices || v >= Graph::kMaxVertices) {
                throw ParseError("vertex out of range in '" + tok + "'");
            }
            edges.emplace_back(u, v);
            max_v = std::max({max_v, u, v});
        }
    }
    Graph g(max_v + 1);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

}  // namespace sqfr
