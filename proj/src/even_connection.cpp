#include "sqfr/even_connection.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

#include "sqfr/errors.hpp"
#include "sqfr/ideal.hpp"

namespace sqfr {

namespace {

// BFS state space: (vertex, per-distinct-edge consumption counts, parity).
// Parity 0 = at an even position (a free G-edge comes next), parity 1 = at an
// odd position (an e-edge comes next, or the walk may stop here).
struct StateSpace {
    const Graph& g;
    std::vector<Edge> distinct;
    std::vector<int> mult;
    std::vector<int> radix;  // mixed-radix strides over the count vector
    long long codes = 1;

    StateSpace(const Graph& graph, const std::vector<Edge>& edges) : g(graph) {
        for (const Edge& e : edges) {
            auto it = std::find(distinct.begin(), distinct.end(), e);
            if (it == distinct.end()) {
                distinct.push_back(e);
                mult.push_back(1);
            } else {
                ++mult[static_cast<std::size_t>(it - distinct.begin())];
            }
        }
        radix.resize(distinct.size());
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            radix[i] = static_cast<int>(codes);
            codes *= mult[i] + 1;
        }
        if (codes > (1 << 22)) {
            throw CapExceededError("even-connection edge multiset too large");
        }
    }

    int count(long long code, std::size_t i) const {
        return static_cast<int>(code / radix[i] % (mult[i] + 1));
    }
    long long total_consumed(long long code) const {
        long long total = 0;
        for (std::size_t i = 0; i < distinct.size(); ++i) total += count(code, i);
        return total;
    }

    long long state_id(int vertex, long long code, int parity) const {
        return (vertex * codes + code) * 2 + parity;
    }

    template <typename F>
    void transitions(long long s, F&& f) const {
        int parity = static_cast<int>(s % 2);
        long long code = (s / 2) % codes;
        int vertex = static_cast<int>(s / 2 / codes);
        if (parity == 0) {
            for (VertexSet m = g.neighbors(vertex); m; m &= m - 1) {
                f(state_id(std::countr_zero(m), code, 1));
            }
        } else {
            for (std::size_t i = 0; i < distinct.size(); ++i) {
                if (count(code, i) >= mult[i]) continue;
                const Edge& e = distinct[i];
                if (vertex != e.u && vertex != e.v) continue;
                int other = vertex == e.u ? e.v : e.u;
                f(state_id(other, code + radix[i], 0));
            }
        }
    }
};

}  // namespace

std::optional<WitnessPath> even_connection_witness(const Graph& g,
                                                   const std::vector<Edge>& edges, int u,
                                                   int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) {
        throw PreconditionError("even-connection endpoints out of range");
    }
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) {
            throw PreconditionError("even-connection edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v) + " is not an edge of the graph");
        }
    }
    if (edges.empty()) return std::nullopt;  // at least one e-edge is required

    StateSpace space(g, edges);
    long long start = space.state_id(u, 0, 0);

    // forward reachability
    std::unordered_map<long long, int> dist_f;
    std::deque<long long> queue = {start};
    dist_f[start] = 0;
    while (!queue.empty()) {
        long long s = queue.front();
        queue.pop_front();
        space.transitions(s, [&](long long t) {
            if (dist_f.emplace(t, dist_f[s] + 1).second) queue.push_back(t);
        });
    }

    // backward distances to the nearest accepting state over reachable states
    std::unordered_map<long long, std::vector<long long>> rev;
    std::unordered_map<long long, int> dist_b;
    for (const auto& entry : dist_f) {
        long long s = entry.first;
        space.transitions(s, [&](long long t) {
            if (dist_f.count(t)) rev[t].push_back(s);
        });
        int parity = static_cast<int>(s % 2);
        int vertex = static_cast<int>(s / 2 / space.codes);
        long long code = (s / 2) % space.codes;
        if (parity == 1 && vertex == v && space.total_consumed(code) >= 1) {
            dist_b[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        long long s = queue.front();
        queue.pop_front();
        for (long long t : rev[s]) {
            if (dist_b.emplace(t, dist_b[s] + 1).second) queue.push_back(t);
        }
    }
    auto it = dist_b.find(start);
    if (it == dist_b.end()) return std::nullopt;

    // walk forward greedily: step to the smallest next vertex that stays on a
    // shortest path, recording consumed e-edges
    WitnessPath w;
    w.vertices.push_back(u);
    std::vector<int> used_of_distinct(space.distinct.size(), 0);
    long long cur = start;
    while (dist_b.at(cur) > 0) {
        long long best_next = -1;
        int best_vertex = -1;
        std::size_t best_edge = space.distinct.size();
        int parity = static_cast<int>(cur % 2);
        long long code = (cur / 2) % space.codes;
        space.transitions(cur, [&](long long t) {
            auto jt = dist_b.find(t);
            if (jt == dist_b.end() || jt->second != dist_b.at(cur) - 1) return;
            int tv = static_cast<int>(t / 2 / space.codes);
            if (best_next < 0 || tv < best_vertex) {
                best_next = t;
                best_vertex = tv;
            }
        });
        if (parity == 1) {
            long long next_code = (best_next / 2) % space.codes;
            for (std::size_t i = 0; i < space.distinct.size(); ++i) {
                if (space.count(next_code, i) != space.count(code, i)) {
                    best_edge = i;
                    break;
                }
            }
            // assignment index: next unused original index carrying this edge
            int seen = 0;
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (edges[j] == space.distinct[best_edge]) {
                    if (seen == used_of_distinct[best_edge]) {
                        w.edge_assignment.push_back(static_cast<int>(j));
                        break;
                    }
                    ++seen;
                }
            }
            ++used_of_distinct[best_edge];
        }
        w.vertices.push_back(best_vertex);
        cur = best_next;
    }
    return w;
}

bool witness_is_valid(const Graph& g, const std::vector<Edge>& edges, int u, int v,
                      const WitnessPath& w) {
    const auto& p = w.vertices;
    if (p.size() < 4 || p.size() % 2 != 0) return false;
    std::size_t r = p.size() / 2 - 1;
    if (p.front() != u || p.back() != v) return false;                      // (i)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (!g.has_edge(p[i], p[i + 1])) return false;                      // (ii)
    }
    if (w.edge_assignment.size() != r) return false;
    for (std::size_t k = 0; k < r; ++k) {                                   // (iii)
        int idx = w.edge_assignment[k];
        if (idx < 0 || idx >= static_cast<int>(edges.size())) return false;
        if (Edge(p[2 * k + 1], p[2 * k + 2]) != edges[static_cast<std::size_t>(idx)]) {
            return false;
        }
    }
    for (const Edge& e : edges) {                                           // (iv)
        std::size_t walk_count = 0, list_count = 0;
        for (std::size_t k = 0; k < r; ++k) {
            if (Edge(p[2 * k + 1], p[2 * k + 2]) == e) ++walk_count;
        }
        for (const Edge& f : edges) {
            if (f == e) ++list_count;
        }
        if (walk_count > list_count) return false;
    }
    return true;
}

ColonGraph colon_graph(const Graph& g, const Matching& m) {
    if (!is_matching(g, m)) throw PreconditionError("not a matching of the graph");
    int s = static_cast<int>(m.size());
    int match = matching_number(g);
    if (s < 1 || s > match - 1) {
        throw PreconditionError("colon graph needs 1 <= |m| <= match-1; got |m| = " +
                                std::to_string(s) + ", match = " + std::to_string(match));
    }
    VertexSet supp = matching_product(m).support;
    ColonGraph out{Graph(g.vertex_count()), {}, {}};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!(supp & vbit(v))) out.vertices.push_back(v);
    }
    for (std::size_t a = 0; a < out.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < out.vertices.size(); ++b) {
            int x = out.vertices[a], y = out.vertices[b];
            if (g.has_edge(x, y)) {
                out.graph.add_edge(x, y);
            } else if (auto w = even_connection_witness(g, m, x, y)) {
                out.graph.add_edge(x, y);
                out.witnesses.emplace(std::make_pair(x, y), std::move(*w));
            }
        }
    }
    return out;
}

nlohmann::ordered_json colon_graph_report(const ColonGraph& h) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["vertices"] = h.vertices;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : h.graph.edges()) {
        edges.push_back(nlohmann::ordered_json::array({e.u, e.v}));
    }
    j["edges"] = std::move(edges);
    auto wit = nlohmann::ordered_json::object();
    for (const auto& [key, w] : h.witnesses) {
        wit[std::to_string(key.first) + "-" + std::to_string(key.second)] = w.vertices;
    }
    j["witnesses"] = std::move(wit);
    return j;
}

std::vector<Edge> parse_edge_pairs(const std::string& text) {
    Graph g = parse_edge_list(text);
    return g.edges();
}

}  // namespace sqfr
