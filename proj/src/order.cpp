#include "sqfr/order.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sqfr/errors.hpp"
#include "sqfr/even_connection.hpp"
#include "sqfr/graph6.hpp"

namespace sqfr {

namespace {

// Pairwise data shared by the ordering checker and the search: quotient
// supports, colon-membership for case (i), and single-variable flags for
// case (ii). All indices refer to the canonical generator list.
struct PairTables {
    std::vector<Monomial> gens;                 // canonical order
    std::vector<std::vector<VertexSet>> quot;   // supp(u_a) \ supp(u_b)
    std::vector<std::vector<char>> colon_ok;    // case (i) holds for (a, b)
    std::vector<std::vector<char>> var_colon;   // |quot| == 1

    explicit PairTables(const Graph& g, int s) {
        Ideal level = squarefree_power(edge_ideal(g), s);
        Ideal next = squarefree_power(edge_ideal(g), s + 1);
        gens = level.gens();
        std::size_t m = gens.size();
        quot.assign(m, std::vector<VertexSet>(m, 0));
        colon_ok.assign(m, std::vector<char>(m, 0));
        var_colon.assign(m, std::vector<char>(m, 0));
        std::vector<Ideal> colon(m);
        for (std::size_t b = 0; b < m; ++b) {
            colon[b] = colon_by_monomial(next, gens[b]);
        }
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                if (a == b) continue;
                VertexSet q = gens[a].support & ~gens[b].support;
                quot[a][b] = q;
                colon_ok[a][b] = colon[b].contains_monomial(Monomial{q});
                var_colon[a][b] = std::popcount(q) == 1;
            }
        }
    }
};

void require_s_range(const Graph& g, int s) {
    int match = matching_number(g);
    if (s < 1 || s > match - 1) {
        throw PreconditionError("admissible orderings need 1 <= s <= match-1; got s = " +
                                std::to_string(s) + ", match = " + std::to_string(match));
    }
}

// Justification for pair (j, i) of `order` (positions), preferring case (i),
// then the smallest r < i whose quotient is a single variable dividing ours.
std::optional<PairJustification> justify(const PairTables& t, const std::vector<int>& order,
                                         int j, int i) {
    int a = order[static_cast<std::size_t>(j)];
    int b = order[static_cast<std::size_t>(i)];
    PairJustification out;
    out.j = j;
    out.i = i;
    if (t.colon_ok[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
        out.colon_containment = true;
        return out;
    }
    for (int r = 0; r < i; ++r) {
        int c = order[static_cast<std::size_t>(r)];
        if (c == b) continue;
        if (!t.var_colon[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) continue;
        VertexSet var = t.quot[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
        if (t.quot[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] & var) {
            out.colon_containment = false;
            out.r = r;
            out.var = std::countr_zero(var);
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace

OrderCheck verify_order(const Graph& g, int s, const std::vector<Monomial>& ordering) {
    require_s_range(g, s);
    PairTables tables(g, s);
    std::vector<Monomial> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != tables.gens) {
        throw PreconditionError("ordering is not a permutation of the level-s generators");
    }
    std::vector<int> order;
    for (const Monomial& u : ordering) {
        order.push_back(static_cast<int>(
            std::lower_bound(tables.gens.begin(), tables.gens.end(), u) - tables.gens.begin()));
    }
    OrderCheck out;
    OrderCertificate cert;
    cert.s = s;
    cert.ordering = ordering;
    int m = static_cast<int>(order.size());
    for (int i = 1; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            auto just = justify(tables, order, j, i);
            if (!just) {
                out.violation = std::make_pair(j, i);
                return out;
            }
            cert.pairs.push_back(*just);
        }
    }
    out.certificate = std::move(cert);
    return out;
}

OrderCertificate find_admissible_order(const Graph& g, int s) {
    require_s_range(g, s);
    PairTables tables(g, s);
    int m = static_cast<int>(tables.gens.size());
    std::vector<int> order;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    auto extend = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == m) return true;
        int i = static_cast<int>(order.size());
        for (int cand = 0; cand < m; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            order.push_back(cand);
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                ok = justify(tables, order, j, i).has_value();
            }
            if (ok) {
                used[static_cast<std::size_t>(cand)] = 1;
                if (self(self)) return true;
                used[static_cast<std::size_t>(cand)] = 0;
            }
            order.pop_back();
        }
        return false;
    };
    if (!extend(extend)) {
        throw TheoremViolationError("no admissible ordering found for s = " + std::to_string(s) +
                                    " on " + to_graph6(g));
    }
    OrderCertificate cert;
    cert.s = s;
    for (int idx : order) cert.ordering.push_back(tables.gens[static_cast<std::size_t>(idx)]);
    for (int i = 1; i < m; ++i) {
        for (int j = 0; j < i; ++j) {
            cert.pairs.push_back(*justify(tables, order, j, i));
        }
    }
    return cert;
}

nlohmann::ordered_json certificate_to_json(const OrderCertificate& cert) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["s"] = cert.s;
    auto names = nlohmann::ordered_json::array();
    for (const Monomial& u : cert.ordering) names.push_back(to_string(u));
    j["ordering"] = std::move(names);
    auto pairs = nlohmann::ordered_json::array();
    for (const PairJustification& pj : cert.pairs) {
        nlohmann::ordered_json e;
        e["j"] = pj.j;
        e["i"] = pj.i;
        e["case"] = pj.colon_containment ? "i" : "ii";
        if (!pj.colon_containment) {
            e["r"] = pj.r;
            e["var"] = pj.var;
        }
        pairs.push_back(std::move(e));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

Report check_regcol_bound(const Graph& g, int s, RegEngine& engine) {
    require_s_range(g, s);
    Report rep;
    rep.graph6 = to_graph6(g);
    rep.check = "regcol";
    rep.s = s;
    Ideal level = squarefree_power(edge_ideal(g), s);
    Ideal next = squarefree_power(edge_ideal(g), s + 1);
    int left = engine.reg(next);
    int reg_level = engine.reg(level);

    // one representative matching per generator support
    std::map<VertexSet, Matching> rep_matching;
    for (const Matching& m : enumerate_matchings(g, s)) {
        rep_matching.emplace(matching_product(m).support, m);
    }
    int max_colon = 0;
    for (const Monomial& u : level.gens()) {
        ColonGraph h = colon_graph(g, rep_matching.at(u.support));
        max_colon = std::max(max_colon, engine.reg(edge_ideal(h.graph)));
    }
    int right = std::max(max_colon + 2 * s, reg_level);
    rep.computed["left"] = left;
    rep.computed["right"] = right;
    rep.computed["max_colon_reg"] = max_colon;
    rep.computed["reg_level_s"] = reg_level;
    rep.computed["slack"] = right - left;
    rep.verdict = left <= right ? Verdict::Pass : Verdict::Fail;
    if (rep.verdict == Verdict::Fail) {
        rep.witness = nlohmann::ordered_json{{"left", left}, {"right", right}};
    }
    return rep;
}

Report check_regcol_bound(const Graph& g, int s, std::int64_t p, int cap) {
    RegEngine engine(p, cap);
    return check_regcol_bound(g, s, engine);
}

}  // namespace sqfr
