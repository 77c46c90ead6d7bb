#include "sqfr/ideal.hpp"

#include <algorithm>

#include "sqfr/errors.hpp"

namespace sqfr {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    for (const Monomial& m : raw) {
        bool dominated = false;
        for (const Monomial& k : kept) {
            if (k.divides(m)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(m);
    }
    return kept;
}

}  // namespace

Ideal::Ideal(int n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
    if (n < 0 || n > Graph::kMaxVertices) {
        throw PreconditionError("ambient variable count out of range: " + std::to_string(n));
    }
}

Ideal Ideal::from_generators(int n, std::vector<Monomial> raw) {
    return Ideal(n, minimalize(std::move(raw)));
}

bool Ideal::contains_monomial(const Monomial& m) const {
    for (const Monomial& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

Ideal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const Edge& e : g.edges()) gens.push_back(Monomial{e.mask()});
    return Ideal::from_generators(g.vertex_count(), std::move(gens));
}

Ideal squarefree_power(const Ideal& ideal, int s) {
    if (s < 1) throw PreconditionError("squarefree power requires s >= 1");
    if (ideal.is_zero() || ideal.is_unit()) return ideal;
    const auto& gens = ideal.gens();
    int m = static_cast<int>(gens.size());
    std::vector<Monomial> products;
    Monomial cur;
    auto rec = [&](auto&& self, int start, int taken) -> void {
        if (taken == s) {
            products.push_back(cur);
            return;
        }
        for (int i = start; i + (s - taken) <= m; ++i) {
            if (!cur.disjoint(gens[static_cast<std::size_t>(i)])) continue;
            Monomial save = cur;
            cur = cur.times(gens[static_cast<std::size_t>(i)]);
            self(self, i + 1, taken + 1);
            cur = save;
        }
    };
    rec(rec, 0, 0);
    return Ideal::from_generators(ideal.var_count(), std::move(products));
}

Ideal colon_by_monomial(const Ideal& ideal, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) gens.push_back(g.quotient_by(m));
    return Ideal::from_generators(ideal.var_count(), std::move(gens));
}

Ideal add_and_minimalize(const Ideal& ideal, const std::vector<Monomial>& extra) {
    std::vector<Monomial> gens = ideal.gens();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal::from_generators(ideal.var_count(), std::move(gens));
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
    if (a.var_count() != b.var_count()) {
        throw PreconditionError("ideal comparison across different ambient rings");
    }
    return a.gens() == b.gens();
}

std::string to_string(const Monomial& m) {
    if (m.support == 0) return "1";
    std::string out;
    for (int v = 0; v < 64; ++v) {
        if (m.support & (VertexSet{1} << v)) {
            if (!out.empty()) out += '*';
            out += "x" + std::to_string(v);
        }
    }
    return out;
}

std::string to_string(const Ideal& ideal) {
    if (ideal.is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
        if (i) out += ", ";
        out += to_string(ideal.gens()[i]);
    }
    return out + ")";
}

nlohmann::ordered_json ideal_to_json(const Ideal& ideal) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Monomial& g : ideal.gens()) {
        nlohmann::ordered_json supp = nlohmann::ordered_json::array();
        for (int v = 0; v < 64; ++v) {
            if (g.support & (VertexSet{1} << v)) supp.push_back(v);
        }
        arr.push_back(std::move(supp));
    }
    return arr;
}

Monomial matching_product(const Matching& m) {
    Monomial out;
    for (const Edge& e : m) out.support |= e.mask();
    return out;
}

}  // namespace sqfr
