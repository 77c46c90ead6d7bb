#include "sqfr/regularity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sqfr/errors.hpp"
#include "sqfr/homology.hpp"

namespace sqfr {

int BettiTable::regularity() const {
    int best = 0;
    for (const auto& [ij, count] : entries) best = std::max(best, ij.second - ij.first);
    return best;
}

nlohmann::ordered_json BettiTable::to_json() const {
    nlohmann::ordered_json j;
    j["prime"] = prime;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [ij, count] : entries) {
        arr.push_back(nlohmann::ordered_json::array({ij.first, ij.second, count}));
    }
    j["entries"] = std::move(arr);
    return j;
}

namespace {

void require_prime(std::int64_t p) {
    if (!is_prime(p)) throw PreconditionError("field characteristic must be prime");
}

// Generators remapped onto the compact index set of variables that occur in
// them (cone points contribute no homology), plus a table marking which
// subsets contain a generator support.
struct Scan {
    int k = 0;
    std::vector<VertexSet> gens;
    std::vector<char> contains_gen;  // size 2^k

    bool is_face(VertexSet sub) const { return !contains_gen[sub]; }
    VertexSet universe() const { return k == 0 ? 0 : ((~VertexSet{0}) >> (64 - k)); }
};

Scan build_scan(const Ideal& ideal, int cap) {
    VertexSet occupied = 0;
    for (const Monomial& g : ideal.gens()) occupied |= g.support;
    int k = std::popcount(occupied);
    if (k > cap) {
        throw CapExceededError("ideal touches " + std::to_string(k) + " variables, cap is " +
                               std::to_string(cap));
    }
    std::vector<int> remap(64, -1);
    int next = 0;
    for (int v = 0; v < 64; ++v) {
        if (occupied & (VertexSet{1} << v)) remap[static_cast<std::size_t>(v)] = next++;
    }
    Scan scan;
    scan.k = k;
    for (const Monomial& g : ideal.gens()) {
        VertexSet m = 0;
        for (int v = 0; v < 64; ++v) {
            if (g.support & (VertexSet{1} << v)) {
                m |= VertexSet{1} << remap[static_cast<std::size_t>(v)];
            }
        }
        scan.gens.push_back(m);
    }
    scan.contains_gen.assign(std::size_t{1} << k, 0);
    for (VertexSet g : scan.gens) scan.contains_gen[g] = 1;
    for (VertexSet mask = 0; mask < (VertexSet{1} << k); ++mask) {
        if (scan.contains_gen[mask]) continue;
        for (VertexSet m = mask; m; m &= m - 1) {
            if (scan.contains_gen[mask & ~(m & -m)]) {
                scan.contains_gen[mask] = 1;
                break;
            }
        }
    }
    return scan;
}

std::vector<std::vector<VertexSet>> faces_of(const Scan& scan, VertexSet sigma) {
    std::vector<std::vector<VertexSet>> levels(
        static_cast<std::size_t>(std::popcount(sigma)) + 1);
    VertexSet sub = sigma;
    while (true) {
        if (scan.is_face(sub)) {
            levels[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
        }
        if (sub == 0) break;
        sub = (sub - 1) & sigma;
    }
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    for (auto& level : levels) std::sort(level.begin(), level.end());
    return levels;
}

}  // namespace

std::vector<int> reduced_homology_ranks(const Ideal& ideal, VertexSet sigma, std::int64_t p,
                                        int cap) {
    require_prime(p);
    int size = std::popcount(sigma);
    if (size > cap) {
        throw CapExceededError("sigma has " + std::to_string(size) + " vertices, cap is " +
                               std::to_string(cap));
    }
    std::vector<std::vector<VertexSet>> levels(static_cast<std::size_t>(size) + 1);
    VertexSet sub = sigma;
    while (true) {
        bool face = true;
        for (const Monomial& g : ideal.gens()) {
            if ((g.support & ~sub) == 0) {
                face = false;
                break;
            }
        }
        if (face) levels[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & sigma;
    }
    for (auto& level : levels) std::sort(level.begin(), level.end());
    std::vector<int> h = reduced_homology_of_faces(levels, p);
    h.resize(static_cast<std::size_t>(size) + 1, 0);
    return h;
}

int regularity(const Ideal& ideal, std::int64_t p, int cap) {
    require_prime(p);
    if (ideal.is_zero()) throw PreconditionError("regularity of the zero ideal is undefined");
    if (ideal.is_unit()) throw PreconditionError("regularity of the unit ideal is undefined");
    Scan scan = build_scan(ideal, cap);
    VertexSet full = scan.universe();
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(scan.k) + 1);
    VertexSet sigma = 0;
    while (true) {
        by_size[static_cast<std::size_t>(std::popcount(sigma))].push_back(sigma);
        if (sigma == full) break;
        ++sigma;
    }
    int best = -3;
    for (int size = scan.k; size >= 0; --size) {
        if (size - 2 <= best) break;  // smaller sigma cannot raise the top degree
        for (VertexSet s : by_size[static_cast<std::size_t>(size)]) {
            if (scan.is_face(s)) continue;  // full simplex, acyclic
            std::vector<int> h = reduced_homology_of_faces(faces_of(scan, s), p);
            for (int t = static_cast<int>(h.size()) - 1; t >= 0; --t) {
                if (h[static_cast<std::size_t>(t)] > 0) {
                    best = std::max(best, t - 1);
                    break;
                }
            }
        }
    }
    if (best < -1) throw std::logic_error("no homology found for a nonzero proper ideal");
    return best + 2;
}

BettiTable betti_table(const Ideal& ideal, std::int64_t p, int cap) {
    require_prime(p);
    if (ideal.is_zero()) throw PreconditionError("Betti table of the zero ideal is undefined");
    if (ideal.is_unit()) throw PreconditionError("Betti table of the unit ideal is undefined");
    Scan scan = build_scan(ideal, cap);
    BettiTable table;
    table.prime = p;
    VertexSet full = scan.universe();
    VertexSet sigma = 0;
    while (true) {
        if (!scan.is_face(sigma)) {
            std::vector<int> h = reduced_homology_of_faces(faces_of(scan, sigma), p);
            int j = std::popcount(sigma);
            for (std::size_t t = 0; t < h.size(); ++t) {
                if (h[t] <= 0) continue;
                int i = j - static_cast<int>(t) - 1;  // homological index for d = t - 1
                if (i >= 0) table.entries[{i, j}] += h[t];
            }
        }
        if (sigma == full) break;
        ++sigma;
    }
    return table;
}

bool has_linear_resolution(const Ideal& ideal, std::int64_t p, int cap) {
    if (ideal.is_zero()) {
        throw PreconditionError("linear resolution of the zero ideal is undefined");
    }
    int d = ideal.gens()[0].degree();
    for (const Monomial& g : ideal.gens()) {
        if (g.degree() != d) throw PreconditionError("ideal has generators of mixed degrees");
    }
    return regularity(ideal, p, cap) == d;
}

RegEngine::RegEngine(std::int64_t p, int cap) : p_(p), cap_(cap) { require_prime(p); }

int RegEngine::reg(const Ideal& ideal) {
    std::string key;
    key.reserve(ideal.gens().size() * 8);
    for (const Monomial& g : ideal.gens()) {
        for (int b = 0; b < 8; ++b) {
            key.push_back(static_cast<char>((g.support >> (8 * b)) & 0xff));
        }
    }
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    int value = regularity(ideal, p_, cap_);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), value);
    return value;
}

}  // namespace sqfr
