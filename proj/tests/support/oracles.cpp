#include "support/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oracle {

namespace {

using sqfr::VertexSet;

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

// plain fraction-free-ish Gaussian elimination, written separately from the
// library's rank routines
int small_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    int rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows; ++r) {
            if (((m[r][c] % p) + p) % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
        auto& old = m[static_cast<std::size_t>(rank)];
        std::int64_t inv = pow_mod(((old[c] % p) + p) % p, p - 2, p);
        for (auto& x : old) x = ((x % p) * inv % p + p) % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            std::int64_t f = ((m[r][c] % p) + p) % p;
            if (!f) continue;
            for (std::size_t cc = 0; cc < cols; ++cc) {
                m[r][cc] = ((m[r][cc] - f * old[cc]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

bool in_ideal(const sqfr::Ideal& ideal, VertexSet mono) {
    for (const sqfr::Monomial& g : ideal.gens()) {
        if ((g.support & ~mono) == 0) return true;
    }
    return false;
}

int position_sign(VertexSet set, int v) {
    int below = std::popcount(set & ((VertexSet{1} << v) - 1));
    return below % 2 == 0 ? 1 : -1;
}

}  // namespace

std::map<std::pair<int, int>, long long> betti_of_quotient(const sqfr::Ideal& ideal,
                                                           std::int64_t p) {
    int n = ideal.var_count();
    std::map<std::pair<int, int>, long long> out;
    VertexSet full = n == 0 ? 0 : ((~VertexSet{0}) >> (64 - n));
    for (VertexSet sigma = 0;; ++sigma) {
        // Koszul complex of the variables tensored with S/I, in multidegree
        // sigma: basis e_T * x_{sigma minus T} for T with the monomial part
        // outside I.
        int size = std::popcount(sigma);
        std::vector<std::vector<VertexSet>> basis(static_cast<std::size_t>(size) + 1);
        for (VertexSet t = sigma;; t = (t - 1) & sigma) {
            if (!in_ideal(ideal, sigma & ~t)) {
                basis[static_cast<std::size_t>(std::popcount(t))].push_back(t);
            }
            if (t == 0) break;
        }
        for (auto& level : basis) std::sort(level.begin(), level.end());
        // boundary from homological degree i to i-1
        std::vector<int> ranks(static_cast<std::size_t>(size) + 2, 0);
        for (int i = 1; i <= size; ++i) {
            const auto& src = basis[static_cast<std::size_t>(i)];
            const auto& dst = basis[static_cast<std::size_t>(i - 1)];
            if (src.empty() || dst.empty()) continue;
            std::vector<std::vector<std::int64_t>> mat(
                src.size(), std::vector<std::int64_t>(dst.size(), 0));
            for (std::size_t r = 0; r < src.size(); ++r) {
                for (VertexSet m = src[r]; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    VertexSet t2 = src[r] & ~(VertexSet{1} << v);
                    if (in_ideal(ideal, (sigma & ~t2))) continue;
                    auto it = std::lower_bound(dst.begin(), dst.end(), t2);
                    mat[r][static_cast<std::size_t>(it - dst.begin())] =
                        position_sign(src[r], v);
                }
            }
            ranks[static_cast<std::size_t>(i)] = small_rank(std::move(mat), p);
        }
        for (int i = 0; i <= size; ++i) {
            long long h = static_cast<long long>(basis[static_cast<std::size_t>(i)].size()) -
                          ranks[static_cast<std::size_t>(i)] -
                          ranks[static_cast<std::size_t>(i) + 1];
            if (h > 0) out[{i, size}] += h;
        }
        if (sigma == full) break;
    }
    return out;
}

std::map<std::pair<int, int>, long long> betti_of_ideal(const sqfr::Ideal& ideal,
                                                        std::int64_t p) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [ij, count] : betti_of_quotient(ideal, p)) {
        if (ij.first >= 1) out[{ij.first - 1, ij.second}] = count;
    }
    return out;
}

int regularity_of_ideal(const sqfr::Ideal& ideal, std::int64_t p) {
    int best = 0;
    bool any = false;
    for (const auto& [ij, count] : betti_of_ideal(ideal, p)) {
        best = std::max(best, ij.second - ij.first);
        any = true;
    }
    if (!any) throw std::logic_error("oracle: no Betti numbers for a nonzero ideal");
    return best;
}

int max_matching_brute(const sqfr::Graph& g) {
    std::vector<sqfr::Edge> es = g.edges();
    auto rec = [&](auto&& self, std::size_t i, VertexSet used) -> int {
        if (i >= es.size()) return 0;
        int best = self(self, i + 1, used);
        if (!(es[i].mask() & used)) {
            best = std::max(best, 1 + self(self, i + 1, used | es[i].mask()));
        }
        return best;
    };
    return rec(rec, 0, 0);
}

int max_induced_matching_brute(const sqfr::Graph& g) {
    std::vector<sqfr::Edge> es = g.edges();
    std::size_t m = es.size();
    if (m > 22) throw std::logic_error("oracle: too many edges for subset enumeration");
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<sqfr::Edge> sel;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) sel.push_back(es[i]);
        }
        bool ok = true;
        for (std::size_t a = 0; a < sel.size() && ok; ++a) {
            for (std::size_t b = a + 1; b < sel.size() && ok; ++b) {
                if (sel[a].mask() & sel[b].mask()) ok = false;
                VertexSet quad = sel[a].mask() | sel[b].mask();
                for (const sqfr::Edge& e : es) {
                    if ((e.mask() & ~quad) == 0 && e != sel[a] && e != sel[b]) ok = false;
                }
            }
        }
        if (ok) best = std::max(best, static_cast<int>(sel.size()));
    }
    return best;
}

sqfr::Ideal squarefree_part_of_power(const sqfr::Ideal& ideal, int s) {
    int n = ideal.var_count();
    if (n > 7) throw std::logic_error("oracle: power expansion limited to n <= 7");
    // exponent vectors with entries capped at 2 (>= 2 already kills
    // divisibility into a squarefree monomial)
    auto encode = [&](const std::vector<int>& e) {
        std::uint32_t code = 0;
        for (int v = 0; v < n; ++v) code = code * 3 + static_cast<std::uint32_t>(e[static_cast<std::size_t>(v)]);
        return code;
    };
    std::vector<std::vector<int>> products = {std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int round = 0; round < s; ++round) {
        std::vector<std::vector<int>> next;
        std::vector<char> seen(2188, 0);  // 3^7 exponent codes
        for (const auto& prod : products) {
            for (const sqfr::Monomial& g : ideal.gens()) {
                std::vector<int> e = prod;
                for (int v = 0; v < n; ++v) {
                    if (g.support & (VertexSet{1} << v)) {
                        e[static_cast<std::size_t>(v)] =
                            std::min(2, e[static_cast<std::size_t>(v)] + 1);
                    }
                }
                std::uint32_t code = encode(e);
                if (!seen[code]) {
                    seen[code] = 1;
                    next.push_back(std::move(e));
                }
            }
        }
        products = std::move(next);
    }
    std::vector<sqfr::Monomial> gens;
    VertexSet full = n == 0 ? 0 : ((~VertexSet{0}) >> (64 - n));
    for (VertexSet m = 0;; ++m) {
        bool member = false;
        for (const auto& prod : products) {
            bool divides = true;
            for (int v = 0; v < n && divides; ++v) {
                int have = (m >> v) & 1;
                if (prod[static_cast<std::size_t>(v)] > have) divides = false;
            }
            if (divides) {
                member = true;
                break;
            }
        }
        if (member) gens.push_back(sqfr::Monomial{m});
        if (m == full) break;
    }
    return sqfr::Ideal::from_generators(n, std::move(gens));
}

sqfr::Graph decode_graph6(const std::string& record) {
    int n = record.at(0) - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < record.size(); ++i) {
        int b = record[i] - 63;
        for (int k = 5; k >= 0; --k) bits.push_back((b >> k) & 1);
    }
    sqfr::Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits.at(static_cast<std::size_t>(idx++))) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace oracle
