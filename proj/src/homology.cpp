#include "sqfr/homology.hpp"

#include <algorithm>
#include <bit>

namespace sqfr {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int cols) {
    int rank = 0;
    int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < cols && rank < nrows; ++col) {
        std::size_t w = static_cast<std::size_t>(col) / 64;
        std::uint64_t bit = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[static_cast<std::size_t>(r)][w] & bit) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < nrows; ++r) {
            if (r != rank && (rows[static_cast<std::size_t>(r)][w] & bit)) {
                auto& dst = rows[static_cast<std::size_t>(r)];
                const auto& src = rows[static_cast<std::size_t>(rank)];
                for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

int rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
    int rank = 0;
    int nrows = static_cast<int>(rows.size());
    int cols = nrows ? static_cast<int>(rows[0].size()) : 0;
    for (int col = 0; col < cols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        auto& prow = rows[static_cast<std::size_t>(rank)];
        std::int64_t inv = mod_inv(((prow[static_cast<std::size_t>(col)] % p) + p) % p, p);
        for (auto& x : prow) x = ((x % p) * inv % p + p) % p;
        for (int r = rank + 1; r < nrows; ++r) {
            auto& row = rows[static_cast<std::size_t>(r)];
            std::int64_t f = ((row[static_cast<std::size_t>(col)] % p) + p) % p;
            if (f == 0) continue;
            for (int c = col; c < cols; ++c) {
                row[static_cast<std::size_t>(c)] =
                    ((row[static_cast<std::size_t>(c)] - f * prow[static_cast<std::size_t>(c)]) % p +
                     p) %
                    p;
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

// rank of the boundary map from `level` (faces with t vertices) down to
// `below` (faces with t-1 vertices); both lists sorted.
int boundary_rank(const std::vector<VertexSet>& level, const std::vector<VertexSet>& below,
                  std::int64_t p) {
    if (level.empty() || below.empty()) return 0;
    int cols = static_cast<int>(below.size());
    auto col_of = [&](VertexSet f) {
        return static_cast<int>(std::lower_bound(below.begin(), below.end(), f) - below.begin());
    };
    if (p == 2) {
        std::size_t words = static_cast<std::size_t>((cols + 63) / 64);
        std::vector<std::vector<std::uint64_t>> rows(level.size(),
                                                     std::vector<std::uint64_t>(words, 0));
        for (std::size_t r = 0; r < level.size(); ++r) {
            for (VertexSet m = level[r]; m; m &= m - 1) {
                int c = col_of(level[r] & ~(m & -m));
                rows[r][static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
        return rank_gf2(std::move(rows), cols);
    }
    std::vector<std::vector<std::int64_t>> rows(level.size(),
                                                std::vector<std::int64_t>(below.size(), 0));
    for (std::size_t r = 0; r < level.size(); ++r) {
        int idx = 0;
        for (VertexSet m = level[r]; m; m &= m - 1, ++idx) {
            int c = col_of(level[r] & ~(m & -m));
            rows[r][static_cast<std::size_t>(c)] = (idx % 2 == 0) ? 1 : p - 1;
        }
    }
    return rank_mod_p(std::move(rows), p);
}

}  // namespace

std::vector<int> reduced_homology_of_faces(const std::vector<std::vector<VertexSet>>& levels,
                                           std::int64_t p) {
    std::size_t depth = levels.size();
    std::vector<int> h(depth, 0);
    if (depth == 0 || levels[0].empty()) return h;  // void complex
    std::vector<int> r(depth + 1, 0);               // r[t] = rank of boundary level t -> t-1
    for (std::size_t t = 1; t < depth; ++t) {
        r[t] = boundary_rank(levels[t], levels[t - 1], p);
    }
    for (std::size_t t = 0; t < depth; ++t) {
        h[t] = static_cast<int>(levels[t].size()) - r[t] - r[t + 1];
    }
    return h;
}

}  // namespace sqfr
