#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqfr/ideal.hpp"

namespace sqfr {

/// Practical cap on the number of variables that actually occur in the ideal:
/// the induced-subcomplex scan enumerates 3^k (subset, face) pairs.
inline constexpr int kDefaultRegularityCap = 14;

/// Sparse table of graded Betti numbers beta_{i,j} of an ideal over GF(p).
struct BettiTable {
    std::int64_t prime = 2;
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> count >= 1

    int regularity() const;  // max j - i over nonzero entries
    nlohmann::ordered_json to_json() const;
    bool operator==(const BettiTable&) const = default;
};

/// Exact dimensions over GF(p) of the reduced homology of the Stanley-Reisner
/// complex of `ideal` restricted to `sigma`; entry t is dim H~_{t-1}, for
/// t = 0 .. |sigma|. Throws CapExceededError when |sigma| > cap.
std::vector<int> reduced_homology_ranks(const Ideal& ideal, VertexSet sigma, std::int64_t p,
                                        int cap = kDefaultRegularityCap);

/// reg(I) = reg(S/I) + 1, computed as 2 + max{ d : some induced subcomplex has
/// nonvanishing H~_d over GF(p) }. Requires a nonzero proper ideal; the cap
/// applies to the number of variables occurring in the generators.
int regularity(const Ideal& ideal, std::int64_t p, int cap = kDefaultRegularityCap);

/// Full graded Betti table of the ideal (not of S/I):
/// beta_{i,j}(I) = sum over |sigma| = j of dim H~_{j-i-2}.
BettiTable betti_table(const Ideal& ideal, std::int64_t p, int cap = kDefaultRegularityCap);

/// For an ideal generated in a single degree d: true iff reg(I) = d.
/// Throws PreconditionError on mixed generator degrees or the zero ideal.
bool has_linear_resolution(const Ideal& ideal, std::int64_t p,
                           int cap = kDefaultRegularityCap);

/// Memoizing regularity evaluator over a fixed prime; safe for concurrent use.
class RegEngine {
public:
    RegEngine(std::int64_t p, int cap = kDefaultRegularityCap);

    std::int64_t prime() const { return p_; }
    int cap() const { return cap_; }
    int reg(const Ideal& ideal);

private:
    std::int64_t p_;
    int cap_;
    std::mutex mu_;
    std::unordered_map<std::string, int> memo_;
};

}  // namespace sqfr
