#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sqfr/graph.hpp"
#include "sqfr/ideal.hpp"
#include "sqfr/regularity.hpp"
#include "sqfr/report.hpp"

namespace sqfr {

/// How a pair (u_j, u_i), j < i, of ordered generators is justified:
/// either (u_j : u_i) lands in the colon ideal (I^[s+1] : u_i), or some
/// earlier u_r has (u_r : u_i) generated by a single variable that divides
/// the quotient.
struct PairJustification {
    int j = 0;
    int i = 0;
    bool colon_containment = false;  // case (i); otherwise case (ii)
    int r = -1;                      // case (ii): position of the dominating generator
    int var = -1;                    // case (ii): the single variable
};

struct OrderCertificate {
    int s = 0;
    std::vector<Monomial> ordering;
    std::vector<PairJustification> pairs;
};

struct OrderCheck {
    std::optional<OrderCertificate> certificate;
    std::optional<std::pair<int, int>> violation;  // first failing (j, i)
};

/// Checks a proposed ordering of the generators of I(G)^[s].
/// Requires 1 <= s <= match(g) - 1 and `ordering` a permutation of the
/// canonical generator set.
OrderCheck verify_order(const Graph& g, int s, const std::vector<Monomial>& ordering);

/// Backtracking search for an admissible ordering; returns the
/// lexicographically least one. Exhaustion would contradict a proven result
/// and raises TheoremViolationError.
OrderCertificate find_admissible_order(const Graph& g, int s);

nlohmann::ordered_json certificate_to_json(const OrderCertificate& cert);

/// Checks the recursion bound
///   reg(I^[s+1]) <= max{ reg(I^[s+1] : u_i) + 2s, reg(I^[s]) }
/// with every colon ideal realized as a colon graph's edge ideal.
Report check_regcol_bound(const Graph& g, int s, RegEngine& engine);
Report check_regcol_bound(const Graph& g, int s, std::int64_t p,
                          int cap = kDefaultRegularityCap);

}  // namespace sqfr
