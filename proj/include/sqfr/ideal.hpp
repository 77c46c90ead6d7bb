#pragma once

#include <bit>
#include <compare>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqfr/graph.hpp"

namespace sqfr {

/// Squarefree monomial: a subset of variable indices.
struct Monomial {
    VertexSet support = 0;

    int degree() const { return std::popcount(support); }
    bool divides(const Monomial& o) const { return (support & ~o.support) == 0; }
    bool disjoint(const Monomial& o) const { return (support & o.support) == 0; }
    Monomial times(const Monomial& o) const { return Monomial{support | o.support}; }
    /// m / gcd(m, o): the support with o's variables removed.
    Monomial quotient_by(const Monomial& o) const { return Monomial{support & ~o.support}; }

    bool operator==(const Monomial&) const = default;
    /// canonical order: by degree, then by support as an integer
    auto operator<=>(const Monomial& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        return support <=> o.support;
    }
};

/// Squarefree monomial ideal given by its minimal generating set: an
/// antichain under divisibility, kept in canonical sorted order. The zero
/// ideal has no generators; the unit ideal is generated by the empty support.
class Ideal {
public:
    Ideal() = default;

    static Ideal zero(int n) { return Ideal(n, {}); }
    static Ideal unit(int n) { return Ideal(n, {Monomial{}}); }
    /// Minimalizes (drops multiples and duplicates) and sorts.
    static Ideal from_generators(int n, std::vector<Monomial> raw);

    int var_count() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].support == 0; }

    /// True iff some generator divides m.
    bool contains_monomial(const Monomial& m) const;

    bool operator==(const Ideal&) const = default;

private:
    Ideal(int n, std::vector<Monomial> gens);

    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// I(G) = (x_i x_j : ij an edge of G).
Ideal edge_ideal(const Graph& g);

/// s-th squarefree power: generated by the unions of s generators with
/// pairwise disjoint supports, minimalized. Zero when no such union exists.
/// The unit ideal is fixed by every power. Requires s >= 1.
Ideal squarefree_power(const Ideal& ideal, int s);

/// (I : m), generated by { g / gcd(g, m) } minimalized.
Ideal colon_by_monomial(const Ideal& ideal, const Monomial& m);

/// Minimal generating set of I + (extra).
Ideal add_and_minimalize(const Ideal& ideal, const std::vector<Monomial>& extra);

/// Canonical-generator comparison; requires the same ambient variable count.
bool ideal_equals(const Ideal& a, const Ideal& b);

std::string to_string(const Monomial& m);  // "x0*x1*x3"; "1" for the empty support
std::string to_string(const Ideal& ideal);
nlohmann::ordered_json ideal_to_json(const Ideal& ideal);  // array of support arrays

/// Product of the edges of a matching as a squarefree monomial.
Monomial matching_product(const Matching& m);

}  // namespace sqfr
