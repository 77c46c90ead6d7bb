#include <algorithm>
#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "sqfr/errors.hpp"
#include "sqfr/graph.hpp"
#include "sqfr/graph6.hpp"
#include "support/oracles.hpp"

using namespace sqfr;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph two_k2() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
}

Graph from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            if (mask >> k & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::mt19937_64 rng(12345);

Graph random_graph(int n, int density_pct) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng() % 100) < density_pct) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace

TEST_CASE("matching numbers on named graphs") {
    auto [p4_size, p4_witness] =
        std::make_pair(matching_number(path(4)), maximum_matching(path(4)));
    CHECK(p4_size == 2);
    CHECK(p4_witness == Matching{{0, 1}, {2, 3}});
    CHECK(is_matching(path(4), p4_witness));

    CHECK(matching_number(cycle(3)) == 1);
    CHECK(matching_number(cycle(5)) == 2);
    CHECK(matching_number(Graph(0)) == 0);
    CHECK(matching_number(Graph(3)) == 0);
}

TEST_CASE("induced matching numbers on named graphs") {
    CHECK(induced_matching_number(path(4)) == 1);
    CHECK(induced_matching_number(path(5)) == 2);
    CHECK(maximum_induced_matching(path(5)) == Matching{{0, 1}, {3, 4}});
    CHECK(induced_matching_number(two_k2()) == 2);
    CHECK(induced_matching_number(cycle(5)) == 1);
}

TEST_CASE("matching solvers agree with brute force on all labeled graphs n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            CAPTURE(n);
            CAPTURE(mask);
            REQUIRE(matching_number(g) == oracle::max_matching_brute(g));
            int ind = induced_matching_number(g);
            REQUIRE(ind <= matching_number(g));
            Matching w = maximum_induced_matching(g);
            REQUIRE(static_cast<int>(w.size()) == ind);
            REQUIRE(is_matching(g, w));
        }
    }
}

TEST_CASE("matching solvers agree with brute force on random graphs n <= 8") {
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 15 + static_cast<int>(rng() % 60));
        CAPTURE(to_edge_list(g));
        REQUIRE(matching_number(g) == oracle::max_matching_brute(g));
        if (g.edge_count() <= 20) {
            REQUIRE(induced_matching_number(g) == oracle::max_induced_matching_brute(g));
        }
    }
}

TEST_CASE("enumerate_matchings") {
    CHECK(enumerate_matchings(cycle(5), 2).size() == 5);
    CHECK(enumerate_matchings(path(4), 2) == std::vector<Matching>{{{0, 1}, {2, 3}}});
    CHECK(enumerate_matchings(path(4), 0) == std::vector<Matching>{{}});

    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(6, 40);
        int match = matching_number(g);
        CHECK(enumerate_matchings(g, match + 1).empty());
        CHECK(!enumerate_matchings(g, match).empty());
        // lexicographic output order
        auto ms = enumerate_matchings(g, 2);
        CHECK(std::is_sorted(ms.begin(), ms.end()));
    }
}

TEST_CASE("bipartition") {
    auto p4 = bipartition(path(4));
    REQUIRE(p4.has_value());
    CHECK(p4->first == std::vector<int>{0, 2});
    CHECK(p4->second == std::vector<int>{1, 3});

    CHECK(!bipartition(cycle(3)).has_value());
    CHECK(!bipartition(cycle(5)).has_value());

    auto kk = bipartition(two_k2());
    REQUIRE(kk.has_value());
    CHECK(kk->first == std::vector<int>{0, 2});
    CHECK(kk->second == std::vector<int>{1, 3});

    Graph isolated(3);
    isolated.add_edge(1, 2);
    auto iso = bipartition(isolated);
    REQUIRE(iso.has_value());
    CHECK(iso->first == std::vector<int>{0, 1});
    CHECK(iso->second == std::vector<int>{2});
}

TEST_CASE("very well-covered") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(is_very_well_covered(k2));
    CHECK(!is_very_well_covered(cycle(3)));
    CHECK(is_very_well_covered(cycle(4)));
    CHECK(is_very_well_covered(path(4)));
    CHECK(!is_very_well_covered(path(3)));  // cover {1} has size 1 != 3/2
    CHECK(is_very_well_covered(two_k2()));
    Graph with_isolated(4);
    with_isolated.add_edge(0, 1);
    CHECK(!is_very_well_covered(with_isolated));
}

TEST_CASE("hamiltonian path") {
    CHECK(has_hamiltonian_path(path(4)));
    CHECK(!has_hamiltonian_path(star(3)));
    CHECK(has_hamiltonian_path(cycle(5)));
    CHECK(has_hamiltonian_path(Graph(1)));
    CHECK(!has_hamiltonian_path(two_k2()));
    CHECK_THROWS_AS(has_hamiltonian_path(Graph(25)), CapExceededError);
}

TEST_CASE("Cameron-Walker classification on named graphs") {
    CHECK(classify_cameron_walker(star(3)).kind == CwKind::Star);
    CHECK(classify_cameron_walker(cycle(3)).kind == CwKind::StarTriangle);
    CHECK(classify_cameron_walker(cycle(5)).kind == CwKind::NotCw);
    CHECK(classify_cameron_walker(path(4)).kind == CwKind::NotCw);
    CHECK(classify_cameron_walker(two_k2()).kind == CwKind::DisconnectedCw);
    CHECK(classify_cameron_walker(two_k2()).components ==
          std::vector<CwKind>{CwKind::Star, CwKind::Star});
    CHECK(classify_cameron_walker(path(5)).kind == CwKind::BipartiteWithPendants);

    // star triangle with two triangles
    Graph st(5);
    st.add_edge(0, 1);
    st.add_edge(0, 2);
    st.add_edge(1, 2);
    st.add_edge(0, 3);
    st.add_edge(0, 4);
    st.add_edge(3, 4);
    CHECK(classify_cameron_walker(st).kind == CwKind::StarTriangle);

    // bipartite core K2 with a pendant edge on x and a pendant triangle on y
    Graph bc(5);
    bc.add_edge(0, 1);  // core edge x=0, y=1
    bc.add_edge(0, 2);  // pendant edge on x
    bc.add_edge(1, 3);
    bc.add_edge(1, 4);
    bc.add_edge(3, 4);  // pendant triangle on y
    auto cls = classify_cameron_walker(bc);
    CHECK(cls.kind == CwKind::BipartiteWithPendants);
    REQUIRE(cls.core.has_value());
    CHECK(cls.core->core_x == std::vector<int>{0});
    CHECK(cls.core->core_y == std::vector<int>{1});
    CHECK(cls.core->pendant_edges == std::vector<std::pair<int, int>>{{2, 0}});
    CHECK(cls.core->pendant_triangles == std::vector<std::array<int, 3>>{{3, 4, 1}});
}

TEST_CASE("Cameron-Walker structural route matches the matching equality") {
    // classify_cameron_walker throws on any mismatch, so it is enough to call it
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            CAPTURE(n);
            CAPTURE(mask);
            CwClassification c = classify_cameron_walker(g);
            REQUIRE((c.kind != CwKind::NotCw) ==
                    (matching_number(g) == induced_matching_number(g)));
        }
    }
    for (int trial = 0; trial < 300; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(n, 10 + static_cast<int>(rng() % 50));
        CAPTURE(to_edge_list(g));
        CwClassification c = classify_cameron_walker(g);
        REQUIRE((c.kind != CwKind::NotCw) ==
                (matching_number(g) == induced_matching_number(g)));
    }
}

TEST_CASE("connected Cameron-Walker bipartite graphs have match = min(|X|,|Y|)") {
    std::ifstream in(std::string(SQFR_DATA_DIR) + "/connected_upto7.g6");
    REQUIRE(in.good());
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        auto parts = bipartition(g);
        if (!parts || g.edge_count() == 0) continue;
        if (!classify_cameron_walker(g).is_cameron_walker()) continue;
        CAPTURE(line);
        REQUIRE(matching_number(g) ==
                static_cast<int>(std::min(parts->first.size(), parts->second.size())));
        ++checked;
    }
    CHECK(checked > 10);
}

TEST_CASE("pendant triangles") {
    CHECK(pendant_triangles(cycle(3)) == std::vector<std::array<int, 3>>{{0, 1, 2}});
    CHECK(pendant_triangles(cycle(5)).empty());

    Graph k3_pendant(4);
    k3_pendant.add_edge(0, 1);
    k3_pendant.add_edge(0, 2);
    k3_pendant.add_edge(1, 2);
    k3_pendant.add_edge(2, 3);
    CHECK(pendant_triangles(k3_pendant) == std::vector<std::array<int, 3>>{{0, 1, 2}});

    // K4 has no vertex of degree 2
    Graph k4(4);
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    }
    CHECK(pendant_triangles(k4).empty());
}

TEST_CASE("edge list text format") {
    Graph g = parse_edge_list("0-1,1-2,2-3");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(to_edge_list(g) == "0-1,1-2,2-3");
    CHECK(parse_edge_list("").vertex_count() == 0);
    CHECK_THROWS_AS(parse_edge_list("0-0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0-x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
}

TEST_CASE("graph basics") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(0) == 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
    CHECK_THROWS_AS(Graph(33), PreconditionError);
    CHECK(g.without_vertices(vbit(1)).edge_count() == 0);
}
