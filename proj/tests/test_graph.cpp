#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "earspec/extremal.hpp"
#include "earspec/graph.hpp"

using namespace earspec;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Graph random_graph(int n, double density, std::mt19937& rng) {
    std::bernoulli_distribution coin(density);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if (mask >> k & 1u) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph6 encodes the frozen corpus") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(gen_cycle(4)) == "Cl");
    CHECK(to_graph6(gen_cycle(5)) == "Dhc");
    CHECK(to_graph6(gen_cycle(6)) == "EhEG");
    CHECK(to_graph6(gen_cycle(7)) == "FhCKG");
    CHECK(to_graph6(gen_cycle(8)) == "GhCGKC");
    CHECK(to_graph6(oracles::complete(4)) == "C~");
    CHECK(to_graph6(oracles::complete_bipartite(3, 3)) == "EFz_");
    CHECK(to_graph6(oracles::petersen()) == "IheA@GUAo");
    CHECK(to_graph6(gen_p3star(6)) == "ER`G");
    CHECK(to_graph6(gen_p3star(8)) == "GR`KAC");
    CHECK(to_graph6(gen_p3star(10)) == "IR`KAE?OG");
    CHECK(to_graph6(gen_friendship(3)) == "Bw");
    CHECK(to_graph6(gen_friendship(5)) == "D{c");
    CHECK(to_graph6(gen_friendship(7)) == "F{eCG");
    CHECK(to_graph6(gen_friendship(9)) == "H{eCKA@");

    CHECK(parse_graph6("EhEG") == gen_cycle(6));
    CHECK(parse_graph6("IheA@GUAo") == oracles::petersen());
    CHECK(parse_graph6("?").n == 0);
    CHECK(parse_graph6("@") == Graph(1));
}

TEST_CASE("graph6 agrees with an independent encoder") {
    for (int n = 0; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g = from_mask(n, mask);
            std::string s = to_graph6(g);
            CHECK(s == oracles::ref_graph6(g));
            CHECK(parse_graph6(s) == g);
        }
    }
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.3, rng);
        std::string s = to_graph6(g);
        CHECK(s == oracles::ref_graph6(g));
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_graph6(""), "graph6: empty input", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("~~~"), "graph6: multi-byte order header not supported",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string(1, char(62))), "graph6: bad order byte",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6(std::string(1, char(127))), "graph6: bad order byte",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("A"), "graph6: wrong length", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("A__"), "graph6: wrong length", std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_graph6("A!"), "graph6: bad data byte", std::invalid_argument);
    // C5 is "Dhc"; bumping the last byte flips a padding bit
    CHECK_THROWS_WITH_AS(parse_graph6("Dhd"), "graph6: nonzero padding", std::invalid_argument);
    CHECK_THROWS_WITH_AS(to_graph6(Graph(63)), "graph6: order above 62 not supported",
                         std::invalid_argument);
}

TEST_CASE("canonical form is the lex-min over relabelings") {
    CHECK(canonical_form(gen_cycle(4)) == "C]");
    CHECK(canonical_form(gen_cycle(6)) == "EBj?");
    CHECK(canonical_form(oracles::complete_bipartite(3, 3)) == "EFz_");
    CHECK(canonical_form(gen_p3star(8)) == "G?LSf?");
    CHECK(canonical_form(gen_friendship(5)) == "DK{");
    CHECK(canonical_form(oracles::complete(4)) == "C~");
    CHECK(canonical_form(Graph(0)) == "?");
    CHECK(canonical_form(Graph(1)) == "@");

    std::mt19937 rng(999);
    for (const Graph& g : {gen_cycle(6), oracles::complete_bipartite(3, 3), gen_p3star(8),
                           gen_friendship(5), oracles::petersen()}) {
        std::string canon = canonical_form(g);
        CHECK(canonical_form(parse_graph6(canon)) == canon);  // idempotent
        for (int trial = 0; trial < 8; ++trial) {
            Graph h = permuted(g, random_perm(g.n, rng));
            CHECK(canonical_form(h) == canon);   // invariant
            CHECK(canon <= to_graph6(h));        // a true minimum
        }
    }
    CHECK_THROWS_WITH_AS(canonical_form(Graph(15)), "canonical_form: graph too large",
                         std::invalid_argument);
}

TEST_CASE("bipartition and connectivity") {
    auto parts = bipartition(gen_cycle(6));
    REQUIRE(parts.has_value());
    CHECK(parts->color_a.size() == 3);
    CHECK(parts->color_b.size() == 3);
    CHECK(std::count(parts->color_a.begin(), parts->color_a.end(), 0) == 1);
    Graph c6 = gen_cycle(6);
    std::vector<int> side(6, -1);
    for (int v : parts->color_a) side[v] = 0;
    for (int v : parts->color_b) side[v] = 1;
    for (auto [u, v] : c6.edges()) CHECK(side[u] != side[v]);

    CHECK_FALSE(bipartition(gen_cycle(5)).has_value());
    CHECK_FALSE(bipartition(gen_friendship(5)).has_value());

    Graph two(6);  // C4 plus a separate edge
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}})
        two.add_edge(u, v);
    CHECK_FALSE(is_connected(two));
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(comps[1] == std::vector<int>{4, 5});
    auto two_parts = bipartition(two);
    REQUIRE(two_parts.has_value());
    // color_a picks up the lowest-indexed vertex of every component
    CHECK(std::count(two_parts->color_a.begin(), two_parts->color_a.end(), 0) == 1);
    CHECK(std::count(two_parts->color_a.begin(), two_parts->color_a.end(), 4) == 1);

    Graph edgeless(3);
    CHECK(connected_components(edgeless).size() == 3);
    auto iso_parts = bipartition(edgeless);
    REQUIRE(iso_parts.has_value());
    CHECK(iso_parts->color_a == std::vector<int>{0, 1, 2});
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("cut vertices and blocks") {
    auto sorted_blocks = [](const Graph& g) {
        auto bs = blocks(g);
        std::sort(bs.begin(), bs.end());
        return bs;
    };

    Graph p4 = oracles::path(4);
    CHECK(cut_vertices(p4) == std::vector<int>{1, 2});
    CHECK(sorted_blocks(p4) ==
          std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});

    Graph bowtie = gen_friendship(5);
    CHECK(cut_vertices(bowtie) == std::vector<int>{0});
    CHECK(sorted_blocks(bowtie) == std::vector<std::vector<int>>{{0, 1, 2}, {0, 3, 4}});

    CHECK(cut_vertices(gen_cycle(6)).empty());
    CHECK(sorted_blocks(gen_cycle(6)) == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});

    CHECK(cut_vertices(Graph(1)).empty());
    CHECK(sorted_blocks(Graph(1)) == std::vector<std::vector<int>>{{0}});
    CHECK(sorted_blocks(Graph(2)) == std::vector<std::vector<int>>{{0}, {1}});

    CHECK(cut_vertices(oracles::petersen()).empty());
    CHECK(blocks(oracles::petersen()).size() == 1);
}

TEST_CASE("vertex and edge surgery") {
    Graph c6 = gen_cycle(6);

    InducedSubgraph sub = without_vertices(c6, {0});
    CHECK(sub.graph.n == 5);
    CHECK(sub.graph.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(sub.orig == std::vector<int>{1, 2, 3, 4, 5});

    // bowtie minus its center is two disjoint edges
    InducedSubgraph rest = without_vertices(gen_friendship(5), {0});
    CHECK(rest.graph == Graph::from_edges(4, {{0, 1}, {2, 3}}));

    InducedSubgraph k22 = without_vertices(oracles::complete_bipartite(3, 3), {0, 3});
    CHECK(canonical_form(k22.graph) == "C]");

    Graph theta = with_edges(c6, {{0, 3}});
    CHECK(theta.has_edge(0, 3));
    CHECK(without_edges(theta, {{0, 3}}) == c6);

    std::vector<int> ident(6);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(permuted(c6, ident) == c6);
    Graph rot = permuted(c6, {1, 2, 3, 4, 5, 0});
    CHECK(rot.edge_count() == 6);
    CHECK(canonical_form(rot) == canonical_form(c6));

    CHECK_THROWS_AS(without_vertices(c6, {6}), std::invalid_argument);
    CHECK_THROWS_AS(permuted(c6, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(permuted(c6, {0, 0, 1, 2, 3, 4}), std::invalid_argument);
    Graph g2(2);
    CHECK_THROWS_AS(g2.add_edge(0, 0), std::invalid_argument);
    g2.add_edge(0, 1);
    CHECK_THROWS_AS(g2.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g2.remove_edge(1, 1), std::invalid_argument);
}

TEST_CASE("isomorphism corpus reproduces the published counts") {
    const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::size_t conn[] = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CHECK(oracles::iso_corpus(n).size() == all[n - 1]);
        CHECK(oracles::connected_iso_corpus(n).size() == conn[n - 1]);
    }
    // members are stored in canonical labeling
    for (const Graph& g : oracles::iso_corpus(5)) CHECK(to_graph6(g) == canonical_form(g));
}
