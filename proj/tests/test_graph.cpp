#include <doctest.h>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph.hpp"
#include "zdg/invariants.hpp"

using zdg::ZdGraph;

namespace {

ZdGraph cycle(int n) {
    ZdGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

ZdGraph path(int n) {
    ZdGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

ZdGraph petersen() {
    ZdGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(i, i + 5);              // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // pentagram
    }
    return g;
}

ZdGraph star(int leaves) {
    ZdGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace

TEST_CASE("directed arcs symmetrize into the undirected view") {
    ZdGraph g(3);
    g.add_arc(0, 1);
    CHECK(g.arc(0, 1));
    CHECK(!g.arc(1, 0));
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 0));
    CHECK(g.arc_count() == 1);
    CHECK(g.edge_count() == 1);
    g.add_arc(1, 0);
    CHECK(g.arc_count() == 2);
    CHECK(g.edge_count() == 1);
    g.remove_edge(0, 1);
    CHECK(g.arc_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(!g.edge(0, 1));
}

TEST_CASE("components, girth and degree sequences on knowns") {
    const ZdGraph c5 = cycle(5);
    CHECK(zdg::components(c5).size() == 1);
    CHECK(zdg::is_connected(c5));
    CHECK(zdg::girth(c5) == 5);
    CHECK(zdg::degree_sequence(c5) == std::vector<int>{2, 2, 2, 2, 2});

    const ZdGraph p4 = path(4);
    CHECK(!zdg::girth(p4).has_value());
    CHECK(zdg::degree_sequence(p4) == std::vector<int>{2, 2, 1, 1});

    const ZdGraph pet = petersen();
    CHECK(zdg::girth(pet) == 5);
    CHECK(zdg::degree_sequence(pet) == std::vector<int>(10, 3));

    const ZdGraph two = zdg::disjoint_union(cycle(3), path(2));
    const auto comps = zdg::components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});
    CHECK(!zdg::is_connected(two));
    CHECK(zdg::girth(two) == 3);

    CHECK(zdg::girth(zdg::complete_bipartite(3, 3)) == 4);
    CHECK(zdg::girth(zdg::empty_graph(4)) == std::nullopt);
}

TEST_CASE("reference constructions and induced subgraphs") {
    const ZdGraph k5 = zdg::complete_graph(5);
    CHECK(k5.edge_count() == 10);
    const ZdGraph k23 = zdg::complete_bipartite(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(zdg::degree_sequence(k23) == std::vector<int>{3, 3, 2, 2, 2});
    const ZdGraph join = zdg::join(zdg::complete_graph(2), zdg::empty_graph(2));
    CHECK(join.edge_count() == 5);

    const ZdGraph sub = zdg::induced_subgraph(cycle(5), {0, 1, 2});
    CHECK(sub.n() == 3);
    CHECK(sub.edge_count() == 2);
    const ZdGraph comp = zdg::complement(cycle(5));
    CHECK(comp.edge_count() == 5);
    CHECK(zdg::girth(comp) == 5);  // complement of C5 is C5
}

TEST_CASE("shape recognition accepts the built families and rejects near misses") {
    using zdg::GraphFamily;
    CHECK(zdg::matches_reference(zdg::complete_bipartite(2, 2), GraphFamily::bipartite(2, 2)));
    CHECK(zdg::matches_reference(zdg::complete_bipartite(4, 4), GraphFamily::bipartite(4, 4)));
    CHECK(!zdg::matches_reference(zdg::complete_bipartite(2, 3), GraphFamily::bipartite(2, 2)));
    CHECK(!zdg::matches_reference(cycle(5), GraphFamily::bipartite(2, 3)));

    const ZdGraph j = zdg::join(zdg::complete_graph(2), zdg::empty_graph(2));
    CHECK(zdg::matches_reference(j, GraphFamily::clique_join_indep(2, 2)));
    CHECK(!zdg::matches_reference(j, GraphFamily::bipartite(2, 2)));
    CHECK(!zdg::matches_reference(cycle(4), GraphFamily::clique_join_indep(2, 2)));

    ZdGraph three = zdg::disjoint_union(zdg::disjoint_union(j, j), j);
    CHECK(zdg::matches_reference(three, GraphFamily::clique_join_indep(2, 2).repeated(3)));
    CHECK(!zdg::matches_reference(three, GraphFamily::clique_join_indep(2, 2).repeated(2)));
    three.add_edge(0, 4);  // bridge two copies: no longer three disjoint copies
    CHECK(!zdg::matches_reference(three, GraphFamily::clique_join_indep(2, 2).repeated(3)));

    const ZdGraph center = zdg::join(
        zdg::empty_graph(2), zdg::disjoint_union(zdg::complete_graph(2), zdg::empty_graph(4)));
    CHECK(zdg::matches_reference(center, GraphFamily::center_clique_indep(2, 2, 4)));
    CHECK(!zdg::matches_reference(center, GraphFamily::center_clique_indep(2, 4, 2)));

    // Degenerate parameters where two families coincide: K_m * (p K1) with
    // m = 1 is the star K_{1,p}.
    CHECK(zdg::matches_reference(star(3), GraphFamily::clique_join_indep(1, 3)));
    CHECK(zdg::matches_reference(star(3), GraphFamily::bipartite(1, 3)));
}

TEST_CASE("chromatic, clique and independence numbers on knowns") {
    CHECK(zdg::chromatic_number(zdg::empty_graph(6)) == 1);
    CHECK(zdg::chromatic_number(zdg::complete_graph(6)) == 6);
    CHECK(zdg::chromatic_number(cycle(5)) == 3);
    CHECK(zdg::chromatic_number(cycle(6)) == 2);
    CHECK(zdg::chromatic_number(petersen()) == 3);
    CHECK(zdg::chromatic_number(zdg::complete_bipartite(4, 4)) == 2);
    CHECK(zdg::chromatic_number(ZdGraph(0)) == 0);

    CHECK(zdg::clique_number(zdg::complete_graph(6)) == 6);
    CHECK(zdg::clique_number(cycle(5)) == 2);
    CHECK(zdg::clique_number(petersen()) == 2);
    CHECK(zdg::clique_number(zdg::empty_graph(3)) == 1);
    CHECK(zdg::clique_number(ZdGraph(0)) == 0);

    CHECK(zdg::independence_number(cycle(5)) == 2);
    CHECK(zdg::independence_number(petersen()) == 4);
    CHECK(zdg::independence_number(zdg::complete_bipartite(3, 5)) == 5);
    CHECK(zdg::independence_number(zdg::complete_graph(4)) == 1);
}

TEST_CASE("search invariants agree with the exhaustive references") {
    std::vector<ZdGraph> deck = {cycle(4),     cycle(5),          cycle(7),
                                 path(6),      petersen(),        zdg::complete_bipartite(3, 3),
                                 star(5),      zdg::empty_graph(5),
                                 zdg::join(zdg::complete_graph(3), zdg::empty_graph(3))};
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 5 + (int)(seed % 5);
        deck.push_back(oracle::random_graph(n, 0.2 + 0.012 * (double)seed, seed));
    }
    for (const ZdGraph& g : deck) {
        CHECK(zdg::chromatic_number(g) == oracle::brute_chromatic(g));
        CHECK(zdg::clique_number(g) == oracle::brute_clique(g));
        CHECK(zdg::independence_number(g) == oracle::brute_independence(g));
    }
}

TEST_CASE("tiny budgets surface as resource_error") {
    const ZdGraph pet = petersen();
    CHECK_THROWS_AS(zdg::chromatic_number(pet, 2), zdg::resource_error);
    CHECK_THROWS_AS(zdg::clique_number(pet, 1), zdg::resource_error);
}

TEST_CASE("vertex connectivity on knowns") {
    CHECK(zdg::vertex_connectivity(zdg::complete_graph(4)) == 3);
    CHECK(zdg::vertex_connectivity(cycle(5)) == 2);
    CHECK(zdg::vertex_connectivity(path(4)) == 1);
    CHECK(zdg::vertex_connectivity(star(4)) == 1);
    CHECK(zdg::vertex_connectivity(petersen()) == 3);
    CHECK(zdg::vertex_connectivity(zdg::complete_bipartite(3, 5)) == 3);
    CHECK(zdg::vertex_connectivity(zdg::disjoint_union(cycle(3), cycle(3))) == 0);
    CHECK(zdg::vertex_connectivity(zdg::empty_graph(3)) == 0);
    CHECK(zdg::vertex_connectivity(ZdGraph(1)) == 0);
    // Join of K2 with 2K1: cutting the clique pair disconnects the rest.
    CHECK(zdg::vertex_connectivity(zdg::join(zdg::complete_graph(2), zdg::empty_graph(2))) == 2);
}

TEST_CASE("planarity on knowns") {
    CHECK(zdg::is_planar(cycle(5)));
    CHECK(zdg::is_planar(path(7)));
    CHECK(zdg::is_planar(zdg::complete_graph(4)));
    CHECK(!zdg::is_planar(zdg::complete_graph(5)));
    CHECK(!zdg::is_planar(zdg::complete_bipartite(3, 3)));
    CHECK(!zdg::is_planar(petersen()));
    CHECK(zdg::is_planar(zdg::complete_bipartite(2, 7)));
    CHECK(zdg::is_planar(zdg::empty_graph(9)));
    // K5 minus one edge is planar: the Euler shortcut must not overreach.
    ZdGraph k5m = zdg::complete_graph(5);
    k5m.remove_edge(0, 1);
    CHECK(zdg::is_planar(k5m));
}

TEST_CASE("cograph detection: three routes, one answer") {
    const ZdGraph p4 = path(4);
    CHECK(!zdg::is_cograph(p4));
    CHECK(!zdg::is_cograph_serial(p4));
    CHECK(!zdg::is_cograph_recursive(p4));

    for (const ZdGraph& g : {zdg::complete_graph(5), zdg::empty_graph(5),
                             zdg::complete_bipartite(3, 4),
                             zdg::join(zdg::complete_graph(3), zdg::empty_graph(3))}) {
        CHECK(zdg::is_cograph(g));
        CHECK(zdg::is_cograph_serial(g));
        CHECK(zdg::is_cograph_recursive(g));
    }
    CHECK(!zdg::is_cograph(cycle(5)));       // C5 contains an induced P4
    CHECK(!zdg::is_cograph_recursive(cycle(5)));
    CHECK(!zdg::is_cograph(path(5)));

    for (uint64_t seed = 100; seed < 140; ++seed) {
        const ZdGraph g = oracle::random_graph(9, 0.35, seed);
        const bool a = zdg::is_cograph(g);
        CHECK(a == zdg::is_cograph_serial(g));
        CHECK(a == zdg::is_cograph_recursive(g));
    }
}

TEST_CASE("perfectness sampling accepts perfect graphs and names violations") {
    CHECK(zdg::perfect_sample_check(zdg::complete_bipartite(3, 3), 0, 7) == (1 << 6) - 1);
    CHECK(zdg::perfect_sample_check(zdg::join(zdg::complete_graph(2), zdg::empty_graph(2)), 0, 7) ==
          15);
    // C5 is its own witness: chi = 3 > 2 = omega on the full subset.
    CHECK_THROWS_AS(zdg::perfect_sample_check(cycle(5), 0, 7), zdg::contract_violation);
    CHECK_THROWS_AS(zdg::perfect_sample_check(cycle(7), 0, 7), zdg::contract_violation);
    // Large graph goes through the sampled path.
    const ZdGraph big = zdg::join(zdg::complete_graph(6), zdg::empty_graph(8));
    CHECK(zdg::perfect_sample_check(big, 64, 99) == 64);
}

TEST_CASE("the combined invariant report is self-consistent") {
    const ZdGraph g = zdg::disjoint_union(zdg::join(zdg::complete_graph(2), zdg::empty_graph(2)),
                                          zdg::complete_graph(3));
    const auto rep = zdg::compute_invariants(g);
    CHECK(rep.vertex_count == 7);
    CHECK(rep.edge_count == 8);
    CHECK(rep.degree_sequence == std::vector<int>{3, 3, 2, 2, 2, 2, 2});
    REQUIRE(rep.component_summaries.size() == 2);
    CHECK(rep.component_summaries[0].vertices.size() == 4);
    CHECK(rep.component_summaries[0].edges == 5);
    CHECK(rep.component_summaries[1].edges == 3);
    CHECK(rep.girth == 3);
    CHECK(rep.chromatic_number == 3);
    CHECK(rep.clique_number == 3);
    CHECK(rep.independence_number == 3);
    CHECK(rep.vertex_connectivity == 0);
    CHECK(rep.component_connectivity == std::vector<int>{2, 2});
    CHECK(rep.planar);
    CHECK(rep.cograph);
}
