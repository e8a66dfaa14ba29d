#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

// Hard node budget for the exact coloring search.  Exceeding it raises
// resource_error; it is generous for everything this project constructs
// (those graphs are small and perfect, so the bound usually closes at the
// root), but keeps adversarial inputs from hanging the tool.
inline constexpr long long kColoringNodeBudget = 10'000'000;
inline constexpr long long kCliqueNodeBudget = 10'000'000;

// Exact clique number (branch and bound with greedy coloring bound).
int clique_number(const ZdGraph& g, long long node_budget = kCliqueNodeBudget);

// Exact independence number, computed as the clique number of the complement.
int independence_number(const ZdGraph& g, long long node_budget = kCliqueNodeBudget);

// Exact chromatic number: branch and bound seeded with a greedy clique lower
// bound and a DSATUR upper bound, branching on color classes so color
// permutations are never explored twice.
int chromatic_number(const ZdGraph& g, long long node_budget = kColoringNodeBudget);

// Exact vertex connectivity via unit-capacity max-flow over all non-adjacent
// pairs (Menger).  Complete graphs return n-1 by convention; disconnected
// graphs return 0.
int vertex_connectivity(const ZdGraph& g);

// Complete planarity decision.  An Euler-count shortcut (E > 3V-6) serves as
// a fast negative; everything else goes through the Boyer-Myrvold test.
bool is_planar(const ZdGraph& g);

// Cograph test by exhaustive scan for an induced 4-vertex path.  The scan is
// the parallel kernel; `is_cograph_serial` is the plain loop kept as its
// reference, and `is_cograph_recursive` decides the same property through the
// complement-disconnection characterization so the two routes can be checked
// against each other.
bool is_cograph(const ZdGraph& g);
bool is_cograph_serial(const ZdGraph& g);
bool is_cograph_recursive(const ZdGraph& g);

// chi = omega check over random induced subgraphs (exhaustive over all
// subsets when n <= 12).  Returns the number of subgraphs checked; a
// counterexample throws contract_violation naming the subset.
int perfect_sample_check(const ZdGraph& g, int samples, uint64_t seed);

struct ComponentSummary {
    std::vector<int> vertices;
    int64_t edges = 0;
};

// Everything the verifier wants to know about one graph, computed by the
// general algorithms above (never by family formulas).
struct InvariantReport {
    int vertex_count = 0;
    int64_t edge_count = 0;
    std::vector<int> degree_sequence;
    std::vector<ComponentSummary> component_summaries;
    std::optional<int> girth;
    int chromatic_number = 0;
    int clique_number = 0;
    int independence_number = 0;
    int vertex_connectivity = 0;            // of the whole graph
    std::vector<int> component_connectivity;  // per component, same order
    bool planar = false;
    bool cograph = false;
};

InvariantReport compute_invariants(const ZdGraph& g);

}  // namespace zdg
