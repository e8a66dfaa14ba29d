#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"

namespace zdg {

// Directed graph on {0..n-1} with the symmetrized (undirected) view kept
// alongside.  Arcs come from an asymmetric relation (u annihilates v on one
// side), but every classical invariant below is defined on the undirected
// view.  Loops are not allowed.
class ZdGraph {
public:
    ZdGraph() = default;
    explicit ZdGraph(int n) : n_(n), out_(n, Bitset(n)), und_(n, Bitset(n)) {}
    // Build from finished directed rows (used by the parallel construction
    // kernel, whose threads each own whole rows); the undirected view is
    // derived here, deterministically.
    explicit ZdGraph(std::vector<Bitset> out_rows);

    int n() const { return n_; }

    void add_arc(int u, int v);
    void add_edge(int u, int v);  // both arcs
    // Removes u->v and v->u.  Exists for fault injection in tests and the
    // verify tool; the constructions themselves never delete anything.
    void remove_edge(int u, int v);

    bool arc(int u, int v) const { return out_[u].test(v); }
    bool edge(int u, int v) const { return und_[u].test(v); }

    const Bitset& out_row(int u) const { return out_[u]; }
    const Bitset& und_row(int u) const { return und_[u]; }

    int64_t arc_count() const;
    int64_t edge_count() const;
    int degree(int u) const { return und_[u].count(); }

    bool operator==(const ZdGraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    int n_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> und_;
};

// Connected components of the undirected view; each component sorted, the
// list sorted by smallest member.
std::vector<std::vector<int>> components(const ZdGraph& g);

bool is_connected(const ZdGraph& g);

// Length of a shortest cycle in the undirected view, or nullopt for forests.
std::optional<int> girth(const ZdGraph& g);

// Undirected degrees, sorted non-increasing.
std::vector<int> degree_sequence(const ZdGraph& g);

// Undirected induced subgraph on the given vertices (order defines the new
// labels 0..k-1).
ZdGraph induced_subgraph(const ZdGraph& g, const std::vector<int>& verts);

// Complement of the undirected view (emitted with symmetric arcs).
ZdGraph complement(const ZdGraph& g);

// Reference constructions, all with symmetric arcs.
ZdGraph empty_graph(int n);
ZdGraph complete_graph(int n);
ZdGraph complete_bipartite(int m, int p);
ZdGraph disjoint_union(const ZdGraph& a, const ZdGraph& b);
// Join: a u b plus all edges between them.
ZdGraph join(const ZdGraph& a, const ZdGraph& b);

// The three undirected shapes the truncated constructions are expected to
// realize, plus disjoint repetition.  Recognition works by degree partition
// followed by exhaustive intra/cross edge checks -- it never falls back to a
// generic isomorphism search, so a positive answer is a direct structural
// certificate.
struct GraphFamily {
    enum class Kind : uint8_t {
        CompleteBipartite,  // K_{m,p}
        CliqueJoinIndep,    // K_m * (p K1)
        CenterCliqueIndep,  // c K1 * (K_m u p K1)
    };
    Kind kind;
    int m = 0;       // clique side (or left side of the bipartite shape)
    int p = 0;       // independent side (or right side)
    int c = 0;       // center size, CenterCliqueIndep only
    int copies = 1;  // how many disjoint copies

    static GraphFamily bipartite(int m, int p) { return {Kind::CompleteBipartite, m, p, 0, 1}; }
    static GraphFamily clique_join_indep(int m, int p) { return {Kind::CliqueJoinIndep, m, p, 0, 1}; }
    static GraphFamily center_clique_indep(int c, int m, int p) {
        return {Kind::CenterCliqueIndep, m, p, c, 1};
    }
    GraphFamily repeated(int k) const {
        GraphFamily f = *this;
        f.copies = k;
        return f;
    }
    std::string describe() const;
};

bool matches_reference(const ZdGraph& g, const GraphFamily& fam);

}  // namespace zdg
