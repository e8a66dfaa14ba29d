#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/construct.hpp"
#include "zdg/graph.hpp"

namespace zdg {

// Permutation of {0..n-1}, stored as the image vector.  Composition follows
// function application: (f*g)(p) = f(g(p)).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img(std::move(images)) {}
    static Permutation identity(int n);
    // Cycle notation helper for tests and generators: points not mentioned
    // are fixed.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);

    int degree() const { return (int)img.size(); }
    int operator()(int p) const { return img[p]; }
    bool is_identity() const;
    Permutation inverse() const;
    int parity() const;  // +1 even, -1 odd

    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
};

inline Permutation operator*(const Permutation& f, const Permutation& g) {
    Permutation r;
    r.img.resize(f.img.size());
    for (size_t p = 0; p < r.img.size(); ++p) r.img[p] = f.img[g.img[p]];
    return r;
}

// Permutation group given by generators, with a stabilizer chain (deterministic
// Schreier-Sims) built on construction.  Degrees here are graph-sized (tens),
// so the plain textbook algorithm is entirely adequate.
class PermGroup {
public:
    // Trivial group.
    explicit PermGroup(int degree);
    // Group generated by `gens`; `base_hint` forces the chain's first base
    // points (used by the automorphism search, whose pruning wants stabilizer
    // orbits along its own base).  Points in the hint with trivial orbit are
    // kept in the chain.
    PermGroup(int degree, std::vector<Permutation> gens, const std::vector<int>& base_hint = {});

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    // Exact order; throws std::overflow_error if it exceeds int64 (none of
    // the certified families get near that).
    int64_t order() const;

    bool contains(const Permutation& p) const;

    // Adds a generator (no-op when already contained), rebuilding the chain.
    void extend(const Permutation& p);

    // Orbit of a point under the subgroup stabilizing the first `fixed`
    // points of the chain's base pointwise.
    std::vector<int> stabilizer_orbit(int fixed, int point) const;

    const std::vector<int>& base() const { return base_; }

    // All elements, in a deterministic order.  Throws resource_error when the
    // order exceeds `limit`.
    std::vector<Permutation> elements(int64_t limit = 200'000) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;           // strong generators at this level
        std::vector<std::optional<Permutation>> transversal;  // rep mapping base_point -> gamma
        std::vector<int> orbit;                  // in discovery order
    };

    void rebuild(const std::vector<int>& base_hint);
    // Inserts a (non-identity) strong generator at the level of the first
    // base point it moves, appending a new base point when it fixes the whole
    // base; returns the insertion level.
    size_t insert_strong(Permutation p);
    // insert_strong followed by restoring chain completeness.
    void sift_in(Permutation p);
    void recompute_orbit(size_t level);
    // Re-checks every Schreier generator of `level`; on a nontrivial residue,
    // inserts it and returns the insertion level (the deepest dirty level).
    std::optional<size_t> verify_level(size_t level);
    Permutation sift(const Permutation& p, size_t from, size_t* stopped_at) const;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
    std::vector<int> base_;
};

// Node budget for the automorphism backtracking search.
inline constexpr long long kAutSearchNodeBudget = 5'000'000;

// Automorphism group of the undirected view, found by equitable-partition
// refinement with individualization backtracking.  Discovered automorphisms
// prune the search (orbit pruning along the identity spine, first-hit bailout
// off it), which is what makes the hugely symmetric truncation graphs cheap.
// Every map the search accepts is re-verified edge-by-edge before being used.
PermGroup automorphism_group(const ZdGraph& g, long long node_budget = kAutSearchNodeBudget);

// is_simple: boolean with a certificate.  Works on groups small enough to
// enumerate (order <= 100000): computes conjugacy classes, applies the
// class-sum divisor filter, and confirms any surviving candidate by normal
// closure.  For a non-simple group, witness_order holds the order of a proper
// nontrivial normal subgroup.
struct SimplicityResult {
    bool simple = false;
    int64_t order = 0;
    std::vector<int64_t> class_sizes;
    std::optional<int64_t> witness_order;
};

SimplicityResult is_simple(const PermGroup& g);

// Smallest-index bound J(G) = max over subgroups H of the minimal index
// [H : A] over abelian normal A of H.  Exact for abelian groups (1), simple
// groups (|G|), and beyond that by bounded brute force: subgroups enumerated
// as closures of generator subsets of size <= 3 over the element list
// (complete for groups whose subgroups are 3-generated, which covers
// everything this project certifies).  Groups too large for the brute-force
// route raise resource_error carrying the structural facts established so
// far (non-abelian, not simple, hence J >= 2).
int64_t jordan_constant_small(const PermGroup& g);

// Locates the 2n vertices of the affine family at t = -1 in a level-n
// truncation and returns the full symmetric group permuting them (as graph
// automorphisms fixing everything else).  Every generator is verified
// edge-by-edge on the directed graph; any failure — including a missing or
// wrongly sized clique family — is a contract_violation, since it falsifies
// the construction the caller relies on.
PermGroup embed_symmetric(const LabeledGraph& lg, int n);

// One level of the non-Jordan certificate: the alternating group on the
// embedded clique realized by verified graph automorphisms, its simplicity
// certified when small enough to enumerate, and the resulting lower bound.
struct NonJordanRow {
    int level = 0;            // truncation level n
    int points = 0;           // 2n clique vertices
    int64_t alt_order = 0;    // (2n)!/2
    bool simple_certified = false;
    int64_t bound = 0;        // alt_order, by subgroup monotonicity
};

// Rows for n = 3..n_max (n_max >= 3, else std::invalid_argument).  Bounds
// increase strictly with n, witnessing that no single finite bound works.
std::vector<NonJordanRow> non_jordan_report(RingDesc ring, int n_max);

}  // namespace zdg
