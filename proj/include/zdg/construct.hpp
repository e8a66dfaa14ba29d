#pragma once

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/matrix.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// Vertex of a truncated induced subgraph: the matrix itself plus the family
// provenance it was constructed from.  Provenance is what lets the verifier
// name components and locate the embedded clique without re-deriving t.
struct TcVertex {
    Mat2 m;
    TcFamily family;
    QuadInt t;       // affine parameter; for Infinity kept as 0
    QuadInt lambda;  // integer scalar, nonzero

    bool operator<(const TcVertex& o) const;
    bool operator==(const TcVertex& o) const { return m == o.m; }
};

// Which slice of the curve's vertex set a truncation takes.
enum class TruncCase : uint8_t {
    Gamma1,  // affine family at t = 0 together with the infinity family
    Gamma2,  // affine families at every unit parameter
    Full,    // union of the two
};

// A finite truncation: scalars run over the integer window [-level, level]
// minus zero, affine parameters over t_set, and the infinity family is
// optionally included.
struct TruncationSpec {
    RingDesc ring;
    int64_t level = 1;
    std::vector<QuadInt> t_set;
    bool include_infinity = false;
};

// Default affine parameter sets: {0} for Gamma1, the unit group for Gamma2.
std::vector<QuadInt> default_t_set(RingDesc ring, TruncCase c);

// Spec for one of the named cases at the given level (level >= 1).
TruncationSpec make_spec(RingDesc ring, TruncCase c, int64_t level);

// All vertices of the truncation, sorted by (family, t, lambda), duplicates
// impossible by construction.  Throws std::invalid_argument for level < 1.
std::vector<TcVertex> family_vertices(const TruncationSpec& spec);

// How two affine parameters relate in the directed graph.  Forward means a
// t-vertex annihilates an s-vertex on the right (arc t-vertex -> s-vertex);
// Backward the reverse.  The answer depends only on (t, s), never on the
// scalars; concretely: Forward iff 1 + t s^2 = 0, Backward iff 1 + s t^2 = 0.
enum class ArcClass : uint8_t { None, Forward, Backward, Both };

ArcClass adjacency_predicate(const QuadInt& t, const QuadInt& s);

// The truncation graph together with vertex provenance.
struct LabeledGraph {
    ZdGraph graph;
    std::vector<TcVertex> vertices;
};

// Builds the directed graph on the given vertices: arc u -> v iff the matrix
// product u*v vanishes.  `build_graph` runs the pair loop as an OpenMP
// kernel over rows; `build_graph_serial` is the plain reference loop kept for
// testing.  Both reject duplicate vertices (std::invalid_argument) and both
// produce identical graphs by construction.
ZdGraph build_graph(const std::vector<TcVertex>& vertices);
ZdGraph build_graph_serial(const std::vector<TcVertex>& vertices);

// Convenience: vertices + graph for a named case.
LabeledGraph build_truncation(RingDesc ring, TruncCase c, int64_t level);

}  // namespace zdg
