#pragma once

#include <string>

#include "zdg/construct.hpp"

namespace zdg {

struct ExportConfig {
    RingDesc ring;
    TruncCase tcase = TruncCase::Gamma1;
    int64_t level = 1;
    bool directed = false;  // when false, exports carry each edge once
};

std::string case_name(TruncCase c);
TruncCase case_from_name(const std::string& s);  // std::invalid_argument on junk

// Deterministic DOT text: vertices in label order with "t=...;λ=..." /
// "diag;λ=..." labels, edges (or arcs under directed) sorted.  Byte-identical
// across runs for the same input.
std::string to_dot(const LabeledGraph& lg, const ExportConfig& cfg);

// Deterministic JSON document:
//   { config, vertices: [{family, t, lambda, matrix}], arcs: [[u,v]...],
//     invariants: {cheap structural facts} }
// t is null for infinity-family vertices.  Under the undirected default,
// "arcs" lists each edge once with u < v.
std::string to_json(const LabeledGraph& lg, const ExportConfig& cfg);

struct ParsedBuild {
    ExportConfig config;
    LabeledGraph lg;
};

// Inverse of to_json, for round-tripping: parse(emit(x)) re-emits to the
// exact same bytes.  Malformed documents throw std::invalid_argument.
ParsedBuild parse_build_json(const std::string& text);

}  // namespace zdg
