#include "zdg/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace zdg {

bool TcVertex::operator<(const TcVertex& o) const {
    auto key = [](const TcVertex& v) {
        return std::make_tuple((int)v.family, v.t.a, v.t.b, v.lambda.a, v.lambda.b);
    };
    return key(*this) < key(o);
}

std::vector<QuadInt> default_t_set(RingDesc ring, TruncCase c) {
    switch (c) {
        case TruncCase::Gamma1:
            return {QuadInt::integer(0, ring)};
        case TruncCase::Gamma2:
            return units(ring);
        case TruncCase::Full: {
            std::vector<QuadInt> t = units(ring);
            t.push_back(QuadInt::integer(0, ring));
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    throw std::logic_error("unreachable");
}

TruncationSpec make_spec(RingDesc ring, TruncCase c, int64_t level) {
    if (level < 1) throw std::invalid_argument("truncation level must be >= 1");
    TruncationSpec s;
    s.ring = ring;
    s.level = level;
    s.t_set = default_t_set(ring, c);
    s.include_infinity = c != TruncCase::Gamma2;
    return s;
}

std::vector<TcVertex> family_vertices(const TruncationSpec& spec) {
    if (spec.level < 1) throw std::invalid_argument("truncation level must be >= 1");
    std::vector<QuadInt> ts = spec.t_set;
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (const QuadInt& t : ts) require_same_ring(t.ring, spec.ring);

    const RingDesc r = spec.ring;
    std::vector<TcVertex> out;
    for (const QuadInt& t : ts) {
        for (int64_t l = -spec.level; l <= spec.level; ++l) {
            if (l == 0) continue;
            const QuadInt lambda = QuadInt::integer(l, r);
            Mat2 m(lambda, lambda * t, lambda * t * t, lambda * t * t * t);
            out.push_back(TcVertex{m, TcFamily::Affine, t, lambda});
        }
    }
    if (spec.include_infinity) {
        const QuadInt zero = QuadInt::integer(0, r);
        for (int64_t l = -spec.level; l <= spec.level; ++l) {
            if (l == 0) continue;
            const QuadInt lambda = QuadInt::integer(l, r);
            out.push_back(TcVertex{Mat2(zero, zero, zero, lambda), TcFamily::Infinity, zero, lambda});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ArcClass adjacency_predicate(const QuadInt& t, const QuadInt& s) {
    require_same_ring(t.ring, s.ring);
    const QuadInt one = QuadInt::integer(1, t.ring);
    const bool forward = (one + t * s * s).is_zero();   // t-vertex annihilates s-vertex
    const bool backward = (one + s * t * t).is_zero();  // s-vertex annihilates t-vertex
    if (forward && backward) return ArcClass::Both;
    if (forward) return ArcClass::Forward;
    if (backward) return ArcClass::Backward;
    return ArcClass::None;
}

namespace {

void check_distinct(const std::vector<TcVertex>& vertices) {
    std::set<Mat2> seen;
    for (const TcVertex& v : vertices) {
        if (v.lambda.is_zero() || v.m.is_zero())
            throw std::invalid_argument("build_graph: zero scalar vertex");
        if (!seen.insert(v.m).second)
            throw std::invalid_argument("build_graph: duplicate vertex matrix");
    }
}

}  // namespace

ZdGraph build_graph(const std::vector<TcVertex>& vertices) {
    check_distinct(vertices);
    const int n = (int)vertices.size();
    std::vector<Bitset> rows(n, Bitset(n));
    // Each iteration owns its whole row, so the pair loop parallelizes with
    // no shared writes and the assembled graph is schedule-independent.
#pragma omp parallel for schedule(dynamic, 4)
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((vertices[u].m * vertices[v].m).is_zero()) rows[u].set(v);
        }
    }
    return ZdGraph(std::move(rows));
}

ZdGraph build_graph_serial(const std::vector<TcVertex>& vertices) {
    check_distinct(vertices);
    const int n = (int)vertices.size();
    ZdGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && (vertices[u].m * vertices[v].m).is_zero()) g.add_arc(u, v);
        }
    }
    return g;
}

LabeledGraph build_truncation(RingDesc ring, TruncCase c, int64_t level) {
    LabeledGraph lg;
    lg.vertices = family_vertices(make_spec(ring, c, level));
    lg.graph = build_graph(lg.vertices);
    return lg;
}

}  // namespace zdg
