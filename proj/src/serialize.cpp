#include "zdg/serialize.hpp"

#include <json.hpp>

#include <stdexcept>

namespace zdg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json quadint_json(const QuadInt& q) { return ordered_json::array({q.a, q.b}); }

QuadInt quadint_from(const ordered_json& j, RingDesc ring) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw std::invalid_argument("malformed ring element");
    return QuadInt(j[0].get<int64_t>(), j[1].get<int64_t>(), ring);
}

}  // namespace

std::string case_name(TruncCase c) {
    switch (c) {
        case TruncCase::Gamma1: return "gamma1";
        case TruncCase::Gamma2: return "gamma2";
        case TruncCase::Full: return "full";
    }
    throw std::invalid_argument("unknown truncation case");
}

TruncCase case_from_name(const std::string& s) {
    if (s == "gamma1") return TruncCase::Gamma1;
    if (s == "gamma2") return TruncCase::Gamma2;
    if (s == "full") return TruncCase::Full;
    throw std::invalid_argument("unknown truncation case: " + s);
}

std::string to_dot(const LabeledGraph& lg, const ExportConfig& cfg) {
    std::string out;
    out += cfg.directed ? "digraph zdg {\n" : "graph zdg {\n";
    for (size_t i = 0; i < lg.vertices.size(); ++i) {
        const TcVertex& v = lg.vertices[i];
        out += "  " + std::to_string(i) + " [label=\"";
        if (v.family == TcFamily::Affine) {
            out += "t=" + to_string(v.t) + ";λ=" + to_string(v.lambda);
        } else {
            out += "diag;λ=" + to_string(v.lambda);
        }
        out += "\"];\n";
    }
    const int n = lg.graph.n();
    if (cfg.directed) {
        for (int u = 0; u < n; ++u) {
            const Bitset row = lg.graph.out_row(u);
            for (int v = row.next(0); v >= 0; v = row.next(v + 1))
                out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
        }
    } else {
        for (int u = 0; u < n; ++u) {
            const Bitset row = lg.graph.und_row(u);
            for (int v = row.next(u + 1); v >= 0; v = row.next(v + 1))
                out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string to_json(const LabeledGraph& lg, const ExportConfig& cfg) {
    ordered_json doc;
    doc["config"] = {{"d", cfg.ring.d},
                     {"case", case_name(cfg.tcase)},
                     {"level", cfg.level},
                     {"directed", cfg.directed}};
    ordered_json verts = ordered_json::array();
    for (const TcVertex& v : lg.vertices) {
        ordered_json jv;
        jv["family"] = v.family == TcFamily::Affine ? "affine" : "infinity";
        jv["t"] = v.family == TcFamily::Affine ? quadint_json(v.t) : ordered_json(nullptr);
        jv["lambda"] = quadint_json(v.lambda);
        jv["matrix"] = ordered_json::array(
            {quadint_json(v.m.e00), quadint_json(v.m.e01), quadint_json(v.m.e10), quadint_json(v.m.e11)});
        verts.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(verts);
    ordered_json arcs = ordered_json::array();
    const int n = lg.graph.n();
    if (cfg.directed) {
        for (int u = 0; u < n; ++u) {
            const Bitset row = lg.graph.out_row(u);
            for (int v = row.next(0); v >= 0; v = row.next(v + 1)) arcs.push_back({u, v});
        }
    } else {
        for (int u = 0; u < n; ++u) {
            const Bitset row = lg.graph.und_row(u);
            for (int v = row.next(u + 1); v >= 0; v = row.next(v + 1)) arcs.push_back({u, v});
        }
    }
    doc["arcs"] = std::move(arcs);
    // The invariants describe the exported object: under the undirected
    // default that is the symmetrized view, whose arc count is twice the edge
    // count regardless of how lopsided the underlying relation was.  Keeping
    // it this way makes parse -> re-emit byte-identical in both modes.
    const int64_t arc_count = cfg.directed ? lg.graph.arc_count() : 2 * lg.graph.edge_count();
    doc["invariants"] = {{"vertex_count", lg.graph.n()},
                         {"arc_count", arc_count},
                         {"edge_count", lg.graph.edge_count()},
                         {"components", components(lg.graph).size()}};
    return doc.dump(2) + "\n";
}

ParsedBuild parse_build_json(const std::string& text) {
    try {
        const ordered_json doc = ordered_json::parse(text);
        ParsedBuild out;
        const ordered_json& cfg = doc.at("config");
        out.config.ring = RingDesc::of(cfg.at("d").get<int64_t>());
        out.config.tcase = case_from_name(cfg.at("case").get<std::string>());
        out.config.level = cfg.at("level").get<int64_t>();
        out.config.directed = cfg.at("directed").get<bool>();

        const ordered_json& verts = doc.at("vertices");
        if (!verts.is_array()) throw std::invalid_argument("vertices must be an array");
        for (const ordered_json& jv : verts) {
            TcVertex v{Mat2::zero(out.config.ring), TcFamily::Affine, QuadInt::integer(0, out.config.ring),
                       QuadInt::integer(0, out.config.ring)};
            const std::string family = jv.at("family").get<std::string>();
            if (family == "affine") {
                v.family = TcFamily::Affine;
                v.t = quadint_from(jv.at("t"), out.config.ring);
            } else if (family == "infinity") {
                v.family = TcFamily::Infinity;
                if (!jv.at("t").is_null()) throw std::invalid_argument("infinity vertex with non-null t");
            } else {
                throw std::invalid_argument("unknown vertex family: " + family);
            }
            v.lambda = quadint_from(jv.at("lambda"), out.config.ring);
            const ordered_json& m = jv.at("matrix");
            if (!m.is_array() || m.size() != 4) throw std::invalid_argument("matrix must have 4 entries");
            v.m = Mat2(quadint_from(m[0], out.config.ring), quadint_from(m[1], out.config.ring),
                       quadint_from(m[2], out.config.ring), quadint_from(m[3], out.config.ring));
            out.lg.vertices.push_back(std::move(v));
        }

        ZdGraph g((int)out.lg.vertices.size());
        for (const ordered_json& arc : doc.at("arcs")) {
            if (!arc.is_array() || arc.size() != 2) throw std::invalid_argument("arc must be a pair");
            const int u = arc[0].get<int>();
            const int v = arc[1].get<int>();
            if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw std::invalid_argument("arc endpoint out of range");
            if (out.config.directed) {
                g.add_arc(u, v);
            } else {
                g.add_edge(u, v);
            }
        }
        out.lg.graph = std::move(g);
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed build document: ") + e.what());
    }
}

}  // namespace zdg
