#include "zdg/verify.hpp"

#include <json.hpp>

#include <string>

#include "zdg/errors.hpp"
#include "zdg/serialize.hpp"

namespace zdg {

namespace {

int64_t checked_factorial(int64_t n) {
    int64_t f = 1;
    for (int64_t k = 2; k <= n; ++k) f = checked_mul(f, k);
    return f;
}

enum class UnitClass { Generic, Gauss, Eisenstein };

UnitClass unit_class(RingDesc ring) {
    if (ring.d == 1) return UnitClass::Gauss;
    if (ring.d == 3) return UnitClass::Eisenstein;
    return UnitClass::Generic;
}

// Everything the construction predicts for a named case at level n.  All of
// it follows from the two-parameter adjacency rule: which unit parameters
// carry arcs is a unit-group question, so only the unit class of the ring
// matters, never d itself.
struct Expected {
    int64_t vertices = 0;
    int64_t edges = 0;
    std::vector<int> degseq;
    int comps = 1;
    GraphFamily fam = GraphFamily::bipartite(1, 1);
    int girth = 0;
    int chi = 0;
    int omega = 0;
    int alpha = 0;
    int kappa_whole = 0;
    std::vector<int> kappa_comps;
    bool planar = false;
    std::optional<int64_t> aut;  // empty when the closed form overflows int64
};

void append_run(std::vector<int>& seq, int value, int64_t count) {
    for (int64_t i = 0; i < count; ++i) seq.push_back(value);
}

Expected expected_for(RingDesc ring, TruncCase c, int n) {
    Expected e;
    const int64_t n64 = n;
    const UnitClass uc = unit_class(ring);
    auto aut_or_skip = [](auto compute) -> std::optional<int64_t> {
        try {
            return compute();
        } catch (const std::overflow_error&) {
            return std::nullopt;
        }
    };
    if (c == TruncCase::Gamma1) {
        // Complete bipartite between the t = 0 family and the infinity family.
        e.vertices = 4 * n64;
        e.edges = 4 * n64 * n64;
        append_run(e.degseq, 2 * n, 4 * n64);
        e.comps = 1;
        e.fam = GraphFamily::bipartite(2 * n, 2 * n);
        e.girth = 4;
        e.chi = e.omega = 2;
        e.alpha = 2 * n;
        e.kappa_whole = 2 * n;
        e.kappa_comps = {2 * n};
        e.planar = (n == 1);
        e.aut = aut_or_skip([&] {
            const int64_t f = checked_factorial(2 * n64);
            return checked_mul(checked_mul(f, f), (int64_t)2);
        });
        return e;
    }
    switch (uc) {
        case UnitClass::Generic:
            // K_{2n} on the clique parameter joined with 2n independents.
            e.vertices = 4 * n64;
            e.edges = 6 * n64 * n64 - n64;
            append_run(e.degseq, 4 * n - 1, 2 * n64);
            append_run(e.degseq, 2 * n, 2 * n64);
            e.comps = 1;
            e.fam = GraphFamily::clique_join_indep(2 * n, 2 * n);
            e.kappa_whole = 2 * n;
            e.kappa_comps = {2 * n};
            e.alpha = 2 * n;
            e.aut = aut_or_skip([&] {
                const int64_t f = checked_factorial(2 * n64);
                return checked_mul(f, f);
            });
            break;
        case UnitClass::Gauss:
            // Four unit parameters: one clique family, one joined family, two
            // families adjacent only to the joined one.
            e.vertices = 8 * n64;
            e.edges = 14 * n64 * n64 - n64;
            append_run(e.degseq, 6 * n, 2 * n64);
            append_run(e.degseq, 4 * n - 1, 2 * n64);
            append_run(e.degseq, 2 * n, 4 * n64);
            e.comps = 1;
            e.fam = GraphFamily::center_clique_indep(2 * n, 2 * n, 4 * n);
            e.kappa_whole = 2 * n;
            e.kappa_comps = {2 * n};
            e.alpha = 4 * n + 1;
            e.aut = aut_or_skip([&] {
                const int64_t f = checked_factorial(2 * n64);
                return checked_mul(checked_mul(f, f), checked_factorial(4 * n64));
            });
            break;
        case UnitClass::Eisenstein:
            // Six unit parameters in three +/- pairs, each pair its own
            // component of the generic shape.
            e.vertices = 12 * n64;
            e.edges = 18 * n64 * n64 - 3 * n64;
            append_run(e.degseq, 4 * n - 1, 6 * n64);
            append_run(e.degseq, 2 * n, 6 * n64);
            e.comps = 3;
            e.fam = GraphFamily::clique_join_indep(2 * n, 2 * n).repeated(3);
            e.kappa_whole = 0;  // disconnected
            e.kappa_comps = {2 * n, 2 * n, 2 * n};
            e.alpha = 6 * n;
            e.aut = aut_or_skip([&] {
                const int64_t f = checked_factorial(2 * n64);
                const int64_t f2 = checked_mul(f, f);
                const int64_t f6 = checked_mul(checked_mul(f2, f2), f2);
                return checked_mul(f6, (int64_t)6);
            });
            break;
    }
    e.girth = 3;
    e.chi = e.omega = 2 * n + 1;
    e.planar = (n == 1);
    return e;
}

std::string fmt_seq(const std::vector<int>& seq) {
    std::string s = "[";
    for (size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + std::to_string(seq[i]);
    return s + "]";
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

void add_row(VerifyReport& rep, const std::string& name, const std::string& expected,
             const std::string& computed) {
    rep.rows.push_back({name, expected, computed,
                        expected == computed ? RowStatus::Pass : RowStatus::Fail});
}

void add_skip(VerifyReport& rep, const std::string& name, const std::string& expected,
              const std::string& reason) {
    rep.rows.push_back({name, expected, reason, RowStatus::Skip});
}

}  // namespace

bool VerifyReport::all_pass() const {
    for (const VerifyRow& r : rows)
        if (r.status == RowStatus::Fail) return false;
    return true;
}

bool VerifyReport::any_fail() const { return !all_pass(); }

VerifyReport verify_built(RingDesc ring, TruncCase c, int n, const LabeledGraph& lg,
                          const VerifyOptions& opts) {
    if (c != TruncCase::Gamma1 && c != TruncCase::Gamma2)
        throw std::invalid_argument("verify only covers the gamma1 and gamma2 cases");
    if (n < 1) throw std::invalid_argument("level must be at least 1");
    VerifyReport rep;
    rep.d = ring.d;
    rep.n = n;
    rep.tcase = c;
    const Expected e = expected_for(ring, c, n);
    const ZdGraph& g = lg.graph;

    add_row(rep, "vertex_count", std::to_string(e.vertices), std::to_string(g.n()));
    add_row(rep, "edge_count", std::to_string(e.edges), std::to_string(g.edge_count()));
    add_row(rep, "degree_sequence", fmt_seq(e.degseq), fmt_seq(degree_sequence(g)));
    add_row(rep, "components", std::to_string(e.comps), std::to_string(components(g).size()));
    add_row(rep, "structure", e.fam.describe(),
            matches_reference(g, e.fam) ? e.fam.describe() : "no match");
    const std::optional<int> gi = girth(g);
    add_row(rep, "girth", std::to_string(e.girth), gi ? std::to_string(*gi) : "none");
    add_row(rep, "chromatic_number", std::to_string(e.chi),
            std::to_string(chromatic_number(g, opts.chromatic_budget)));
    add_row(rep, "clique_number", std::to_string(e.omega), std::to_string(clique_number(g)));
    add_row(rep, "independence_number", std::to_string(e.alpha),
            std::to_string(independence_number(g)));
    add_row(rep, "vertex_connectivity", std::to_string(e.kappa_whole),
            std::to_string(vertex_connectivity(g)));
    std::vector<int> kcomps;
    for (const std::vector<int>& comp : components(g))
        kcomps.push_back(vertex_connectivity(induced_subgraph(g, comp)));
    add_row(rep, "component_connectivity", fmt_seq(e.kappa_comps), fmt_seq(kcomps));
    add_row(rep, "planar", fmt_bool(e.planar), fmt_bool(is_planar(g)));
    add_row(rep, "cograph_scan", "true", fmt_bool(is_cograph(g)));
    add_row(rep, "cograph_recursive", "true", fmt_bool(is_cograph_recursive(g)));
    try {
        const int checked = perfect_sample_check(g, opts.perfect_samples, opts.seed);
        rep.rows.push_back({"perfect_sample", "chi=omega on all sampled subgraphs",
                            "holds on " + std::to_string(checked) + " subgraphs", RowStatus::Pass});
    } catch (const contract_violation& cv) {
        rep.rows.push_back(
            {"perfect_sample", "chi=omega on all sampled subgraphs", cv.what(), RowStatus::Fail});
    }
    const std::string aut_expected = e.aut ? std::to_string(*e.aut) : "beyond int64";
    if (!opts.attempt_aut) {
        add_skip(rep, "aut_order", aut_expected, "skipped by request");
    } else if (!e.aut) {
        add_skip(rep, "aut_order", aut_expected, "closed form exceeds int64; not attempted");
    } else {
        try {
            const PermGroup aut = automorphism_group(g, opts.aut_budget);
            add_row(rep, "aut_order", aut_expected, std::to_string(aut.order()));
        } catch (const resource_error& re) {
            add_skip(rep, "aut_order", aut_expected, std::string("budget exhausted: ") + re.what());
        }
    }
    return rep;
}

VerifyReport verify_truncation(RingDesc ring, TruncCase c, int n, const VerifyOptions& opts) {
    if (c != TruncCase::Gamma1 && c != TruncCase::Gamma2)
        throw std::invalid_argument("verify only covers the gamma1 and gamma2 cases");
    const TruncationSpec spec = make_spec(ring, c, n);
    const std::vector<TcVertex> verts = family_vertices(spec);
    LabeledGraph lg{build_graph(verts), verts};
    VerifyReport rep = verify_built(ring, c, n, lg, opts);
    // The parallel construction kernel against its serial reference, on the
    // graph actually being certified.
    VerifyRow kernel_row{"construction_kernels", "parallel == serial", "", RowStatus::Fail};
    kernel_row.computed =
        (lg.graph == build_graph_serial(verts)) ? "parallel == serial" : "kernels disagree";
    kernel_row.status =
        kernel_row.computed == kernel_row.expected ? RowStatus::Pass : RowStatus::Fail;
    rep.rows.insert(rep.rows.begin(), std::move(kernel_row));
    return rep;
}

std::string format_rows(const VerifyReport& report) {
    std::string out;
    for (const VerifyRow& r : report.rows) {
        switch (r.status) {
            case RowStatus::Pass:
                out += "PASS " + r.name + ": " + r.computed + "\n";
                break;
            case RowStatus::Fail:
                out += "FAIL " + r.name + ": expected " + r.expected + ", computed " + r.computed + "\n";
                break;
            case RowStatus::Skip:
                out += "SKIP " + r.name + ": " + r.computed + " (expected " + r.expected + ")\n";
                break;
        }
    }
    return out;
}

std::string verify_reports_to_json(const std::vector<VerifyReport>& reports) {
    nlohmann::ordered_json docs = nlohmann::ordered_json::array();
    for (const VerifyReport& rep : reports) {
        nlohmann::ordered_json jr;
        jr["config"] = {{"d", rep.d}, {"case", case_name(rep.tcase)}, {"level", rep.n}};
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const VerifyRow& r : rep.rows) {
            const char* status = r.status == RowStatus::Pass   ? "pass"
                                 : r.status == RowStatus::Fail ? "fail"
                                                               : "skip";
            rows.push_back({{"name", r.name},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"status", status}});
        }
        jr["rows"] = std::move(rows);
        jr["verdict"] = rep.all_pass() ? "pass" : "fail";
        docs.push_back(std::move(jr));
    }
    return docs.dump(2) + "\n";
}

}  // namespace zdg
