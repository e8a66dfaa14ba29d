// Acceptance harness: one line per criterion, PASS or FAIL, exit code = number
// of failures.  Every comparison here is exact (integers, booleans, frozen
// element lists); the only numeric tolerance in the project lives in the
// complex-embedding oracle used by the unit tests, not here.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "zdg/autgroup.hpp"
#include "zdg/construct.hpp"
#include "zdg/errors.hpp"
#include "zdg/geometry.hpp"
#include "zdg/graph.hpp"
#include "zdg/invariants.hpp"
#include "zdg/matrix.hpp"
#include "zdg/ring.hpp"
#include "zdg/serialize.hpp"

using zdg::LabeledGraph;
using zdg::Permutation;
using zdg::PermGroup;
using zdg::QuadInt;
using zdg::RingDesc;
using zdg::TcFamily;
using zdg::TcVertex;
using zdg::TruncCase;
using zdg::ZdGraph;

namespace {

struct Check {
    std::string label;
    std::function<void(std::string&)> run;  // throws (or appends to the error) on failure
};

// Failure reporting: accumulate the first mismatch into `err`; empty = pass.
#define EXPECT(cond, detail)                                        \
    do {                                                            \
        if (!(cond) && err.empty()) {                               \
            std::ostringstream os_;                                 \
            os_ << detail;                                          \
            err = os_.str();                                        \
        }                                                           \
    } while (0)

std::vector<QuadInt> coordinate_box(RingDesc ring, int64_t lo, int64_t hi) {
    std::vector<QuadInt> out;
    if (ring.form == zdg::RingForm::Rational) {
        for (int64_t a = lo; a <= hi; ++a) out.emplace_back(a, 0, ring);
    } else {
        for (int64_t a = lo; a <= hi; ++a)
            for (int64_t b = lo; b <= hi; ++b) out.emplace_back(a, b, ring);
    }
    return out;
}

using PairList = std::vector<std::pair<QuadInt, QuadInt>>;

PairList make_pairs(RingDesc ring,
                    const std::vector<std::pair<std::pair<int64_t, int64_t>, std::pair<int64_t, int64_t>>>& raw) {
    PairList out;
    for (const auto& [x, y] : raw)
        out.emplace_back(QuadInt(x.first, x.second, ring), QuadInt(y.first, y.second, ring));
    return out;
}

// ---------------------------------------------------------------- criterion 1
void c1_units(std::string& err) {
    for (int64_t d : {0, 1, 2, 3, 5, 6, 7, 10}) {
        RingDesc ring = RingDesc::of(d);
        std::vector<QuadInt> want_units;
        if (d == 1) {
            want_units = {QuadInt(-1, 0, ring), QuadInt(0, -1, ring), QuadInt(0, 1, ring),
                          QuadInt(1, 0, ring)};
        } else if (d == 3) {
            want_units = {QuadInt(-1, -1, ring), QuadInt(-1, 0, ring), QuadInt(0, -1, ring),
                          QuadInt(0, 1, ring),   QuadInt(1, 0, ring),  QuadInt(1, 1, ring)};
        } else {
            want_units = {QuadInt(-1, 0, ring), QuadInt(1, 0, ring)};
        }
        EXPECT(zdg::units(ring) == want_units, "units mismatch at d=" << d);

        PairList sq, ts;
        if (d == 1) {
            sq = make_pairs(ring, {{{-1, 0}, {-1, 0}}, {{0, -1}, {1, 0}}, {{0, 1}, {1, 0}}, {{1, 0}, {-1, 0}}});
            ts = make_pairs(ring, {{{-1, 0}, {-1, 0}}, {{-1, 0}, {1, 0}}, {{1, 0}, {0, -1}}, {{1, 0}, {0, 1}}});
        } else if (d == 3) {
            sq = make_pairs(ring, {{{-1, -1}, {1, 1}},
                                   {{-1, 0}, {-1, 0}},
                                   {{0, -1}, {0, -1}},
                                   {{0, 1}, {0, -1}},
                                   {{1, 0}, {-1, 0}},
                                   {{1, 1}, {1, 1}}});
            ts = make_pairs(ring, {{{-1, 0}, {-1, 0}},
                                   {{-1, 0}, {1, 0}},
                                   {{0, -1}, {0, -1}},
                                   {{0, -1}, {0, 1}},
                                   {{1, 1}, {-1, -1}},
                                   {{1, 1}, {1, 1}}});
        } else {
            sq = make_pairs(ring, {{{-1, 0}, {-1, 0}}, {{1, 0}, {-1, 0}}});
            ts = make_pairs(ring, {{{-1, 0}, {-1, 0}}, {{-1, 0}, {1, 0}}});
        }
        EXPECT(zdg::solve_unit_eq(ring, zdg::UnitEquation::SquareTimesY) == sq,
               "x^2 y = -1 solutions mismatch at d=" << d);
        EXPECT(zdg::solve_unit_eq(ring, zdg::UnitEquation::TimesYSquared) == ts,
               "x y^2 = -1 solutions mismatch at d=" << d);
    }
}

// Truncation whose parameter set is the default for the case extended by the
// [-2,2]^2 coordinate box (criteria 2 and 3 sample vertices this way).
LabeledGraph boxed_truncation(RingDesc ring, TruncCase c, int64_t level) {
    zdg::TruncationSpec spec = zdg::make_spec(ring, c, level);
    for (const QuadInt& t : coordinate_box(ring, -2, 2)) spec.t_set.push_back(t);
    LabeledGraph lg;
    lg.vertices = zdg::family_vertices(spec);
    lg.graph = zdg::build_graph(lg.vertices);
    return lg;
}

// ---------------------------------------------------------------- criterion 2
void c2_geometry(std::string& err) {
    for (int64_t d : {0, 1, 2, 3, 5}) {
        RingDesc ring = RingDesc::of(d);
        const QuadInt zero = QuadInt::integer(0, ring);
        const QuadInt one = QuadInt::integer(1, ring);
        for (int64_t level = 1; level <= 3; ++level) {
            for (TruncCase c : {TruncCase::Gamma1, TruncCase::Gamma2, TruncCase::Full}) {
                const LabeledGraph lg = boxed_truncation(ring, c, level);
                for (const TcVertex& v : lg.vertices) {
                    const zdg::ProjPoint3 img = zdg::phi(v.m);
                    EXPECT(zdg::on_segre(img),
                           "vertex off the quadric: d=" << d << " level=" << level);
                    const zdg::ProjPoint3 curve_point =
                        v.family == TcFamily::Affine ? zdg::nu(one, v.t) : zdg::nu(zero, one);
                    EXPECT(zdg::proj_eq(img, curve_point),
                           "vertex not on the curve image: d=" << d << " level=" << level);
                }
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 3
void c3_decomposition(std::string& err) {
    for (int64_t d : {0, 1, 2, 3, 5}) {
        RingDesc ring = RingDesc::of(d);
        for (int64_t level : {1, 2}) {
            const LabeledGraph lg = boxed_truncation(ring, TruncCase::Full, level);

            // Expected partition from provenance: {t=0 union infinity}, unit
            // parameters grouped with their negatives, every other t isolated.
            std::set<std::vector<int>> expected;
            std::vector<int> zero_inf;
            std::vector<std::pair<QuadInt, std::vector<int>>> unit_groups;
            for (size_t i = 0; i < lg.vertices.size(); ++i) {
                const TcVertex& v = lg.vertices[i];
                if (v.family == TcFamily::Infinity || v.t.is_zero()) {
                    zero_inf.push_back((int)i);
                } else if (v.t.is_unit()) {
                    const QuadInt key = std::min(v.t, -v.t);
                    bool found = false;
                    for (auto& [k, members] : unit_groups) {
                        if (k == key) {
                            members.push_back((int)i);
                            found = true;
                        }
                    }
                    if (!found) unit_groups.push_back({key, {(int)i}});
                } else {
                    expected.insert({(int)i});  // isolated
                    EXPECT(lg.graph.degree((int)i) == 0,
                           "non-unit parameter vertex not isolated: d=" << d);
                }
            }
            expected.insert(zero_inf);
            if (d == 3) {
                EXPECT(unit_groups.size() == 3, "d=3 should give three unit pairs");
                for (auto& [k, members] : unit_groups) expected.insert(members);
            } else {
                // One component holding every unit parameter.
                std::vector<int> all_units;
                for (auto& [k, members] : unit_groups)
                    all_units.insert(all_units.end(), members.begin(), members.end());
                std::sort(all_units.begin(), all_units.end());
                expected.insert(all_units);
            }

            const auto comps = zdg::components(lg.graph);
            const std::set<std::vector<int>> got(comps.begin(), comps.end());
            EXPECT(got == expected, "component partition mismatch: d=" << d << " level=" << level);

            int nontrivial = 0;
            for (const auto& comp : comps)
                if (comp.size() > 1) ++nontrivial;
            EXPECT(nontrivial == (d == 3 ? 4 : 2),
                   "nontrivial component count: d=" << d << " got " << nontrivial);
        }
    }
}

// ------------------------------------------------------- criteria 4, 5 and 6
struct FamilyExpectation {
    int64_t d;
    int n;
    TruncCase c;
    zdg::GraphFamily shape;
    int64_t edges;
    std::vector<int> degseq;
    int girth;
    int chi;
    int omega;
    int alpha;
    int kappa;                     // whole graph
    std::vector<int> comp_kappa;   // per component
};

std::vector<FamilyExpectation> family_table() {
    std::vector<FamilyExpectation> rows;
    for (int64_t d : {2, 1, 3}) {
        for (int n = 1; n <= 3; ++n) {
            // The bipartite case looks the same over every ring.
            rows.push_back({d, n, TruncCase::Gamma1, zdg::GraphFamily::bipartite(2 * n, 2 * n),
                            4LL * n * n, std::vector<int>(4 * n, 2 * n), 4, 2, 2, 2 * n, 2 * n,
                            {2 * n}});
            FamilyExpectation g2;
            g2.d = d;
            g2.n = n;
            g2.c = TruncCase::Gamma2;
            g2.girth = 3;
            g2.chi = 2 * n + 1;
            g2.omega = 2 * n + 1;
            if (d == 1) {
                g2.shape = zdg::GraphFamily::center_clique_indep(2 * n, 2 * n, 4 * n);
                g2.edges = 14LL * n * n - n;
                g2.degseq.assign(2 * n, 6 * n);
                g2.degseq.insert(g2.degseq.end(), 2 * n, 4 * n - 1);
                g2.degseq.insert(g2.degseq.end(), 4 * n, 2 * n);
                g2.alpha = 4 * n + 1;
                g2.kappa = 2 * n;
                g2.comp_kappa = {2 * n};
            } else if (d == 3) {
                g2.shape = zdg::GraphFamily::clique_join_indep(2 * n, 2 * n).repeated(3);
                g2.edges = 18LL * n * n - 3 * n;
                g2.degseq.assign(6 * n, 4 * n - 1);
                g2.degseq.insert(g2.degseq.end(), 6 * n, 2 * n);
                g2.alpha = 6 * n;
                g2.kappa = 0;  // three components
                g2.comp_kappa = {2 * n, 2 * n, 2 * n};
            } else {
                g2.shape = zdg::GraphFamily::clique_join_indep(2 * n, 2 * n);
                g2.edges = 6LL * n * n - n;
                g2.degseq.assign(2 * n, 4 * n - 1);
                g2.degseq.insert(g2.degseq.end(), 2 * n, 2 * n);
                g2.alpha = 2 * n;
                g2.kappa = 2 * n;
                g2.comp_kappa = {2 * n};
            }
            std::sort(g2.degseq.rbegin(), g2.degseq.rend());
            rows.push_back(std::move(g2));
        }
    }
    return rows;
}

void c4_invariants(std::string& err) {
    for (const FamilyExpectation& e : family_table()) {
        const ZdGraph g = zdg::build_truncation(RingDesc::of(e.d), e.c, e.n).graph;
        const std::string tag = "d=" + std::to_string(e.d) + " case=" + zdg::case_name(e.c) +
                                " n=" + std::to_string(e.n);
        const auto gr = zdg::girth(g);
        EXPECT(gr.has_value() && *gr == e.girth, "girth " << tag);
        EXPECT(zdg::chromatic_number(g) == e.chi, "chromatic number " << tag);
        EXPECT(zdg::clique_number(g) == e.omega, "clique number " << tag);
        EXPECT(zdg::independence_number(g) == e.alpha, "independence number " << tag);
        EXPECT(zdg::vertex_connectivity(g) == e.kappa, "connectivity " << tag);
        std::vector<int> ck;
        for (const auto& comp : zdg::components(g))
            ck.push_back(zdg::vertex_connectivity(zdg::induced_subgraph(g, comp)));
        EXPECT(ck == e.comp_kappa, "per-component connectivity " << tag);
        EXPECT(zdg::is_cograph(g) && zdg::is_cograph_recursive(g), "cograph " << tag);
    }
}

void c5_structure(std::string& err) {
    for (const FamilyExpectation& e : family_table()) {
        const ZdGraph g = zdg::build_truncation(RingDesc::of(e.d), e.c, e.n).graph;
        const std::string tag = "d=" + std::to_string(e.d) + " case=" + zdg::case_name(e.c) +
                                " n=" + std::to_string(e.n);
        EXPECT(zdg::matches_reference(g, e.shape), "shape " << tag << " should be " << e.shape.describe());
        EXPECT(g.edge_count() == e.edges,
               "edge count " << tag << ": expected " << e.edges << ", got " << g.edge_count());
        EXPECT(zdg::degree_sequence(g) == e.degseq, "degree sequence " << tag);
    }
}

void c6_planarity(std::string& err) {
    for (int64_t d : {2, 1, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (TruncCase c : {TruncCase::Gamma1, TruncCase::Gamma2}) {
                const ZdGraph g = zdg::build_truncation(RingDesc::of(d), c, n).graph;
                EXPECT(zdg::is_planar(g) == (n == 1),
                       "planarity d=" << d << " case=" << zdg::case_name(c) << " n=" << n
                                      << ": expected " << (n == 1 ? "planar" : "non-planar"));
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 7
void c7_aut_orders(std::string& err, std::string& note) {
    struct AutCase {
        int64_t d;
        TruncCase c;
        int n;
        int64_t order;
    };
    const std::vector<AutCase> required = {
        {2, TruncCase::Gamma1, 1, 8},   {2, TruncCase::Gamma1, 2, 1152},
        {2, TruncCase::Gamma2, 1, 4},   {1, TruncCase::Gamma2, 1, 96},
        {3, TruncCase::Gamma2, 1, 384}, {2, TruncCase::Gamma2, 2, 576},
    };
    for (const AutCase& a : required) {
        const ZdGraph g = zdg::build_truncation(RingDesc::of(a.d), a.c, a.n).graph;
        const int64_t got = zdg::automorphism_group(g).order();
        EXPECT(got == a.order, "aut order d=" << a.d << " case=" << zdg::case_name(a.c)
                                              << " n=" << a.n << ": expected " << a.order
                                              << ", got " << got);
    }
    // Larger level-2 cases: attempted, allowed to degrade to a resource note.
    const std::vector<AutCase> attempted = {
        {1, TruncCase::Gamma2, 2, 23224320},     // (4!)^2 * 8!
        {3, TruncCase::Gamma2, 2, 1146617856},   // (4!)^6 * 3!
    };
    for (const AutCase& a : attempted) {
        const ZdGraph g = zdg::build_truncation(RingDesc::of(a.d), a.c, a.n).graph;
        try {
            const int64_t got = zdg::automorphism_group(g).order();
            EXPECT(got == a.order, "aut order d=" << a.d << " n=2: expected " << a.order
                                                  << ", got " << got);
        } catch (const zdg::resource_error&) {
            note += (note.empty() ? "" : "; ");
            note += "d=" + std::to_string(a.d) + " n=2 skipped on budget";
        }
    }
}

// ---------------------------------------------------------------- criterion 8
void c8_jordan(std::string& err) {
    auto alternating = [](int n) {
        std::vector<Permutation> gens;
        for (int k = 2; k < n; ++k) gens.push_back(Permutation::from_cycle(n, {0, 1, k}));
        return PermGroup(n, gens);
    };
    const PermGroup s4(4, {Permutation::from_cycle(4, {0, 1}), Permutation::from_cycle(4, {0, 1, 2, 3})});
    const PermGroup s3(3, {Permutation::from_cycle(3, {0, 1}), Permutation::from_cycle(3, {0, 1, 2})});
    const PermGroup c6(6, {Permutation::from_cycle(6, {0, 1, 2, 3, 4, 5})});

    EXPECT(is_simple(alternating(5)).simple, "A5 should certify simple");
    EXPECT(is_simple(alternating(6)).simple, "A6 should certify simple");
    EXPECT(is_simple(alternating(8)).simple, "A8 should certify simple");
    EXPECT(!is_simple(s4).simple, "S4 should certify non-simple");
    EXPECT(!is_simple(c6).simple, "C6 should certify non-simple");

    EXPECT(zdg::jordan_constant_small(alternating(5)) == 60, "bound of A5 should be 60");
    EXPECT(zdg::jordan_constant_small(c6) == 1, "bound of an abelian group should be 1");
    EXPECT(zdg::jordan_constant_small(s3) == 2, "bound of S3 should be 2");

    // Verified symmetric actions on the embedded clique, every d class, n <= 4.
    for (int64_t d : {2, 1, 3}) {
        for (int n = 1; n <= 4; ++n) {
            const LabeledGraph lg = zdg::build_truncation(RingDesc::of(d), TruncCase::Gamma2, n);
            try {
                const PermGroup sym = zdg::embed_symmetric(lg, n);
                int64_t want = 1;
                for (int k = 2; k <= 2 * n; ++k) want *= k;
                EXPECT(sym.order() == want, "embedded group order d=" << d << " n=" << n);
            } catch (const zdg::contract_violation& cv) {
                EXPECT(false, "embedding failed to verify at d=" << d << " n=" << n << ": "
                                                                 << cv.what());
            }
        }
    }

    const auto rows = zdg::non_jordan_report(RingDesc::of(2), 4);
    EXPECT(rows.size() == 2, "expected bound rows for n = 3 and 4");
    if (rows.size() == 2) {
        EXPECT(rows[0].bound == 360 && rows[1].bound == 20160,
               "bounds should be 360 and 20160, got " << rows[0].bound << " and " << rows[1].bound);
        EXPECT(rows[0].bound < rows[1].bound, "bounds should strictly increase");
        EXPECT(rows[0].simple_certified && rows[1].simple_certified,
               "alternating groups on 6 and 8 points should certify simple");
    }
}

// ---------------------------------------------------------------- criterion 9
void c9_oracles(std::string& err) {
    std::vector<ZdGraph> deck;
    auto cycle = [](int n) {
        ZdGraph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    };
    deck.push_back(cycle(4));
    deck.push_back(cycle(5));
    deck.push_back(cycle(7));
    deck.push_back(zdg::complete_graph(5));
    deck.push_back(zdg::empty_graph(6));
    deck.push_back(zdg::complete_bipartite(3, 3));
    deck.push_back(zdg::join(zdg::complete_graph(3), zdg::empty_graph(3)));
    {
        ZdGraph pet(10);
        for (int i = 0; i < 5; ++i) {
            pet.add_edge(i, (i + 1) % 5);
            pet.add_edge(i, i + 5);
            pet.add_edge(i + 5, (i + 2) % 5 + 5);
        }
        deck.push_back(pet);
    }
    // Truncations small enough for the brute-force references.
    deck.push_back(zdg::build_truncation(RingDesc::of(2), TruncCase::Gamma1, 1).graph);
    deck.push_back(zdg::build_truncation(RingDesc::of(2), TruncCase::Gamma1, 2).graph);
    deck.push_back(zdg::build_truncation(RingDesc::of(2), TruncCase::Gamma2, 1).graph);
    deck.push_back(zdg::build_truncation(RingDesc::of(1), TruncCase::Gamma2, 1).graph);
    deck.push_back(zdg::build_truncation(RingDesc::of(2), TruncCase::Full, 1).graph);
    for (uint64_t seed = 1; seed <= 50; ++seed)
        deck.push_back(oracle::random_graph(5 + (int)(seed % 5), 0.2 + 0.012 * (double)seed, seed));

    for (size_t i = 0; i < deck.size(); ++i) {
        const ZdGraph& g = deck[i];
        EXPECT(zdg::chromatic_number(g) == oracle::brute_chromatic(g),
               "chromatic number disagrees with brute force on deck graph " << i);
        EXPECT(zdg::clique_number(g) == oracle::brute_clique(g),
               "clique number disagrees with brute force on deck graph " << i);
        EXPECT(zdg::independence_number(g) == oracle::brute_independence(g),
               "independence number disagrees with brute force on deck graph " << i);
    }
}

// --------------------------------------------------------------- criterion 10
void c10_negative_control(std::string& err) {
    const std::string out_path = "/tmp/zdg_acceptance_tamper.txt";
    const std::string cmd = std::string(ZDGRAPH_BIN) +
                            " verify --d 2 --n 2 --case gamma2 --drop-edge 0:1 > " + out_path +
                            " 2>&1";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    EXPECT(code == 1, "tampered verify should exit 1, got " << code);
    std::string output;
    {
        FILE* f = std::fopen(out_path.c_str(), "rb");
        EXPECT(f != nullptr, "missing output capture");
        if (f) {
            char buf[4096];
            size_t got;
            while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) output.append(buf, got);
            std::fclose(f);
        }
    }
    std::remove(out_path.c_str());
    EXPECT(output.find("FAIL edge_count") != std::string::npos,
           "tampered verify should name the mismatched invariant");
    EXPECT(output.find("VERDICT: FAIL") != std::string::npos,
           "tampered verify should render a failing verdict");
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"unit groups and unit-equation solution sets (8 rings, exact)", c1_units},
        {"every constructed vertex lies on the quadric and the curve image (exact)", c2_geometry},
        {"component decomposition and isolated non-unit parameters (exact)", c3_decomposition},
        {"girth/chromatic/clique/independence/connectivity/cograph table (exact)", c4_invariants},
        {"recognized shapes, edge counts and degree sequences (exact)", c5_structure},
        {"planar exactly at level 1, all families (exact)", c6_planarity},
        {"", nullptr},  // placeholder; criterion 7 handled below for its note
        {"simplicity, bound constants, verified embeddings, growing bounds (exact)", c8_jordan},
        {"search invariants equal brute force on the small deck (exact)", c9_oracles},
        {"tampered truncation fails verification with a named mismatch", c10_negative_control},
    };

    int failures = 0;
    for (size_t i = 0; i < checks.size(); ++i) {
        const int number = (int)i + 1;
        std::string err, note;
        std::string label = checks[i].label;
        try {
            if (number == 7) {
                label = "automorphism group orders from the refinement engine (exact)";
                c7_aut_orders(err, note);
            } else {
                checks[i].run(err);
            }
        } catch (const std::exception& e) {
            if (err.empty()) err = std::string("exception: ") + e.what();
        }
        if (err.empty()) {
            std::printf("PASS  criterion %d: %s%s%s\n", number, label.c_str(),
                        note.empty() ? "" : " — ", note.c_str());
        } else {
            ++failures;
            std::printf("FAIL  criterion %d: %s — %s\n", number, label.c_str(), err.c_str());
        }
    }
    if (failures == 0) {
        std::printf("all %d acceptance criteria hold\n", (int)checks.size());
    } else {
        std::printf("%d of %d acceptance criteria failed\n", failures, (int)checks.size());
    }
    return failures;
}
