#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/autgroup.hpp"
#include "zdg/construct.hpp"
#include "zdg/invariants.hpp"

namespace zdg {

struct VerifyOptions {
    uint64_t seed = 12345;          // for the chi = omega sampling
    int perfect_samples = 200;      // ignored when the graph is small enough to do all subsets
    long long chromatic_budget = kColoringNodeBudget;
    long long aut_budget = kAutSearchNodeBudget;
    bool attempt_aut = true;        // Aut rows degrade to Skip on budget exhaustion
};

enum class RowStatus : uint8_t { Pass, Fail, Skip };

// One named check: an invariant computed by the general algorithms compared
// against the closed form the construction predicts.
struct VerifyRow {
    std::string name;
    std::string expected;
    std::string computed;
    RowStatus status = RowStatus::Fail;
};

struct VerifyReport {
    int64_t d = 0;
    int n = 1;
    TruncCase tcase = TruncCase::Gamma1;
    std::vector<VerifyRow> rows;

    bool all_pass() const;  // Skip rows don't fail the report
    bool any_fail() const;
};

// Builds the truncation for (ring, c, n) and checks every predicted value:
// vertex/edge counts, degree sequence, structural shape, girth, chromatic,
// clique, independence, connectivity (per component when disconnected),
// planarity (iff n = 1), cograph on both routes, a chi = omega sample, and
// the automorphism group order.  c must be Gamma1 or Gamma2.
VerifyReport verify_truncation(RingDesc ring, TruncCase c, int n, const VerifyOptions& opts);

// Same checks against a caller-supplied graph (the CLI's fault-injection
// path and the tamper tests go through here).
VerifyReport verify_built(RingDesc ring, TruncCase c, int n, const LabeledGraph& lg,
                          const VerifyOptions& opts);

// One line per row, "PASS/FAIL/SKIP name: expected ... computed ...".
std::string format_rows(const VerifyReport& report);

// Deterministic JSON for a batch of reports ({config, rows, verdicts}).
std::string verify_reports_to_json(const std::vector<VerifyReport>& reports);

}  // namespace zdg
