#include <vector>

#include "zdg/invariants.hpp"

namespace zdg {

namespace {

// True when {a,b,c,d} induces a path on four vertices: exactly three edges
// and degree multiset {2,2,1,1} inside the quadruple.
bool induces_p4(const std::vector<Bitset>& adj, int a, int b, int c, int d) {
    const int q[4] = {a, b, c, d};
    int deg[4] = {0, 0, 0, 0};
    int edges = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (adj[q[i]].test(q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
            }
        }
    }
    if (edges != 3) return false;
    int ones = 0, twos = 0;
    for (int i = 0; i < 4; ++i) {
        if (deg[i] == 1) ++ones;
        if (deg[i] == 2) ++twos;
    }
    return ones == 2 && twos == 2;
}

std::vector<Bitset> und_rows(const ZdGraph& g) {
    std::vector<Bitset> adj;
    adj.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.und_row(v));
    return adj;
}

}  // namespace

bool is_cograph_serial(const ZdGraph& g) {
    const int n = g.n();
    const std::vector<Bitset> adj = und_rows(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (induces_p4(adj, a, b, c, d)) return false;
    return true;
}

bool is_cograph(const ZdGraph& g) {
    const int n = g.n();
    const std::vector<Bitset> adj = und_rows(g);
    bool found = false;
// Quadruples are independent of each other, so the scan splits cleanly over
// the outermost vertex.
#pragma omp parallel for schedule(dynamic) shared(found)
    for (int a = 0; a < n; ++a) {
        bool local = false;
        for (int b = a + 1; b < n && !local; ++b)
            for (int c = b + 1; c < n && !local; ++c)
                for (int d = c + 1; d < n && !local; ++d)
                    if (induces_p4(adj, a, b, c, d)) local = true;
        if (local) {
#pragma omp critical
            found = true;
        }
    }
    return !found;
}

namespace {

bool cograph_rec(const ZdGraph& g, const std::vector<int>& verts) {
    if (verts.size() <= 1) return true;
    const ZdGraph h = induced_subgraph(g, verts);
    const std::vector<std::vector<int>> comps = components(h);
    if (comps.size() > 1) {
        for (const std::vector<int>& comp : comps) {
            std::vector<int> sub;
            sub.reserve(comp.size());
            for (int v : comp) sub.push_back(verts[v]);
            if (!cograph_rec(g, sub)) return false;
        }
        return true;
    }
    // Connected: a cograph's complement must disconnect; recurse on the
    // pieces (as subsets of the original graph).
    const std::vector<std::vector<int>> cocomps = components(complement(h));
    if (cocomps.size() == 1) return false;
    for (const std::vector<int>& comp : cocomps) {
        std::vector<int> sub;
        sub.reserve(comp.size());
        for (int v : comp) sub.push_back(verts[v]);
        if (!cograph_rec(g, sub)) return false;
    }
    return true;
}

}  // namespace

bool is_cograph_recursive(const ZdGraph& g) {
    std::vector<int> all(g.n());
    for (int v = 0; v < g.n(); ++v) all[v] = v;
    return cograph_rec(g, all);
}

}  // namespace zdg
