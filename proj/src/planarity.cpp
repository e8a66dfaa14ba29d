#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "zdg/invariants.hpp"

namespace zdg {

bool is_planar(const ZdGraph& g) {
    const int n = g.n();
    if (n <= 4) return true;
    // Fast negative: a simple planar graph satisfies E <= 3V - 6.
    if (g.edge_count() > 3 * static_cast<int64_t>(n) - 6) return false;
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS> bg(n);
    for (int u = 0; u < n; ++u) {
        const Bitset row = g.und_row(u);
        for (int v = row.next(u + 1); v >= 0; v = row.next(v + 1)) {
            boost::add_edge(u, v, bg);
        }
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace zdg
