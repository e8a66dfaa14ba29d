#include <algorithm>
#include <queue>
#include <vector>

#include "zdg/invariants.hpp"

namespace zdg {

namespace {

// Maximum number of internally vertex-disjoint s-t paths (Menger), computed
// as unit-capacity max-flow on the vertex-split digraph: every vertex v
// becomes v_in -> v_out with capacity 1 (infinite for s and t), every edge
// uv becomes u_out -> v_in and v_out -> u_in.  Augmentation stops once the
// flow reaches `cap` since the caller only needs min(flow, cap).
int disjoint_paths(const std::vector<Bitset>& adj, int n, int s, int t, int cap) {
    const int nn = 2 * n;  // node 2v = v_in, 2v+1 = v_out
    std::vector<std::vector<int>> capacity(nn, std::vector<int>(nn, 0));
    constexpr int kInf = 1 << 20;
    for (int v = 0; v < n; ++v) capacity[2 * v][2 * v + 1] = (v == s || v == t) ? kInf : 1;
    for (int u = 0; u < n; ++u) {
        for (int v = adj[u].next(0); v >= 0; v = adj[u].next(v + 1)) {
            capacity[2 * u + 1][2 * v] = kInf;  // edges are never the bottleneck
        }
    }
    const int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < cap) {
        // BFS for an augmenting path in the residual network.
        std::vector<int> parent(nn, -1);
        parent[source] = source;
        std::queue<int> q;
        q.push(source);
        while (!q.empty() && parent[sink] < 0) {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < nn; ++v) {
                if (parent[v] < 0 && capacity[u][v] > 0) {
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
        if (parent[sink] < 0) break;
        for (int v = sink; v != source; v = parent[v]) {
            capacity[parent[v]][v] -= 1;
            capacity[v][parent[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int vertex_connectivity(const ZdGraph& g) {
    const int n = g.n();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    std::vector<Bitset> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.und_row(v));
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = (adj[v].count() == n - 1);
    if (complete) return n - 1;
    // kappa = min over non-adjacent pairs of the max number of internally
    // disjoint paths between them (at least one such pair exists here).
    int best = n - 1;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (adj[u].test(v)) continue;
            best = std::min(best, disjoint_paths(adj, n, u, v, best));
        }
    }
    return best;
}

}  // namespace zdg
