#include "zdg/invariants.hpp"

#include <algorithm>
#include <random>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

std::vector<Bitset> und_rows(const ZdGraph& g) {
    std::vector<Bitset> adj;
    adj.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) adj.push_back(g.und_row(v));
    return adj;
}

// Greedy clique by repeatedly taking the candidate with the most candidate
// neighbors; a cheap but useful lower bound seed.
int greedy_clique(const std::vector<Bitset>& adj, int n) {
    Bitset cand(n);
    for (int v = 0; v < n; ++v) cand.set(v);
    int size = 0;
    while (cand.any()) {
        int best = -1, best_deg = -1;
        for (int v = cand.next(0); v >= 0; v = cand.next(v + 1)) {
            Bitset inter = cand;
            inter &= adj[v];
            const int deg = inter.count();
            if (deg > best_deg) {
                best_deg = deg;
                best = v;
            }
        }
        ++size;
        cand &= adj[best];
    }
    return size;
}

struct CliqueSearch {
    const std::vector<Bitset>& adj;
    int n;
    long long budget;
    long long nodes = 0;
    int best = 0;

    // Branch and bound with a greedy-coloring bound (classes of the candidate
    // set); candidates are expanded in reverse color order so the bound
    // prunes whole tails at once.
    void expand(const Bitset& p, int rsize) {
        if (++nodes > budget) throw resource_error("clique search: node budget exceeded");
        if (p.none()) {
            best = std::max(best, rsize);
            return;
        }
        std::vector<int> order, color_of;
        Bitset uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset avail = uncolored;
            while (avail.any()) {
                const int v = avail.next(0);
                avail.reset(v);
                uncolored.reset(v);
                avail.and_not(adj[v]);
                order.push_back(v);
                color_of.push_back(color);
            }
        }
        Bitset cur = p;
        for (int i = (int)order.size() - 1; i >= 0; --i) {
            if (rsize + color_of[i] <= best) return;
            const int v = order[i];
            Bitset next = cur;
            next &= adj[v];
            expand(next, rsize + 1);
            cur.reset(v);
        }
    }
};

}  // namespace

int clique_number(const ZdGraph& g, long long node_budget) {
    if (g.n() == 0) return 0;
    const std::vector<Bitset> adj = und_rows(g);
    CliqueSearch s{adj, g.n(), node_budget};
    s.best = greedy_clique(adj, g.n()) - 1;  // strict improvement still finds the optimum
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    s.expand(all, 0);
    return s.best;
}

int independence_number(const ZdGraph& g, long long node_budget) {
    return clique_number(complement(g), node_budget);
}

namespace {

// DSATUR greedy coloring; returns the number of colors used.
int dsatur_bound(const std::vector<Bitset>& adj, int n) {
    std::vector<int> color(n, -1);
    std::vector<Bitset> forbidden(n, Bitset(n == 0 ? 1 : n));
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            const int sat = forbidden[v].count();
            const int deg = adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int c = 0;
        while (forbidden[pick].test(c)) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
        for (int u = adj[pick].next(0); u >= 0; u = adj[pick].next(u + 1)) {
            if (c < n) forbidden[u].set(c);
        }
    }
    return n == 0 ? 0 : used;
}

struct ColorSearch {
    const std::vector<Bitset>& adj;
    int n;
    long long budget;
    long long* nodes;
    int lb;
    int best;
    std::vector<int> color;

    void rec(int colored, int used) {
        if (++*nodes > budget) throw resource_error("chromatic search: node budget exceeded");
        if (best <= lb) return;  // optimum already certified
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        // DSATUR-style branching vertex: most distinct neighbor colors.
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            Bitset seen(best);
            int sat = 0;
            for (int u = adj[v].next(0); u >= 0; u = adj[v].next(u + 1)) {
                if (color[u] >= 0 && !seen.test(color[u])) {
                    seen.set(color[u]);
                    ++sat;
                }
            }
            const int deg = adj[v].count();
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        // Existing color classes first, then (at most) one fresh color; fresh
        // colors are interchangeable, so trying a single one is exhaustive.
        for (int c = 0; c < used; ++c) {
            bool ok = true;
            for (int u = adj[pick].next(0); u >= 0; u = adj[pick].next(u + 1)) {
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[pick] = c;
            rec(colored + 1, used);
            color[pick] = -1;
            if (best <= lb) return;
        }
        if (used + 1 < best) {
            color[pick] = used;
            rec(colored + 1, used + 1);
            color[pick] = -1;
        }
    }
};

int chromatic_of_connected(const ZdGraph& h, long long budget, long long* nodes) {
    const int n = h.n();
    if (n == 0) return 0;
    const std::vector<Bitset> adj = und_rows(h);
    const int lb = greedy_clique(adj, n);
    const int ub = dsatur_bound(adj, n);
    if (lb == ub) return ub;
    ColorSearch s{adj, n, budget, nodes, lb, ub, std::vector<int>(n, -1)};
    s.rec(0, 0);
    return s.best;
}

}  // namespace

int chromatic_number(const ZdGraph& g, long long node_budget) {
    // Components color independently; the budget is shared across them.
    long long nodes = 0;
    int chi = 0;
    for (const std::vector<int>& comp : components(g)) {
        chi = std::max(chi, chromatic_of_connected(induced_subgraph(g, comp), node_budget, &nodes));
    }
    return chi;
}

int perfect_sample_check(const ZdGraph& g, int samples, uint64_t seed) {
    const int n = g.n();
    auto check_subset = [&](const std::vector<int>& verts) {
        const ZdGraph h = induced_subgraph(g, verts);
        const int chi = chromatic_number(h);
        const int omega = clique_number(h);
        if (chi != omega) {
            std::string what = "chi != omega on induced subset {";
            for (size_t i = 0; i < verts.size(); ++i)
                what += (i ? "," : "") + std::to_string(verts[i]);
            what += "}: chi=" + std::to_string(chi) + " omega=" + std::to_string(omega);
            throw contract_violation(what);
        }
    };
    if (n <= 12) {
        // Small enough to take every induced subgraph.
        int checked = 0;
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
            std::vector<int> verts;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) verts.push_back(v);
            check_subset(verts);
            ++checked;
        }
        return checked;
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) verts.push_back(v);
        check_subset(verts);
    }
    return samples;
}

InvariantReport compute_invariants(const ZdGraph& g) {
    InvariantReport rep;
    rep.vertex_count = g.n();
    rep.edge_count = g.edge_count();
    rep.degree_sequence = degree_sequence(g);
    const std::vector<std::vector<int>> comps = components(g);
    for (const std::vector<int>& comp : comps) {
        const ZdGraph h = induced_subgraph(g, comp);
        rep.component_summaries.push_back({comp, h.edge_count()});
        rep.component_connectivity.push_back(vertex_connectivity(h));
    }
    rep.girth = girth(g);
    rep.chromatic_number = chromatic_number(g);
    rep.clique_number = clique_number(g);
    rep.independence_number = independence_number(g);
    rep.vertex_connectivity = vertex_connectivity(g);
    rep.planar = is_planar(g);
    rep.cograph = is_cograph(g);
    // The two cograph routes must always agree; a split would mean one of the
    // implementations is wrong, which no caller should paper over.
    if (rep.cograph != is_cograph_recursive(g))
        throw contract_violation("cograph routes disagree");
    return rep;
}

}  // namespace zdg
