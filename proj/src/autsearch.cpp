#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "zdg/autgroup.hpp"
#include "zdg/errors.hpp"

namespace zdg {

namespace {

// Equitable refinement of a coloring: vertices are repeatedly re-classed by
// (current color, sorted multiset of neighbor colors) until stable.  Class
// ids are ranks of the sorted signature keys, so two colorings of the same
// graph with matching class structure get matching ids -- which is what lets
// the search compare source and target sides by histogram.
std::vector<int> refine(const std::vector<Bitset>& adj, std::vector<int> color) {
    const int n = (int)color.size();
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    while (true) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> by_key;
        for (int v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (int u = adj[v].next(0); u >= 0; u = adj[v].next(u + 1)) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            by_key[{color[v], std::move(nb)}].push_back(v);
        }
        const int new_classes = (int)by_key.size();
        if (new_classes == classes) return color;  // keys refine old classes, so equal count = fixpoint
        int id = 0;
        for (const auto& [key, members] : by_key) {
            for (int v : members) color[v] = id;
            ++id;
        }
        classes = new_classes;
    }
}

std::vector<int> histogram(const std::vector<int>& color) {
    int classes = 0;
    for (int c : color) classes = std::max(classes, c + 1);
    std::vector<int> hist(classes, 0);
    for (int c : color) ++hist[c];
    return hist;
}

bool is_und_automorphism(const std::vector<Bitset>& adj, const Permutation& f) {
    const int n = (int)adj.size();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u].test(v) != adj[f(u)].test(f(v))) return false;
    return true;
}

struct AutSearch {
    const std::vector<Bitset>& adj;
    int n;
    long long budget;
    long long nodes = 0;
    std::vector<int> base;
    PermGroup group;
    bool group_based = false;  // chain rebuilt on the search base yet?

    enum class Res { Exhausted, Found };

    AutSearch(const std::vector<Bitset>& rows, int vertices, long long node_budget)
        : adj(rows), n(vertices), budget(node_budget), group(vertices) {}

    std::vector<int> individualize(std::vector<int> color, int v) const {
        int classes = 0;
        for (int c : color) classes = std::max(classes, c + 1);
        color[v] = classes;
        return refine(adj, std::move(color));
    }

    void record(const Permutation& f) {
        if (!group_based) {
            group = PermGroup(n, {}, base);
            group_based = true;
        }
        group.extend(f);
    }

    Res dfs(int level, const std::vector<int>& src, const std::vector<int>& tgt, bool on_spine) {
        if (++nodes > budget) throw resource_error("automorphism search: node budget exceeded");
        int classes = 0;
        for (int c : src) classes = std::max(classes, c + 1);
        if (classes == n) {
            // Discrete: read the map (same class id on both sides) and verify
            // it against the graph edge by edge -- refinement alone is not a
            // proof of anything.
            std::vector<int> pos_src(n), pos_tgt(n);
            for (int v = 0; v < n; ++v) {
                pos_src[src[v]] = v;
                pos_tgt[tgt[v]] = v;
            }
            Permutation f;
            f.img.resize(n);
            for (int c = 0; c < n; ++c) f.img[pos_src[c]] = pos_tgt[c];
            if (f.is_identity() || !is_und_automorphism(adj, f)) return Res::Exhausted;
            record(f);
            return Res::Found;
        }
        // Branch cell: smallest non-singleton class, lowest id on ties.
        std::vector<std::vector<int>> members(classes);
        for (int v = 0; v < n; ++v) members[src[v]].push_back(v);
        int cell = -1;
        for (int c = 0; c < classes; ++c) {
            if (members[c].size() < 2) continue;
            if (cell < 0 || members[c].size() < members[cell].size()) cell = c;
        }
        const int b = members[cell][0];
        if ((int)base.size() == level) base.push_back(b);  // first (spine) visit fixes the base
        const std::vector<int> src_child = individualize(src, b);
        const std::vector<int> src_hist = histogram(src_child);

        std::vector<int> candidates;
        for (int v = 0; v < n; ++v)
            if (tgt[v] == cell) candidates.push_back(v);
        std::vector<int> explored;
        for (int v : candidates) {
            if (on_spine && group_based) {
                // Candidates in the orbit of an already-explored one (under
                // the stabilizer of the base prefix) lead to cosets we have
                // generators for.
                const std::vector<int> orb = group.stabilizer_orbit(level, v);
                bool seen = false;
                for (int u : orb) {
                    if (std::find(explored.begin(), explored.end(), u) != explored.end()) {
                        seen = true;
                        break;
                    }
                }
                if (seen) {
                    explored.push_back(v);
                    continue;
                }
            }
            const std::vector<int> tgt_child = individualize(tgt, v);
            if (histogram(tgt_child) == src_hist) {
                const Res r = dfs(level + 1, src_child, tgt_child, on_spine && v == b);
                // Off the spine one automorphism per subtree suffices; unwind
                // to the deepest spine ancestor, which keeps iterating.
                if (r == Res::Found && !on_spine) return Res::Found;
            }
            explored.push_back(v);
        }
        return Res::Exhausted;
    }
};

}  // namespace

PermGroup automorphism_group(const ZdGraph& g, long long node_budget) {
    const int n = g.n();
    if (n == 0) return PermGroup(0);
    std::vector<Bitset> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.und_row(v));
    AutSearch search(adj, n, node_budget);
    const std::vector<int> root = refine(adj, std::vector<int>(n, 0));
    search.dfs(0, root, root, true);
    return search.group;
}

}  // namespace zdg
