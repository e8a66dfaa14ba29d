#include <algorithm>
#include <set>
#include <unordered_map>
#include <vector>

#include "zdg/autgroup.hpp"
#include "zdg/bitset.hpp"
#include "zdg/errors.hpp"
#include "zdg/ring.hpp"

namespace zdg {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= (size_t)(uint32_t)x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// Smallest normal subgroup of g containing seed: close the generating set
// under conjugation by g's generators.
PermGroup normal_closure(const PermGroup& g, const Permutation& seed) {
    PermGroup n(g.degree(), std::vector<Permutation>{seed});
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Permutation> snapshot = n.generators();
        for (const Permutation& x : snapshot) {
            for (const Permutation& s : g.generators()) {
                const Permutation c = s.inverse() * x * s;
                if (!n.contains(c)) {
                    n.extend(c);
                    changed = true;
                }
            }
        }
    }
    return n;
}

}  // namespace

SimplicityResult is_simple(const PermGroup& g) {
    SimplicityResult res;
    res.order = g.order();
    if (res.order > 100'000) throw resource_error("simplicity check: order exceeds enumeration limit");
    const std::vector<Permutation> elems = g.elements(100'000);
    std::unordered_map<std::vector<int>, int, VecHash> index;
    index.reserve(elems.size() * 2);
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i].img] = (int)i;

    // Conjugacy classes by orbit of the conjugation action of the generators.
    std::vector<int> cls(elems.size(), -1);
    std::vector<std::vector<int>> classes;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (cls[i] >= 0) continue;
        const int id = (int)classes.size();
        classes.push_back({(int)i});
        cls[i] = id;
        for (size_t head = 0; head < classes[id].size(); ++head) {
            const Permutation& x = elems[classes[id][head]];
            for (const Permutation& s : g.generators()) {
                const Permutation c = s.inverse() * x * s;
                const int ci = index.at(c.img);
                if (cls[ci] < 0) {
                    cls[ci] = id;
                    classes[id].push_back(ci);
                }
            }
        }
    }
    for (const std::vector<int>& c : classes) res.class_sizes.push_back((int64_t)c.size());
    std::sort(res.class_sizes.begin(), res.class_sizes.end());

    if (res.order == 1) {
        res.simple = false;  // the trivial group is conventionally not simple
        return res;
    }

    // Necessary-condition filter: a normal subgroup is a union of conjugacy
    // classes containing the identity class, with total size a divisor of
    // |G|.  No qualifying union, no normal subgroup.
    std::vector<int64_t> nontrivial;
    for (const std::vector<int>& c : classes)
        if (!(c.size() == 1 && elems[c[0]].is_identity())) nontrivial.push_back((int64_t)c.size());
    bool candidate = false;
    if (nontrivial.size() <= 24) {
        for (uint64_t mask = 1; mask + 1 < (uint64_t(1) << nontrivial.size()); ++mask) {
            int64_t sum = 1;
            for (size_t b = 0; b < nontrivial.size(); ++b)
                if (mask >> b & 1) sum += nontrivial[b];
            if (sum > 1 && sum < res.order && res.order % sum == 0) {
                candidate = true;
                break;
            }
        }
        if (!candidate) {
            res.simple = true;
            return res;
        }
    }

    // Confirm the surviving candidates: G is non-simple exactly when some
    // non-identity element has a proper normal closure.
    for (const std::vector<int>& c : classes) {
        const Permutation& rep = elems[c[0]];
        if (rep.is_identity()) continue;
        const int64_t no = normal_closure(g, rep).order();
        if (no < res.order) {
            res.simple = false;
            res.witness_order = no;
            return res;
        }
    }
    res.simple = true;
    return res;
}

namespace {

constexpr int64_t kJordanBruteOrderCap = 128;
constexpr size_t kClosureBudget = 10'000;

// Closure of a seed set under the group multiplication table, as a sorted
// list of element indices.  (Positive words suffice in a finite group.)
std::vector<int> table_closure(const std::vector<int>& seed, const std::vector<std::vector<int>>& mul,
                               int identity_index) {
    std::vector<char> in(mul.size(), 0);
    std::vector<int> members{identity_index};
    in[identity_index] = 1;
    for (int s : seed) {
        if (!in[s]) {
            in[s] = 1;
            members.push_back(s);
        }
    }
    for (size_t head = 0; head < members.size(); ++head) {
        for (int s : seed) {
            const int p = mul[members[head]][s];
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
                if (members.size() > kClosureBudget) throw resource_error("subgroup closure budget exceeded");
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

int64_t jordan_constant_small(const PermGroup& g) {
    const int64_t order = g.order();
    const std::vector<Permutation>& gens = g.generators();
    bool abelian = true;
    for (size_t i = 0; i < gens.size() && abelian; ++i)
        for (size_t j = i + 1; j < gens.size() && abelian; ++j)
            abelian = (gens[i] * gens[j] == gens[j] * gens[i]);
    if (abelian) return 1;

    const SimplicityResult s = is_simple(g);
    if (s.simple) return order;

    if (order > kJordanBruteOrderCap) {
        throw resource_error(
            "jordan constant: brute force limited to order <= " + std::to_string(kJordanBruteOrderCap) +
            " (order " + std::to_string(order) + ", non-abelian, not simple; J >= 2)");
    }

    // Brute force.  Element list, multiplication and inverse tables.
    const std::vector<Permutation> elems = g.elements(kJordanBruteOrderCap);
    const int ne = (int)elems.size();
    std::unordered_map<std::vector<int>, int, VecHash> index;
    for (int i = 0; i < ne; ++i) index[elems[i].img] = i;
    int identity_index = -1;
    std::vector<std::vector<int>> mul(ne, std::vector<int>(ne));
    std::vector<int> inv(ne);
    for (int i = 0; i < ne; ++i) {
        if (elems[i].is_identity()) identity_index = i;
        inv[i] = index.at(elems[i].inverse().img);
        for (int j = 0; j < ne; ++j) mul[i][j] = index.at((elems[i] * elems[j]).img);
    }

    // Subgroups as closures of element subsets of size <= 3.
    std::set<std::vector<int>> subgroup_set;
    subgroup_set.insert({identity_index});
    for (int a = 0; a < ne; ++a) {
        subgroup_set.insert(table_closure({a}, mul, identity_index));
        for (int b = a + 1; b < ne; ++b) {
            subgroup_set.insert(table_closure({a, b}, mul, identity_index));
            for (int c = b + 1; c < ne; ++c) subgroup_set.insert(table_closure({a, b, c}, mul, identity_index));
        }
    }
    struct Sub {
        std::vector<int> members;
        Bitset mask;
        bool abelian;
    };
    std::vector<Sub> subs;
    subs.reserve(subgroup_set.size());
    for (const std::vector<int>& members : subgroup_set) {
        Bitset mask(ne);
        for (int m : members) mask.set(m);
        bool ab = true;
        for (size_t i = 0; i < members.size() && ab; ++i)
            for (size_t j = i + 1; j < members.size() && ab; ++j)
                ab = (mul[members[i]][members[j]] == mul[members[j]][members[i]]);
        subs.push_back({members, std::move(mask), ab});
    }

    int64_t jordan = 1;
    for (const Sub& h : subs) {
        int64_t best_abelian = 0;
        for (const Sub& a : subs) {
            if (!a.abelian || a.members.size() > h.members.size()) continue;
            if ((int64_t)a.members.size() <= best_abelian) continue;
            bool subset = true;
            for (int m : a.members) {
                if (!h.mask.test(m)) {
                    subset = false;
                    break;
                }
            }
            if (!subset) continue;
            bool normal = true;
            for (int hm : h.members) {
                for (int am : a.members) {
                    if (!a.mask.test(mul[mul[hm][am]][inv[hm]])) {
                        normal = false;
                        break;
                    }
                }
                if (!normal) break;
            }
            if (normal) best_abelian = (int64_t)a.members.size();
        }
        jordan = std::max(jordan, (int64_t)h.members.size() / best_abelian);
    }
    return jordan;
}

namespace {

int64_t checked_factorial(int64_t n) {
    int64_t f = 1;
    for (int64_t k = 2; k <= n; ++k) f = checked_mul(f, k);
    return f;
}

// Vertex indices of the affine t = -1 family, in vertex order (lambda
// ascending); exactly the 2n-clique the symmetric embedding acts on.
std::vector<int> clique_vertices(const LabeledGraph& lg) {
    std::vector<int> pts;
    for (size_t i = 0; i < lg.vertices.size(); ++i) {
        const TcVertex& v = lg.vertices[i];
        if (v.family == TcFamily::Affine && v.t.a == -1 && v.t.b == 0) pts.push_back((int)i);
    }
    return pts;
}

void verify_digraph_automorphism(const ZdGraph& g, const Permutation& f, const char* what) {
    for (int u = 0; u < g.n(); ++u) {
        for (int v = 0; v < g.n(); ++v) {
            if (u == v) continue;
            if (g.arc(u, v) != g.arc(f(u), f(v))) {
                throw contract_violation(std::string(what) + ": generator breaks adjacency at pair (" +
                                         std::to_string(u) + "," + std::to_string(v) + ")");
            }
        }
    }
}

}  // namespace

PermGroup embed_symmetric(const LabeledGraph& lg, int n) {
    if (n < 1) throw std::invalid_argument("embed_symmetric: n must be positive");
    const int deg = lg.graph.n();
    const std::vector<int> pts = clique_vertices(lg);
    if ((int)pts.size() != 2 * n) {
        throw contract_violation("embed_symmetric: expected " + std::to_string(2 * n) +
                                 " vertices at t = -1, found " + std::to_string(pts.size()));
    }
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (!lg.graph.arc(pts[i], pts[j]) || !lg.graph.arc(pts[j], pts[i]))
                throw contract_violation("embed_symmetric: t = -1 family is not a clique");
        }
    }
    std::vector<Permutation> gens;
    gens.push_back(Permutation::from_cycle(deg, {pts[0], pts[1]}));
    if (pts.size() > 2) gens.push_back(Permutation::from_cycle(deg, pts));
    for (const Permutation& p : gens) verify_digraph_automorphism(lg.graph, p, "embed_symmetric");
    PermGroup group(deg, gens);
    if (group.order() != checked_factorial(2 * n))
        throw contract_violation("embed_symmetric: generated group has unexpected order");
    return group;
}

std::vector<NonJordanRow> non_jordan_report(RingDesc ring, int n_max) {
    if (n_max < 3) throw std::invalid_argument("non_jordan_report: n_max must be at least 3");
    std::vector<NonJordanRow> rows;
    int64_t prev_bound = 0;
    for (int n = 3; n <= n_max; ++n) {
        const LabeledGraph lg = build_truncation(ring, TruncCase::Gamma2, n);
        const PermGroup sym = embed_symmetric(lg, n);
        const std::vector<int> pts = clique_vertices(lg);
        const int deg = lg.graph.n();
        // Even permutations of the clique: 3-cycles (p0 p1 pk) generate the
        // alternating group on the 2n points.
        std::vector<Permutation> gens;
        for (size_t k = 2; k < pts.size(); ++k)
            gens.push_back(Permutation::from_cycle(deg, {pts[0], pts[1], pts[(int)k]}));
        for (const Permutation& p : gens) {
            verify_digraph_automorphism(lg.graph, p, "non_jordan_report");
            if (p.parity() != 1) throw contract_violation("non_jordan_report: 3-cycle has odd parity");
            if (!sym.contains(p))
                throw contract_violation("non_jordan_report: alternating generator escapes the embedding");
        }
        PermGroup alt(deg, gens);
        const int64_t expected = checked_factorial(2 * n) / 2;
        if (alt.order() != expected)
            throw contract_violation("non_jordan_report: alternating subgroup has unexpected order");
        NonJordanRow row;
        row.level = n;
        row.points = 2 * n;
        row.alt_order = expected;
        row.simple_certified = (2 * n <= 8) ? is_simple(alt).simple : false;
        if (2 * n <= 8 && !row.simple_certified)
            throw contract_violation("non_jordan_report: simplicity certificate failed");
        row.bound = expected;
        if (row.bound <= prev_bound) throw contract_violation("non_jordan_report: bounds not increasing");
        prev_bound = row.bound;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace zdg
