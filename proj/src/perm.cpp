#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zdg/autgroup.hpp"
#include "zdg/errors.hpp"

namespace zdg {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    Permutation p = identity(n);
    std::vector<char> seen(n, 0);
    for (int q : cycle) {
        if (q < 0 || q >= n) throw std::invalid_argument("cycle point out of range");
        if (seen[q]) throw std::invalid_argument("repeated point in cycle");
        seen[q] = 1;
    }
    for (size_t i = 0; i < cycle.size(); ++i) p.img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return p;
}

bool Permutation::is_identity() const {
    for (size_t p = 0; p < img.size(); ++p)
        if (img[p] != (int)p) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img.resize(img.size());
    for (size_t p = 0; p < img.size(); ++p) r.img[img[p]] = (int)p;
    return r;
}

int Permutation::parity() const {
    std::vector<char> seen(img.size(), 0);
    int cycles = 0;
    for (size_t p = 0; p < img.size(); ++p) {
        if (seen[p]) continue;
        ++cycles;
        for (size_t q = p; !seen[q]; q = img[q]) seen[q] = 1;
    }
    return ((int)img.size() - cycles) % 2 == 0 ? 1 : -1;
}

PermGroup::PermGroup(int degree) : degree_(degree) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> gens, const std::vector<int>& base_hint)
    : degree_(degree) {
    for (const Permutation& g : gens)
        if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    gens_ = std::move(gens);
    rebuild(base_hint);
}

void PermGroup::rebuild(const std::vector<int>& base_hint) {
    levels_.clear();
    base_.clear();
    for (int b : base_hint) {
        if (b < 0 || b >= degree_) throw std::invalid_argument("base point out of range");
        if (std::find(base_.begin(), base_.end(), b) != base_.end()) continue;
        levels_.push_back(Level{b, {}, {}, {}});
        base_.push_back(b);
        recompute_orbit(levels_.size() - 1);
    }
    std::vector<Permutation> pending = std::move(gens_);
    gens_.clear();
    for (Permutation& p : pending) extend(std::move(p));
}

void PermGroup::recompute_orbit(size_t li) {
    Level& lv = levels_[li];
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit.clear();
    lv.transversal[lv.base_point] = Permutation::identity(degree_);
    lv.orbit.push_back(lv.base_point);
    for (size_t head = 0; head < lv.orbit.size(); ++head) {
        const int gamma = lv.orbit[head];
        for (size_t k = li; k < levels_.size(); ++k) {
            for (const Permutation& s : levels_[k].gens) {
                const int delta = s(gamma);
                if (!lv.transversal[delta]) {
                    lv.transversal[delta] = s * (*lv.transversal[gamma]);
                    lv.orbit.push_back(delta);
                }
            }
        }
    }
}

size_t PermGroup::insert_strong(Permutation p) {
    size_t j = 0;
    while (j < levels_.size() && p(levels_[j].base_point) == levels_[j].base_point) ++j;
    if (j == levels_.size()) {
        int moved = -1;
        for (int q = 0; q < degree_; ++q) {
            if (p(q) != q) {
                moved = q;
                break;
            }
        }
        if (moved < 0) throw std::logic_error("insert_strong on identity");
        levels_.push_back(Level{moved, {}, {}, {}});
        base_.push_back(moved);
    }
    levels_[j].gens.push_back(std::move(p));
    return j;
}

std::optional<size_t> PermGroup::verify_level(size_t li) {
    // The orbit/transversal of `li` are current (recomputed by the caller).
    for (size_t oi = 0; oi < levels_[li].orbit.size(); ++oi) {
        const int gamma = levels_[li].orbit[oi];
        for (size_t k = li; k < levels_.size(); ++k) {
            for (size_t gi = 0; gi < levels_[k].gens.size(); ++gi) {
                const Permutation s = levels_[k].gens[gi];  // copy: insertions may reallocate
                const int delta = s(gamma);
                const Permutation schreier =
                    levels_[li].transversal[delta]->inverse() * s * (*levels_[li].transversal[gamma]);
                if (schreier.is_identity()) continue;
                size_t stop = 0;
                Permutation residue = sift(schreier, li + 1, &stop);
                if (!residue.is_identity()) return insert_strong(std::move(residue));
            }
        }
    }
    return std::nullopt;
}

void PermGroup::sift_in(Permutation p) {
    ptrdiff_t i = (ptrdiff_t)insert_strong(std::move(p));
    // Climb toward the root re-verifying each level; a nontrivial residue
    // lands deeper and sends the scan back down to it first.
    while (i >= 0) {
        recompute_orbit((size_t)i);
        if (std::optional<size_t> dirty = verify_level((size_t)i)) {
            i = (ptrdiff_t)*dirty;
        } else {
            --i;
        }
    }
}

Permutation PermGroup::sift(const Permutation& p, size_t from, size_t* stopped_at) const {
    Permutation r = p;
    for (size_t i = from; i < levels_.size(); ++i) {
        const int gamma = r(levels_[i].base_point);
        if (gamma == levels_[i].base_point) continue;
        if (!levels_[i].transversal[gamma]) {
            if (stopped_at) *stopped_at = i;
            return r;
        }
        r = levels_[i].transversal[gamma]->inverse() * r;
    }
    if (stopped_at) *stopped_at = levels_.size();
    return r;
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    return sift(p, 0, nullptr).is_identity();
}

void PermGroup::extend(const Permutation& p) {
    if (p.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
    if (p.is_identity() || contains(p)) return;
    gens_.push_back(p);
    sift_in(p);
}

int64_t PermGroup::order() const {
    __int128 prod = 1;
    for (const Level& lv : levels_) {
        prod *= (__int128)lv.orbit.size();
        if (prod > (__int128)INT64_MAX) throw std::overflow_error("group order exceeds int64");
    }
    return (int64_t)prod;
}

std::vector<int> PermGroup::stabilizer_orbit(int fixed, int point) const {
    if (point < 0 || point >= degree_) throw std::invalid_argument("point out of range");
    std::vector<int> orbit{point};
    std::vector<char> seen(degree_, 0);
    seen[point] = 1;
    for (size_t head = 0; head < orbit.size(); ++head) {
        for (size_t k = (size_t)std::max(fixed, 0); k < levels_.size(); ++k) {
            for (const Permutation& s : levels_[k].gens) {
                const int delta = s(orbit[head]);
                if (!seen[delta]) {
                    seen[delta] = 1;
                    orbit.push_back(delta);
                }
            }
        }
    }
    return orbit;
}

std::vector<Permutation> PermGroup::elements(int64_t limit) const {
    const int64_t total = order();
    if (total > limit) throw resource_error("element enumeration: order exceeds limit");
    std::vector<Permutation> out;
    out.reserve((size_t)total);
    // Depth-first product of transversal representatives, one per level.
    std::vector<size_t> idx(levels_.size(), 0);
    std::vector<Permutation> acc;
    acc.reserve(levels_.size() + 1);
    acc.push_back(Permutation::identity(degree_));
    size_t depth = 0;
    while (true) {
        if (depth == levels_.size()) {
            out.push_back(acc.back());
            // backtrack to the first level with representatives left
            while (depth > 0 && idx[depth - 1] + 1 >= levels_[depth - 1].orbit.size()) {
                --depth;
                acc.pop_back();
                idx[depth] = 0;
            }
            if (depth == 0) break;
            ++idx[depth - 1];
            const Level& lv = levels_[depth - 1];
            acc.back() = acc[depth - 1] * (*lv.transversal[lv.orbit[idx[depth - 1]]]);
            continue;
        }
        const Level& lv = levels_[depth];
        acc.push_back(acc.back() * (*lv.transversal[lv.orbit[idx[depth]]]));
        ++depth;
    }
    return out;
}

}  // namespace zdg
