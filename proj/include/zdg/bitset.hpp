#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace zdg {

// Fixed-size dynamic bitset, sized once at construction.  Just enough surface
// for adjacency rows and the clique/coloring searches; no bounds checking in
// release builds beyond what the callers guarantee.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    void clear() { std::fill(w_.begin(), w_.end(), uint64_t(0)); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // First set bit at position >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        int word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                int bit = (word << 6) + std::countr_zero(cur);
                return bit < n_ ? bit : -1;
            }
            if (++word >= (int)w_.size()) return -1;
            cur = w_[word];
        }
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace zdg
