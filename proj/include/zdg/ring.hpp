#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zdg {

// Overflow-checked 64-bit arithmetic.  Every ring operation funnels through
// these helpers; a result outside the int64 range throws std::overflow_error
// instead of wrapping, so exact identities can never be silently violated.
inline int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in ring arithmetic (add)");
    return r;
}
inline int64_t checked_sub(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in ring arithmetic (sub)");
    return r;
}
inline int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("int64 overflow in ring arithmetic (mul)");
    return r;
}
inline int64_t checked_neg(int64_t x) {
    if (x == INT64_MIN) throw std::overflow_error("int64 overflow in ring arithmetic (neg)");
    return -x;
}

// Which ring of integers we are working in, keyed by a square-free d >= 0:
// the ring of integers of Q(sqrt(-d)), with d = 0 degenerating to Z itself.
enum class RingForm : uint8_t {
    Rational,  // d = 0: Z; the second coordinate is identically 0
    Sqrt,      // d = 1,2 (mod 4): Z[w], w = sqrt(-d), so w^2 = -d
    Half,      // d = 3 (mod 4): Z[w], w = (-1+sqrt(-d))/2, so w^2 = -w - (d+1)/4
};

struct RingDesc {
    int64_t d = 0;
    RingForm form = RingForm::Rational;

    // Validates and classifies d.  Throws std::domain_error unless d >= 0 and
    // d is square-free (d = 0 is accepted as the rational case).
    static RingDesc of(int64_t d);

    bool operator==(const RingDesc&) const = default;
    std::string name() const;
};

// Element a + b*w of the ring described by `ring`, with exact (overflow
// checked) 64-bit coordinates.  Mixing elements of different rings in one
// operation is a structural mistake and throws std::domain_error.
struct QuadInt {
    int64_t a = 0;
    int64_t b = 0;
    RingDesc ring;

    QuadInt() = default;
    QuadInt(int64_t a_, int64_t b_, RingDesc r) : a(a_), b(b_), ring(r) {
        if (r.form == RingForm::Rational && b != 0)
            throw std::domain_error("rational ring has no w component");
    }
    static QuadInt integer(int64_t n, RingDesc r) { return QuadInt(n, 0, r); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }

    QuadInt conj() const { return conj_impl(); }

    // Field norm N(a + bw), always a non-negative rational integer here.
    int64_t norm() const;

    bool is_unit() const { return norm() == 1; }

    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b && ring == o.ring; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
    // Deterministic coordinate order used for sorting vertex sets and t-sets.
    bool operator<(const QuadInt& o) const { return a != o.a ? a < o.a : b < o.b; }

private:
    QuadInt conj_impl() const;
    friend QuadInt operator+(const QuadInt&, const QuadInt&);
    friend QuadInt operator-(const QuadInt&, const QuadInt&);
    friend QuadInt operator*(const QuadInt&, const QuadInt&);
};

inline void require_same_ring(const RingDesc& x, const RingDesc& y) {
    if (!(x == y)) throw std::domain_error("mixed-ring operation");
}

inline QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.ring, y.ring);
    QuadInt r;
    r.a = checked_add(x.a, y.a);
    r.b = checked_add(x.b, y.b);
    r.ring = x.ring;
    return r;
}

inline QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.ring, y.ring);
    QuadInt r;
    r.a = checked_sub(x.a, y.a);
    r.b = checked_sub(x.b, y.b);
    r.ring = x.ring;
    return r;
}

inline QuadInt operator-(const QuadInt& x) {
    QuadInt r;
    r.a = checked_neg(x.a);
    r.b = checked_neg(x.b);
    r.ring = x.ring;
    return r;
}

// (a + bw)(c + ew) = ac + (ae + bc)w + be*w^2, with w^2 reduced per form.
inline QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.ring, y.ring);
    QuadInt r;
    r.ring = x.ring;
    const int64_t ac = checked_mul(x.a, y.a);
    const int64_t cross = checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
    const int64_t be = checked_mul(x.b, y.b);
    switch (x.ring.form) {
        case RingForm::Rational:
            r.a = ac;
            r.b = 0;
            break;
        case RingForm::Sqrt:  // w^2 = -d
            r.a = checked_sub(ac, checked_mul(be, x.ring.d));
            r.b = cross;
            break;
        case RingForm::Half:  // w^2 = -w - (d+1)/4
            r.a = checked_sub(ac, checked_mul(be, (x.ring.d + 1) / 4));
            r.b = checked_sub(cross, be);
            break;
    }
    return r;
}

inline QuadInt QuadInt::conj_impl() const {
    QuadInt r;
    r.ring = ring;
    switch (ring.form) {
        case RingForm::Rational:
            r.a = a;
            r.b = 0;
            break;
        case RingForm::Sqrt:  // conj(a + bw) = a - bw
            r.a = a;
            r.b = checked_neg(b);
            break;
        case RingForm::Half:  // conj(w) = -1 - w
            r.a = checked_sub(a, b);
            r.b = checked_neg(b);
            break;
    }
    return r;
}

inline int64_t QuadInt::norm() const {
    switch (ring.form) {
        case RingForm::Rational:
            return checked_mul(a, a);
        case RingForm::Sqrt:  // a^2 + d b^2
            return checked_add(checked_mul(a, a), checked_mul(ring.d, checked_mul(b, b)));
        case RingForm::Half:  // a^2 - ab + ((d+1)/4) b^2
            return checked_add(checked_sub(checked_mul(a, a), checked_mul(a, b)),
                               checked_mul((ring.d + 1) / 4, checked_mul(b, b)));
    }
    throw std::logic_error("unreachable");
}

// Exact division x / y, or nullopt when y does not divide x in the ring.
// Division by zero throws std::domain_error.
std::optional<QuadInt> try_divide(const QuadInt& x, const QuadInt& y);

// The unit group of the ring: {1,-1} generically, plus the extra roots of
// unity for d = 1 (fourth roots) and d = 3 (sixth roots).  Sorted, no
// duplicates.
std::vector<QuadInt> units(RingDesc ring);

// The two unit equations whose solution sets drive adjacency between the
// parametrized vertex families: x^2 y = -1 and x y^2 = -1, solved over units.
enum class UnitEquation : uint8_t { SquareTimesY, TimesYSquared };

// All unit pairs (x, y) solving the chosen equation, sorted by (x, y).
std::vector<std::pair<QuadInt, QuadInt>> solve_unit_eq(RingDesc ring, UnitEquation eq);

// All nonzero ring elements with norm <= bound, sorted.  bound < 0 is an
// argument error (std::invalid_argument); bound = 0 yields the empty list.
std::vector<QuadInt> enumerate_by_norm(RingDesc ring, int64_t bound);

// Human-readable form: "0", "-3", "w", "1-2w", ...  Deterministic; used in
// DOT labels and diagnostics.
std::string to_string(const QuadInt& x);

}  // namespace zdg
