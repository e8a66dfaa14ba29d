#pragma once

#include <optional>
#include <string>
#include <utility>

#include "zdg/ring.hpp"

namespace zdg {

// 2x2 matrix over one quadratic integer ring, row-major entries.
struct Mat2 {
    QuadInt e00, e01, e10, e11;

    Mat2() = default;
    Mat2(QuadInt a, QuadInt b, QuadInt c, QuadInt d)
        : e00(std::move(a)), e01(std::move(b)), e10(std::move(c)), e11(std::move(d)) {
        require_same_ring(e00.ring, e01.ring);
        require_same_ring(e00.ring, e10.ring);
        require_same_ring(e00.ring, e11.ring);
    }

    static Mat2 zero(RingDesc r) {
        QuadInt z = QuadInt::integer(0, r);
        return Mat2(z, z, z, z);
    }

    RingDesc ring() const { return e00.ring; }
    bool is_zero() const { return e00.is_zero() && e01.is_zero() && e10.is_zero() && e11.is_zero(); }

    bool operator==(const Mat2& o) const {
        return e00 == o.e00 && e01 == o.e01 && e10 == o.e10 && e11 == o.e11;
    }
    bool operator!=(const Mat2& o) const { return !(*this == o); }
    // Entry-lexicographic order; used only to get deterministic containers.
    bool operator<(const Mat2& o) const;
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    require_same_ring(x.ring(), y.ring());
    return Mat2(x.e00 * y.e00 + x.e01 * y.e10, x.e00 * y.e01 + x.e01 * y.e11,
                x.e10 * y.e00 + x.e11 * y.e10, x.e10 * y.e01 + x.e11 * y.e11);
}

inline QuadInt det(const Mat2& m) { return m.e00 * m.e11 - m.e01 * m.e10; }

// Over an integral domain a nonzero 2x2 matrix is a (two-sided) zero divisor
// exactly when it is singular.
inline bool is_zero_divisor(const Mat2& m) { return !m.is_zero() && det(m).is_zero(); }

// The two vertex families cut out of the zero-divisor graph by the twisted
// cubic: scalar multiples of the moment matrix of an affine parameter t, and
// scalar multiples of the matrix whose image under the coordinate chart is
// the curve's point at infinity.
enum class TcFamily : uint8_t {
    Affine,    // lambda * [1 t; t^2 t^3]
    Infinity,  // lambda * [0 0; 0 1]
};

struct TcPoint {
    TcFamily family;
    QuadInt t;       // affine parameter; zero (and unused) for Infinity
    QuadInt lambda;  // nonzero scalar
};

// Recognizes whether m = lambda * [1 t; t^2 t^3] (exact division against the
// top-left entry) or m = diag(0, lambda).  nullopt when m fits neither shape.
std::optional<TcPoint> recognize_tc(const Mat2& m);

// For a family matrix A, returns a pair (B, C) of nonzero witnesses with
// A*B = 0 and C*A = 0, taking the simplest choice of the free parameters:
//   Affine t:  B = [-t 0; 1 0],  C = [-t^2 1; 0 0]
//   Infinity:  B = [1 0; 0 0],   C = [1 0; 0 0]
// Throws std::invalid_argument when recognize_tc fails.
std::pair<Mat2, Mat2> annihilator_witnesses(const Mat2& m);

std::string to_string(const Mat2& m);

}  // namespace zdg
