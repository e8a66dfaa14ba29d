#pragma once

#include <array>

#include "zdg/matrix.hpp"
#include "zdg/ring.hpp"

namespace zdg {

// Point of P^3 over the ring, stored as an exact homogeneous coordinate
// vector (never normalized; equality is projective).
struct ProjPoint3 {
    std::array<QuadInt, 4> z;

    ProjPoint3(QuadInt z0, QuadInt z1, QuadInt z2, QuadInt z3);

    RingDesc ring() const { return z[0].ring; }
};

// Projective equality without division: z_i * w_j = z_j * w_i for all pairs.
// This is the right test over a domain even when neither vector is a unit
// multiple of the other coordinate-wise.
bool proj_eq(const ProjPoint3& p, const ProjPoint3& q);

// Cubic Veronese map [x0 : x1] -> [x0^3 : x0^2 x1 : x0 x1^2 : x1^3].
// Both inputs zero is an argument error.
ProjPoint3 nu(const QuadInt& x0, const QuadInt& x1);

// Whether the point satisfies the quadric z0 z3 = z1 z2 that contains the
// image of nu.
bool on_segre(const ProjPoint3& p);

// Coordinate chart identifying a 2x2 matrix [a b; c d] with [a : b : c : d].
// The zero matrix has no image (argument error).
ProjPoint3 phi(const Mat2& m);

}  // namespace zdg
