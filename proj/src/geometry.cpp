#include "zdg/geometry.hpp"

#include <stdexcept>

namespace zdg {

ProjPoint3::ProjPoint3(QuadInt z0, QuadInt z1, QuadInt z2, QuadInt z3)
    : z{std::move(z0), std::move(z1), std::move(z2), std::move(z3)} {
    require_same_ring(z[0].ring, z[1].ring);
    require_same_ring(z[0].ring, z[2].ring);
    require_same_ring(z[0].ring, z[3].ring);
    if (z[0].is_zero() && z[1].is_zero() && z[2].is_zero() && z[3].is_zero())
        throw std::invalid_argument("projective point needs a nonzero coordinate");
}

bool proj_eq(const ProjPoint3& p, const ProjPoint3& q) {
    require_same_ring(p.ring(), q.ring());
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (p.z[i] * q.z[j] != p.z[j] * q.z[i]) return false;
        }
    }
    return true;
}

ProjPoint3 nu(const QuadInt& x0, const QuadInt& x1) {
    require_same_ring(x0.ring, x1.ring);
    if (x0.is_zero() && x1.is_zero())
        throw std::invalid_argument("nu: [0:0] is not a projective point");
    return ProjPoint3(x0 * x0 * x0, x0 * x0 * x1, x0 * x1 * x1, x1 * x1 * x1);
}

bool on_segre(const ProjPoint3& p) { return p.z[0] * p.z[3] == p.z[1] * p.z[2]; }

ProjPoint3 phi(const Mat2& m) {
    if (m.is_zero()) throw std::invalid_argument("phi: zero matrix has no chart image");
    return ProjPoint3(m.e00, m.e01, m.e10, m.e11);
}

}  // namespace zdg
