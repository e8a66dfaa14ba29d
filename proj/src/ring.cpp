#include "zdg/ring.hpp"

#include <algorithm>
#include <cmath>

namespace zdg {

RingDesc RingDesc::of(int64_t d) {
    if (d < 0) throw std::domain_error("d must be non-negative");
    // Square-free check by trial division; d stays small in practice, so a
    // plain loop is plenty.
    for (int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) throw std::domain_error("d must be square-free");
    }
    RingDesc r;
    r.d = d;
    if (d == 0)
        r.form = RingForm::Rational;
    else if (d % 4 == 3)
        r.form = RingForm::Half;
    else
        r.form = RingForm::Sqrt;
    return r;
}

std::string RingDesc::name() const {
    switch (form) {
        case RingForm::Rational:
            return "Z";
        case RingForm::Sqrt:
            return "Z[sqrt(-" + std::to_string(d) + ")]";
        case RingForm::Half:
            return "Z[(-1+sqrt(-" + std::to_string(d) + "))/2]";
    }
    return "?";
}

std::optional<QuadInt> try_divide(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.ring, y.ring);
    if (y.is_zero()) throw std::domain_error("division by zero");
    // x / y = x * conj(y) / N(y); exact iff N(y) divides both coordinates.
    const QuadInt num = x * y.conj();
    const int64_t n = y.norm();
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return QuadInt(num.a / n, num.b / n, x.ring);
}

std::vector<QuadInt> units(RingDesc ring) {
    std::vector<QuadInt> u;
    if (ring.d == 1) {
        // fourth roots of unity: +-1, +-w (w = i)
        u = {QuadInt(1, 0, ring), QuadInt(-1, 0, ring), QuadInt(0, 1, ring), QuadInt(0, -1, ring)};
    } else if (ring.d == 3) {
        // sixth roots of unity: +-1, +-w, +-w^2 with w^2 = -1 - w
        u = {QuadInt(1, 0, ring),  QuadInt(-1, 0, ring),  QuadInt(0, 1, ring),
             QuadInt(0, -1, ring), QuadInt(-1, -1, ring), QuadInt(1, 1, ring)};
    } else {
        u = {QuadInt(1, 0, ring), QuadInt(-1, 0, ring)};
    }
    std::sort(u.begin(), u.end());
    return u;
}

std::vector<std::pair<QuadInt, QuadInt>> solve_unit_eq(RingDesc ring, UnitEquation eq) {
    const std::vector<QuadInt> us = units(ring);
    const QuadInt minus_one(-1, 0, ring);
    std::vector<std::pair<QuadInt, QuadInt>> out;
    for (const QuadInt& x : us) {
        for (const QuadInt& y : us) {
            const QuadInt lhs = eq == UnitEquation::SquareTimesY ? x * x * y : x * y * y;
            if (lhs == minus_one) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
        return p.first != q.first ? p.first < q.first : p.second < q.second;
    });
    return out;
}

std::vector<QuadInt> enumerate_by_norm(RingDesc ring, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("enumerate_by_norm: negative bound");
    std::vector<QuadInt> out;
    if (bound == 0) return out;

    // Conservative coordinate windows around the norm ball; candidates are
    // then filtered by the exact norm, so a slightly generous window costs
    // nothing but a few wasted iterations.
    const int64_t amax = (int64_t)std::floor(std::sqrt((double)bound)) + 1;
    int64_t bmax = 0;
    switch (ring.form) {
        case RingForm::Rational:
            bmax = 0;
            break;
        case RingForm::Sqrt:  // N = a^2 + d b^2 >= d b^2
            bmax = (int64_t)std::floor(std::sqrt((double)bound / (double)ring.d)) + 1;
            break;
        case RingForm::Half:  // N = (a - b/2)^2 + d b^2 / 4 >= d b^2 / 4
            bmax = 2 * ((int64_t)std::floor(std::sqrt((double)bound / (double)ring.d)) + 1);
            break;
    }
    for (int64_t b = -bmax; b <= bmax; ++b) {
        const int64_t shift = ring.form == RingForm::Half ? b / 2 : 0;
        for (int64_t a = shift - amax - 1; a <= shift + amax + 1; ++a) {
            if (a == 0 && b == 0) continue;
            QuadInt x(a, b, ring);
            if (x.norm() <= bound) out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const QuadInt& x) {
    if (x.b == 0) return std::to_string(x.a);
    std::string s;
    if (x.a != 0) s += std::to_string(x.a);
    if (x.b == 1)
        s += s.empty() ? "w" : "+w";
    else if (x.b == -1)
        s += "-w";
    else if (x.b > 0)
        s += (s.empty() ? "" : "+") + std::to_string(x.b) + "w";
    else
        s += std::to_string(x.b) + "w";
    return s;
}

}  // namespace zdg
