#include "zdg/matrix.hpp"

#include <tuple>

namespace zdg {

bool Mat2::operator<(const Mat2& o) const {
    auto key = [](const Mat2& m) {
        return std::make_tuple(m.e00.a, m.e00.b, m.e01.a, m.e01.b, m.e10.a, m.e10.b, m.e11.a,
                               m.e11.b);
    };
    return key(*this) < key(o);
}

std::optional<TcPoint> recognize_tc(const Mat2& m) {
    const RingDesc r = m.ring();
    const QuadInt zero = QuadInt::integer(0, r);
    if (m.e00.is_zero()) {
        // Only diag(0, lambda) has a vanishing top-left entry in either family.
        if (m.e01.is_zero() && m.e10.is_zero() && !m.e11.is_zero())
            return TcPoint{TcFamily::Infinity, zero, m.e11};
        return std::nullopt;
    }
    const QuadInt lambda = m.e00;
    const std::optional<QuadInt> t = try_divide(m.e01, lambda);
    if (!t) return std::nullopt;
    if (m.e10 != lambda * *t * *t) return std::nullopt;
    if (m.e11 != lambda * *t * *t * *t) return std::nullopt;
    return TcPoint{TcFamily::Affine, *t, lambda};
}

std::pair<Mat2, Mat2> annihilator_witnesses(const Mat2& m) {
    const std::optional<TcPoint> p = recognize_tc(m);
    if (!p) throw std::invalid_argument("annihilator_witnesses: matrix is not in a curve family");
    const RingDesc r = m.ring();
    const QuadInt zero = QuadInt::integer(0, r);
    const QuadInt one = QuadInt::integer(1, r);
    if (p->family == TcFamily::Affine) {
        const QuadInt& t = p->t;
        // lambda [1 t; t^2 t^3] * [-t 0; 1 0] = 0 and
        // [-t^2 1; 0 0] * lambda [1 t; t^2 t^3] = 0, for every scalar.
        Mat2 right(-t, zero, one, zero);
        Mat2 left(-(t * t), one, zero, zero);
        return {right, left};
    }
    // diag(0, lambda): anything supported on the first row kills it from the
    // right, anything supported on the first column from the left.
    Mat2 right(one, zero, zero, zero);
    Mat2 left(one, zero, zero, zero);
    return {right, left};
}

std::string to_string(const Mat2& m) {
    return "[" + to_string(m.e00) + " " + to_string(m.e01) + "; " + to_string(m.e10) + " " +
           to_string(m.e11) + "]";
}

}  // namespace zdg
