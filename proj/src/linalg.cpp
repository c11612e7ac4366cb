#include "memwalk/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "memwalk/errors.hpp"

namespace memwalk {

double C4Vector::norm() const { return std::sqrt(norm2()); }

Complex inner(const C4Vector& u, const C4Vector& v) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double max_abs_diff(const C4Vector& u, const C4Vector& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < kDim; ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

C4Vector mat_vec(const C4Matrix& m, const C4Vector& v) {
    C4Vector out;
    for (std::size_t r = 0; r < kDim; ++r) {
        out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
    }
    return out;
}

C4Matrix mat_mul(const C4Matrix& a, const C4Matrix& b) {
    C4Matrix out;
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c)
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c) + a(r, 3) * b(3, c);
    return out;
}

C4Matrix adjoint(const C4Matrix& m) {
    C4Matrix out;
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c) out(c, r) = std::conj(m(r, c));
    return out;
}

double max_abs_diff(const C4Matrix& a, const C4Matrix& b) {
    double m = 0.0;
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

bool is_unitary(const C4Matrix& m, double tol) {
    if (!(tol > 0.0)) throw InvalidInput("is_unitary: tolerance must be positive");
    return max_abs_diff(mat_mul(m, adjoint(m)), C4Matrix::identity()) <= tol;
}

namespace {

Complex det3(const C4Matrix& m, std::size_t skip_col) {
    std::array<std::size_t, 3> cols{};
    std::size_t n = 0;
    for (std::size_t c = 0; c < kDim; ++c)
        if (c != skip_col) cols[n++] = c;
    auto e = [&](std::size_t r, std::size_t c) { return m(r + 1, cols[c]); };
    return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
           e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
           e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

Complex determinant(const C4Matrix& m) {
    Complex d = 0.0;
    double sign = 1.0;
    for (std::size_t c = 0; c < kDim; ++c, sign = -sign) d += sign * m(0, c) * det3(m, c);
    return d;
}

}  // namespace memwalk
