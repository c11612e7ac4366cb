#include "memwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "memwalk/errors.hpp"

namespace memwalk {

namespace {
const double kSqrt2 = std::numbers::sqrt2;
}  // namespace

C4Matrix hat_u(const CoinParams& coin, double k) {
    const Complex e = std::polar(1.0, k);
    const Complex ec = std::conj(e);
    return mat_mul(C4Matrix::diagonal(e, e, ec, ec), build_coin(coin));
}

C4Vector null_vector(const C4Matrix& a) {
    C4Matrix m = a;
    std::array<std::size_t, kDim> pivot_col{};
    std::array<double, kDim> pivot_mag{};
    std::size_t rank_rows = 0;

    double scale = 0.0;
    for (std::size_t r = 0; r < kDim; ++r)
        for (std::size_t c = 0; c < kDim; ++c) scale = std::max(scale, std::abs(m(r, c)));
    const double tiny = 1e-12 * std::max(scale, 1.0);

    // Forward elimination; columns with a negligible pivot are skipped.
    std::size_t row = 0;
    std::array<bool, kDim> is_pivot{};
    for (std::size_t col = 0; col < kDim && row < kDim; ++col) {
        std::size_t best = row;
        for (std::size_t r = row + 1; r < kDim; ++r)
            if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
        if (std::abs(m(best, col)) <= tiny) continue;
        if (best != row)
            for (std::size_t c = 0; c < kDim; ++c) std::swap(m(row, c), m(best, c));
        for (std::size_t r = row + 1; r < kDim; ++r) {
            const Complex f = m(r, col) / m(row, col);
            for (std::size_t c = col; c < kDim; ++c) m(r, c) -= f * m(row, c);
        }
        pivot_col[row] = col;
        pivot_mag[row] = std::abs(m(row, col));
        is_pivot[col] = true;
        ++row;
    }
    rank_rows = row;

    // Full rank in floating point: demote the weakest pivot row.
    if (rank_rows == kDim) {
        const auto weakest = static_cast<std::size_t>(
            std::min_element(pivot_mag.begin(), pivot_mag.end()) - pivot_mag.begin());
        is_pivot[pivot_col[weakest]] = false;
        for (std::size_t r = weakest; r + 1 < kDim; ++r) {
            for (std::size_t c = 0; c < kDim; ++c) m(r, c) = m(r + 1, c);
            pivot_col[r] = pivot_col[r + 1];
        }
        rank_rows = kDim - 1;
    }

    // Free variables set to 1 for the first, 0 for any others.
    C4Vector x;
    bool first_free = true;
    for (std::size_t c = 0; c < kDim; ++c) {
        if (!is_pivot[c]) {
            x[c] = first_free ? 1.0 : 0.0;
            first_free = false;
        }
    }
    for (std::size_t r = rank_rows; r-- > 0;) {
        const std::size_t pc = pivot_col[r];
        Complex s = 0.0;
        for (std::size_t c = pc + 1; c < kDim; ++c) s += m(r, c) * x[c];
        x[pc] = -s / m(r, pc);
    }
    return (1.0 / x.norm()) * x;
}

EigenSystem hadamard_eigen(double k) {
    EigenSystem sys;
    sys.k = k;
    const double sk = std::sin(k);
    const double root = std::sqrt(1.0 + sk * sk);
    sys.eigenvalues = {Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(-std::cos(k), root) / kSqrt2,
                       Complex(-std::cos(k), -root) / kSqrt2};

    const Complex e = std::polar(1.0, k);
    const C4Matrix u = hat_u(CoinParams::hadamard(), k);
    for (std::size_t j = 0; j < 4; ++j) {
        const Complex l = sys.eigenvalues[j];
        const Complex f = kSqrt2 * l + e;
        C4Vector v(e * f * (l * e + kSqrt2), e * e * (l * e + kSqrt2), l * f * (kSqrt2 * l * e + 1.0),
                   l * f);
        const double n2 = v.norm2();
        sys.normalizers[j] = n2;
        if (std::sqrt(n2) < kEigenFallbackNorm) {
            sys.eigenvectors[j] = null_vector(u - C4Matrix::diagonal(l, l, l, l));
        } else {
            sys.eigenvectors[j] = (1.0 / std::sqrt(n2)) * v;
        }
    }
    return sys;
}

WalkState fourier_evolve(const InitialState& init, const CoinParams& coin, std::int64_t t,
                         std::int64_t gridsize) {
    if (t < 0) throw InvalidInput("fourier_evolve: t must be non-negative");
    if (gridsize < 2 * t + 2 || gridsize % 2 != 0)
        throw AliasingError("fourier_evolve: gridsize " + std::to_string(gridsize) +
                            " must be even and at least 2t + 2 = " + std::to_string(2 * t + 2));

    const auto n = static_cast<std::size_t>(gridsize);
    // roots[m] = exp(2 pi i m / n)
    std::vector<Complex> roots(n);
    for (std::size_t m = 0; m < n; ++m)
        roots[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));

    const C4Matrix u = build_coin(coin);
    std::vector<C4Vector> psi_hat(n);
    for (std::size_t m = 0; m < n; ++m) {
        // k_m = -pi + 2 pi m / n, so e^{i k_m} = -roots[m].
        const Complex e = -roots[m];
        const Complex ec = std::conj(e);
        C4Matrix uk = u;
        for (std::size_t c = 0; c < kDim; ++c) {
            uk(0, c) *= e;
            uk(1, c) *= e;
            uk(2, c) *= ec;
            uk(3, c) *= ec;
        }
        C4Vector v = init.vector();
        for (std::int64_t s = 0; s < t; ++s) v = mat_vec(uk, v);
        psi_hat[m] = v;
    }

    // psi_t(x) = (1/n) sum_m e^{i k_m x} Psi_t(k_m), e^{i k_m x} = (-1)^x roots[m x mod n].
    WalkState out(t);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(t); ++i) {
        const std::int64_t x = WalkState::position_of_slot(t, i);
        const std::int64_t xm = ((x % gridsize) + gridsize) % gridsize;
        C4Vector acc;
        std::size_t idx = 0;
        for (std::size_t m = 0; m < n; ++m) {
            acc += roots[idx] * psi_hat[m];
            idx += static_cast<std::size_t>(xm);
            if (idx >= n) idx -= n;
        }
        const double sign = (x % 2 == 0) ? 1.0 : -1.0;
        out.set(x, (sign * inv_n) * acc);
    }
    return out;
}

}  // namespace memwalk
