// spectral.hpp
// Momentum-space picture of the walk. With Psi_t(k) = sum_x e^{-ikx} psi_t(x),
// one step is Psi_{t+1}(k) = U(k) Psi_t(k), U(k) = R(k) U and
// R(k) = diag(e^{ik}, e^{ik}, e^{-ik}, e^{-ik}).

#pragma once

#include <array>
#include <cstdint>

#include "memwalk/linalg.hpp"
#include "memwalk/walk.hpp"

namespace memwalk {

C4Matrix hat_u(const CoinParams& coin, double k);

struct EigenSystem {
    double k = 0.0;
    std::array<Complex, 4> eigenvalues{};
    std::array<C4Vector, 4> eigenvectors{};  // unit norm
    // Squared norm of the unnormalized closed-form eigenvector.
    std::array<double, 4> normalizers{};
};

// Hadamard coin only. Eigenvalues 1, -1, (-cos k +/- i sqrt(1 + sin^2 k)) / sqrt 2,
// eigenvectors from the closed-form components
//   [ e^{ik}(sqrt2 l + e^{ik})(l e^{ik} + sqrt2),
//     e^{2ik}(l e^{ik} + sqrt2),
//     l (sqrt2 l + e^{ik})(sqrt2 l e^{ik} + 1),
//     l (sqrt2 l + e^{ik}) ].
// A closed form with norm below kEigenFallbackNorm is replaced by a null
// vector of U(k) - l I.
EigenSystem hadamard_eigen(double k);

inline constexpr double kEigenFallbackNorm = 1e-8;

// Unit vector spanning the (numerical) kernel of a rank-3 matrix, by Gaussian
// elimination with partial pivoting. The column whose pivot is smallest is
// taken as the free variable.
C4Vector null_vector(const C4Matrix& a);

// Evaluates U(k)^t Psi_0 on the grid k_m = -pi + 2 pi m / gridsize and inverts
// with a discrete Fourier sum. Exact up to roundoff because psi_t lives on
// [-t, t]. Throws AliasingError unless gridsize >= 2t + 2 and even.
WalkState fourier_evolve(const InitialState& init, const CoinParams& coin, std::int64_t t,
                         std::int64_t gridsize);

}  // namespace memwalk
