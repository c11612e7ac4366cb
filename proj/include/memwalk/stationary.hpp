// stationary.hpp
// Long-time limits of P(X_t = x) for the 4-state Hadamard walk, taken
// separately along even and odd t (the (-1)^t factors in the amplitudes make
// the unrestricted limit fail to exist).

#pragma once

#include <cstdint>

#include "memwalk/linalg.hpp"
#include "memwalk/walk.hpp"

namespace memwalk {

enum class Parity { even, odd };

// Geometric ratio of the localized profile per lattice step, 3 - 2 sqrt 2.
double localization_ratio();

// Odd-time limit at x = 1 (called as m_func(gamma, delta, alpha, beta) for x = -1).
double m_func(Complex alpha, Complex beta, Complex gamma, Complex delta);

// Tail weight: limit at x >= 2 is ratio^{|x|-1} K(alpha, beta, gamma, delta),
// at x <= -2 it is ratio^{|x|-1} K(alpha, -delta, gamma, -beta).
double k_func(Complex alpha, Complex beta, Complex gamma, Complex delta);

// lim P(X_{2t} = 0).
double theorem1_p0(const InitialState& init);

// Limit of P(X_t = x) along t of the given parity.
double theorem1_px(std::int64_t x, Parity parity, const InitialState& init);

struct StationaryAmplitude {
    C4Vector even_limit;
    C4Vector odd_limit;
};

// t -> infinity limits of psi_t(x) along even and odd t, from the flat
// eigenvalue branches +1 and -1.
StationaryAmplitude stationary_amplitude(std::int64_t x, const InitialState& init);

// Sum over x of theorem1_px for one parity; the two parities agree.
double stationary_total(const InitialState& init, Parity parity = Parity::even);

}  // namespace memwalk
