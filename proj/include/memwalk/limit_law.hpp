// limit_law.hpp
// Weak limit of X_t / t for the 4-state Hadamard walk: an atom of mass delta
// at the origin plus the density (c0 + c1 x + c2 x^2) f_K(x) on
// (-1/sqrt2, 1/sqrt2), with f_K(x) = 1 / (pi (1 - x^2) sqrt(1 - 2x^2)).

#pragma once

#include <cstdint>
#include <optional>

#include "memwalk/linalg.hpp"
#include "memwalk/quadrature.hpp"
#include "memwalk/walk.hpp"

namespace memwalk {

inline constexpr int kDefaultMomentGrid = 1 << 12;

struct PolyCoeffs {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

struct LimitLaw {
    double delta = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;

    // Absolutely continuous part only.
    double density(double x) const;
};

double f_k(double x);

// Closed form.
double delta_mass(const InitialState& init);

// Integral over k of |<v_1|psi_0>|^2 + |<v_2|psi_0>|^2, trapezoid on a periodic grid.
double delta_mass_k_integral(const InitialState& init, int gridsize = kDefaultMomentGrid);

PolyCoeffs poly_coeffs(const InitialState& init);

LimitLaw limit_law(const InitialState& init);

// Limit of P(a <= X_t / t <= b). Adds the atom iff a <= 0 <= b.
double limit_cdf(const LimitLaw& law, double a, double b, int panels = kDefaultPanels);

// Integral of the continuous part over the whole support.
double density_mass(const LimitLaw& law, int panels = kDefaultPanels);

// h_j(k) = i lambda_j'(k) / lambda_j(k) for the moving branches j = 3, 4:
// h_3(k) = sin k / sqrt(1 + sin^2 k) = -h_4(k). Throws InvalidInput otherwise.
double h_j(double k, int j);

// lim E[(X_t / t)^r] by momentum-space quadrature (the atom from the k-integral).
double theoretical_moment(const InitialState& init, int r, int gridsize = kDefaultMomentGrid);

// The same moment from the position-space law: 0^r delta + int x^r density.
double theoretical_moment_x(const InitialState& init, int r, int panels = kDefaultPanels);

double empirical_rescaled_moment(const ProbabilityDistribution& dist, int r);
double empirical_rescaled_moment(const WalkState& s, int r);

// Default half-width of the window around x = 0 left out of ks_distance: 1/sqrt(t).
double default_atom_window(std::int64_t t);

// sup |F_t(y) - F(y)| over the jump points y = x/t of the empirical CDF of
// X_t / t (right values and left limits), skipping |y| <= window. F includes
// the atom at 0. The window defaults to default_atom_window(t).
double ks_distance(const WalkState& s, const LimitLaw& law, std::optional<double> window = {},
                   int panels = 1 << 10);

// Limit law of the ordinary 2-state Hadamard walk from (alpha2, beta2):
// integral over [a, b] of {1 - (|a2|^2 - |b2|^2 + 2 Re(a2 conj(b2))) x} f_K(x).
double two_state_limit_cdf(Complex alpha2, Complex beta2, double a, double b,
                           int panels = kDefaultPanels);

double two_state_density(Complex alpha2, Complex beta2, double x);

}  // namespace memwalk
