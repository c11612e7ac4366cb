// quadrature.hpp
// Integrals against the Konno density, whose 1/sqrt(1 - 2x^2) endpoint
// singularity is removed by x = sin(u) / sqrt 2:
//
//   f_K(x) dx = du / (sqrt2 pi (1 - sin^2(u) / 2)),  u in (-pi/2, pi/2).

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace memwalk {

inline constexpr int kDefaultPanels = 1 << 14;

// Composite Simpson on [lo, hi] with an even number of panels.
template <class F>
double composite_simpson(F&& f, double lo, double hi, int panels) {
    if (panels < 2 || panels % 2 != 0)
        throw std::invalid_argument("composite_simpson: panels must be even and >= 2");
    if (hi == lo) return 0.0;
    const double h = (hi - lo) / panels;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < panels; ++i) {
        const double v = f(lo + i * h);
        (i % 2 ? odd : even) += v;
    }
    return h / 3.0 * (f(lo) + f(hi) + 4.0 * odd + 2.0 * even);
}

// Integral over [a, b] of weight(x) f_K(x). Limits are clipped to the support.
template <class W>
double integrate_against_konno(W&& weight, double a, double b, int panels = kDefaultPanels) {
    const double edge = 1.0 / std::numbers::sqrt2;
    const double lo = std::clamp(a, -edge, edge);
    const double hi = std::clamp(b, -edge, edge);
    if (!(hi > lo)) return 0.0;
    const double u_lo = std::asin(std::clamp(std::numbers::sqrt2 * lo, -1.0, 1.0));
    const double u_hi = std::asin(std::clamp(std::numbers::sqrt2 * hi, -1.0, 1.0));
    auto integrand = [&](double u) {
        const double s = std::sin(u);
        return weight(s / std::numbers::sqrt2) /
               (std::numbers::sqrt2 * std::numbers::pi * (1.0 - 0.5 * s * s));
    };
    return composite_simpson(integrand, u_lo, u_hi, panels);
}

}  // namespace memwalk
