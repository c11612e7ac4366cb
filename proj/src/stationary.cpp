#include "memwalk/stationary.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace memwalk {

namespace {

const double r2 = std::numbers::sqrt2;

double re(Complex z) { return z.real(); }
Complex cj(Complex z) { return std::conj(z); }

int sign_pow(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

C4Vector origin_limit(const InitialState& s, double factor) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    C4Vector v((4 - r2) * al + (2 - r2) * be + r2 * ga - (2 - r2) * de,
               (2 - r2) * al + r2 * be - (2 - r2) * ga - (4 - 3 * r2) * de,
               r2 * al - (2 - r2) * be + (4 - r2) * ga + (2 - r2) * de,
               -(2 - r2) * al - (4 - 3 * r2) * be + (2 - r2) * ga + r2 * de);
    return factor * v;
}

C4Vector plus_one_limit(const InitialState& s, double factor) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    C4Vector v((2 - r2) * al + r2 * be - (2 - r2) * ga - (4 - 3 * r2) * de,
               (4 - 3 * r2) * al - (2 - r2) * be - (4 - 3 * r2) * ga - (10 - 7 * r2) * de,
               -(2 - 3 * r2) * al + r2 * be + (2 - r2) * ga + (4 - 3 * r2) * de,
               r2 * al - (2 - r2) * be + r2 * ga - (2 - r2) * de);
    return factor * v;
}

C4Vector minus_one_limit(const InitialState& s, double factor) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    C4Vector v((2 - r2) * al + (4 - 3 * r2) * be - (2 - 3 * r2) * ga + r2 * de,
               r2 * al - (2 - r2) * be + r2 * ga - (2 - r2) * de,
               -(2 - r2) * al - (4 - 3 * r2) * be + (2 - r2) * ga + r2 * de,
               -(4 - 3 * r2) * al - (10 - 7 * r2) * be + (4 - 3 * r2) * ga - (2 - r2) * de);
    return factor * v;
}

// (-1)^x + (-1)^t resolved for the parity of t.
double parity_sum(std::int64_t x, Parity p) {
    return sign_pow(x) + (p == Parity::even ? 1.0 : -1.0);
}

C4Vector tail_limit(std::int64_t x, Parity p, const InitialState& s) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    const double base = 4 * r2 * (3 - 2 * r2);
    if (x >= 2) {
        const Complex w = (r2 - 1) * al + be - (r2 - 1) * ga + (3 - 2 * r2) * de;
        const Complex scale = std::pow(r2 - 1, static_cast<double>(x)) / base * w * parity_sum(x, p);
        return scale * C4Vector(1 - r2, 3 - 2 * r2, r2 - 1, 1);
    }
    const Complex w = (r2 - 1) * al - (3 - 2 * r2) * be - (r2 - 1) * ga - de;
    const Complex scale = -std::pow(r2 - 1, static_cast<double>(-x)) / base * w * parity_sum(x, p);
    return scale * C4Vector(r2 - 1, 1, 1 - r2, 3 - 2 * r2);
}

}  // namespace

double localization_ratio() { return 3 - 2 * r2; }

double m_func(Complex al, Complex be, Complex ga, Complex de) {
    return (8 - 5 * r2) / 2 * std::norm(al) + (2 - r2) / 2 * std::norm(be) +
           (3 - 2 * r2) * std::norm(ga) + (17 - 12 * r2) * std::norm(de) +
           (r2 - 1) * re(al * cj(be)) - (12 - 9 * r2) / 2 * re(al * cj(ga)) -
           (30 - 21 * r2) / 2 * re(al * cj(de)) + (4 - 3 * r2) / 2 * re(be * cj(ga)) +
           (10 - 7 * r2) / 2 * re(be * cj(de)) + (14 - 10 * r2) * re(ga * cj(de));
}

double k_func(Complex al, Complex be, Complex ga, Complex de) {
    return 3 - 2 * r2 + 2 * (r2 - 1) * std::norm(be) + 2 * (7 - 5 * r2) * std::norm(de) +
           2 * ((r2 - 1) * re((al - ga) * cj(be)) - (7 - 5 * r2) * re((al - ga) * cj(de)) +
                (3 - 2 * r2) * re(be * cj(de) - al * cj(ga)));
}

double theorem1_p0(const InitialState& s) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    return 2 - r2 - (r2 - 1) * (std::norm(be) + std::norm(de)) + 2 * (r2 - 1) * re(al * cj(ga)) +
           (3 - 2 * r2) * re((al - ga) * (cj(be) - cj(de)));
}

double theorem1_px(std::int64_t x, Parity parity, const InitialState& s) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    const bool x_even = (x % 2 == 0);
    if ((parity == Parity::even) != x_even) return 0.0;
    if (x == 0) return theorem1_p0(s);
    if (x == 1) return m_func(al, be, ga, de);
    if (x == -1) return m_func(ga, de, al, be);
    const double geo = std::pow(localization_ratio(), static_cast<double>(std::abs(x) - 1));
    return x > 0 ? geo * k_func(al, be, ga, de) : geo * k_func(al, -de, ga, -be);
}

StationaryAmplitude stationary_amplitude(std::int64_t x, const InitialState& init) {
    // (1 +/- (-1)^t) / 8 evaluates to 1/4 or 0.
    if (x == 0) return {origin_limit(init, 0.25), C4Vector{}};
    if (x == 1) return {C4Vector{}, plus_one_limit(init, 0.25)};
    if (x == -1) return {C4Vector{}, minus_one_limit(init, 0.25)};
    return {tail_limit(x, Parity::even, init), tail_limit(x, Parity::odd, init)};
}

double stationary_total(const InitialState& s, Parity parity) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    const double r = localization_ratio();
    const double tails = k_func(al, be, ga, de) + k_func(al, -de, ga, -be);
    // sum over x = 2, 4, ... of r^{x-1} is r / (1 - r^2); over x = 3, 5, ... it is r^2 / (1 - r^2).
    if (parity == Parity::even) return theorem1_p0(s) + tails * r / (1 - r * r);
    return m_func(al, be, ga, de) + m_func(ga, de, al, be) + tails * r * r / (1 - r * r);
}

}  // namespace memwalk
