#include "memwalk/limit_law.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "memwalk/errors.hpp"
#include "memwalk/spectral.hpp"

namespace memwalk {

namespace {

const double r2 = std::numbers::sqrt2;

double re(Complex z) { return z.real(); }
Complex cj(Complex z) { return std::conj(z); }

void require_grid(int gridsize) {
    if (gridsize < 2) throw InvalidInput("momentum grid needs at least 2 points");
}

double int_pow(double x, int r) {
    double p = 1.0;
    for (int i = 0; i < r; ++i) p *= x;
    return p;
}

void check_two_state(Complex a2, Complex b2) {
    if (std::abs(std::norm(a2) + std::norm(b2) - 1.0) > kInitTolerance)
        throw InvalidInput("two-state initial state must have unit norm");
}

}  // namespace

double f_k(double x) {
    const double edge = 1.0 / r2;
    if (!(x > -edge && x < edge)) return 0.0;
    return 1.0 / (std::numbers::pi * (1.0 - x * x) * std::sqrt(1.0 - 2.0 * x * x));
}

double LimitLaw::density(double x) const { return (c0 + c1 * x + c2 * x * x) * f_k(x); }

double delta_mass(const InitialState& s) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    return 1 - r2 / 4 +
           0.5 * ((r2 - 2) * (std::norm(be) + std::norm(de)) +
                  (2 - r2) * re((al - ga) * (cj(be) - cj(de))) + r2 * re(al * cj(ga)) -
                  (4 - 3 * r2) * re(be * cj(de)));
}

double delta_mass_k_integral(const InitialState& init, int gridsize) {
    require_grid(gridsize);
    double sum = 0.0;
    for (int m = 0; m < gridsize; ++m) {
        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * m / gridsize;
        const EigenSystem sys = hadamard_eigen(k);
        sum += std::norm(inner(sys.eigenvectors[0], init.vector())) +
               std::norm(inner(sys.eigenvectors[1], init.vector()));
    }
    return sum / gridsize;
}

PolyCoeffs poly_coeffs(const InitialState& s) {
    const Complex al = s.alpha(), be = s.beta(), ga = s.gamma(), de = s.delta();
    PolyCoeffs c;
    c.c0 = 0.5 - re(al * cj(ga) + be * cj(de));
    c.c1 = std::norm(de) - std::norm(be) + re((al - ga) * (cj(be) + cj(de)));
    c.c2 = std::norm(be) + std::norm(de) - 0.5 +
           re((al - ga) * (cj(de) - cj(be)) + al * cj(ga) + 3.0 * be * cj(de));
    return c;
}

LimitLaw limit_law(const InitialState& init) {
    const PolyCoeffs c = poly_coeffs(init);
    return {delta_mass(init), c.c0, c.c1, c.c2};
}

double limit_cdf(const LimitLaw& law, double a, double b, int panels) {
    if (a > b) throw InvalidInput("limit_cdf: need a <= b");
    const double atom = (a <= 0.0 && 0.0 <= b) ? law.delta : 0.0;
    return atom + integrate_against_konno(
                      [&](double x) { return law.c0 + law.c1 * x + law.c2 * x * x; }, a, b, panels);
}

double density_mass(const LimitLaw& law, int panels) {
    return integrate_against_konno([&](double x) { return law.c0 + law.c1 * x + law.c2 * x * x; },
                                   -1.0, 1.0, panels);
}

double h_j(double k, int j) {
    if (j != 3 && j != 4) throw InvalidInput("h_j: branch must be 3 or 4, got " + std::to_string(j));
    const double s = std::sin(k);
    const double h3 = s / std::sqrt(1.0 + s * s);
    return j == 3 ? h3 : -h3;
}

double theoretical_moment(const InitialState& init, int r, int gridsize) {
    if (r < 0) throw InvalidInput("moment order must be non-negative");
    require_grid(gridsize);
    double moving = 0.0;
    for (int m = 0; m < gridsize; ++m) {
        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * m / gridsize;
        const EigenSystem sys = hadamard_eigen(k);
        for (int j = 3; j <= 4; ++j) {
            moving += int_pow(h_j(k, j), r) * std::norm(inner(sys.eigenvectors[j - 1], init.vector()));
        }
    }
    moving /= gridsize;
    return (r == 0 ? delta_mass_k_integral(init, gridsize) : 0.0) + moving;
}

double theoretical_moment_x(const InitialState& init, int r, int panels) {
    if (r < 0) throw InvalidInput("moment order must be non-negative");
    const LimitLaw law = limit_law(init);
    const double cont = integrate_against_konno(
        [&](double x) { return int_pow(x, r) * (law.c0 + law.c1 * x + law.c2 * x * x); }, -1.0, 1.0,
        panels);
    return (r == 0 ? law.delta : 0.0) + cont;
}

double empirical_rescaled_moment(const ProbabilityDistribution& dist, int r) {
    if (r < 0) throw InvalidInput("moment order must be non-negative");
    const std::int64_t t = dist.time();
    if (t < 1) throw InvalidInput("empirical_rescaled_moment needs t >= 1");
    double m = 0.0;
    for (std::int64_t x = -t; x <= t; ++x) {
        const double p = dist.at(x);
        if (p != 0.0) m += int_pow(static_cast<double>(x) / static_cast<double>(t), r) * p;
    }
    return m;
}

double empirical_rescaled_moment(const WalkState& s, int r) {
    return empirical_rescaled_moment(distribution(s), r);
}

double default_atom_window(std::int64_t t) { return 1.0 / std::sqrt(static_cast<double>(t)); }

double ks_distance(const WalkState& s, const LimitLaw& law, std::optional<double> window,
                   int panels) {
    const std::int64_t t = s.time();
    if (t < 1) throw InvalidInput("ks_distance needs t >= 1");
    const double w = window.value_or(default_atom_window(t));
    const ProbabilityDistribution dist = distribution(s);
    const double td = static_cast<double>(t);

    double below = 0.0;  // P(X_t < x)
    double worst = 0.0;
    for (std::int64_t x = -t; x <= t; ++x) {
        const double p = dist.at(x);
        const double y = static_cast<double>(x) / td;
        if (std::abs(y) > w) {
            // The limit CDF is continuous away from 0, so one value serves both sides of the jump.
            const double limit = limit_cdf(law, -1.0, y, panels);
            worst = std::max({worst, std::abs(below + p - limit), std::abs(below - limit)});
        }
        below += p;
    }
    return worst;
}

double two_state_density(Complex a2, Complex b2, double x) {
    const double slope = std::norm(a2) - std::norm(b2) + 2.0 * re(a2 * cj(b2));
    return (1.0 - slope * x) * f_k(x);
}

double two_state_limit_cdf(Complex a2, Complex b2, double a, double b, int panels) {
    check_two_state(a2, b2);
    if (a > b) throw InvalidInput("two_state_limit_cdf: need a <= b");
    const double slope = std::norm(a2) - std::norm(b2) + 2.0 * re(a2 * cj(b2));
    return integrate_against_konno([&](double x) { return 1.0 - slope * x; }, a, b, panels);
}

}  // namespace memwalk
