// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances and time limits are pinned below.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "memwalk/limit_law.hpp"
#include "memwalk/memory_walk.hpp"
#include "memwalk/sampling.hpp"
#include "memwalk/spectral.hpp"
#include "memwalk/stationary.hpp"
#include "memwalk/walk.hpp"
#include "oracles.hpp"

using namespace memwalk;

namespace {

const InitialState kSymmetric(0.5, 0.5, 0.5, 0.5);
const InitialState kAntisymmetric(0.5, -0.5, -0.5, 0.5);
const CoinParams kHadamard = CoinParams::hadamard();

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome golden_values() {
    const double p2 = return_probability(evolve(kSymmetric, kHadamard, 2));
    const double p4 = return_probability(evolve(kSymmetric, kHadamard, 4));
    const C4Vector psi = evolve(InitialState(0.0, 0.0, 1.0, 0.0), kHadamard, 4).at(0);
    const double e = std::max({std::abs(p2 - 0.5), std::abs(p4 - 0.625),
                               max_abs_diff(psi, C4Vector(0.5, -0.25, 0.5, 0.25))});
    return {e <= 1e-12, fmt("max error %.3g (tol 1e-12)", e)};
}

Outcome localization_limit() {
    const double sym = return_probability(evolve(kSymmetric, kHadamard, 2000));
    const double anti = return_probability(evolve(kAntisymmetric, kHadamard, 2000));
    const double es = std::abs(sym - oracle::kTwoMinusSqrt2);
    return {es <= 0.02 && anti <= 0.02,
            fmt("P(X_2000=0): symmetric %.6f (|err| %.2g), antisymmetric %.2g (tol 0.02)", sym, es, anti)};
}

Outcome theorem1_consistency() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const InitialState init = random_initial_state(rng);
        worst = std::max(worst, std::abs(theorem1_p0(init) - stationary_amplitude(0, init).even_limit.norm2()));
        for (std::int64_t x = -8; x <= 8; ++x) {
            const StationaryAmplitude a = stationary_amplitude(x, init);
            worst = std::max(worst, std::abs(theorem1_px(x, Parity::even, init) - a.even_limit.norm2()));
            worst = std::max(worst, std::abs(theorem1_px(x, Parity::odd, init) - a.odd_limit.norm2()));
        }
    }
    return {worst <= 1e-12, fmt("max |limit - |amplitude|^2| %.3g over 100 inits, |x| <= 8 (tol 1e-12)", worst)};
}

Outcome sum_rule() {
    std::mt19937_64 rng(102);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const InitialState init = random_initial_state(rng);
        worst = std::max(worst, std::abs(stationary_total(init, Parity::even) - delta_mass(init)));
        worst = std::max(worst, std::abs(stationary_total(init, Parity::odd) - delta_mass(init)));
    }
    return {worst <= 1e-10, fmt("max |sum - delta| %.3g over 100 inits, both parities (tol 1e-10)", worst)};
}

Outcome normalization() {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const LimitLaw law = limit_law(random_initial_state(rng));
        worst = std::max(worst, std::abs(law.delta + density_mass(law) - 1.0));
    }
    const double ds = std::abs(delta_mass(kSymmetric) - oracle::kInvSqrt2);
    const double da = std::abs(delta_mass(kAntisymmetric));
    return {worst <= 1e-8 && ds <= 1e-15 && da <= 1e-15,
            fmt("max |mass - 1| %.3g (tol 1e-8); delta errors %.2g, %.2g", worst, ds, da)};
}

Outcome dual_routes() {
    std::mt19937_64 rng(104);
    double delta_err = 0.0, moment_err = 0.0;
    for (int n = 0; n < 20; ++n) {
        const InitialState init = random_initial_state(rng);
        delta_err = std::max(delta_err, std::abs(delta_mass(init) - delta_mass_k_integral(init)));
        for (int r = 0; r <= 4; ++r)
            moment_err = std::max(moment_err, std::abs(theoretical_moment(init, r) - theoretical_moment_x(init, r)));
    }
    return {delta_err <= 1e-8 && moment_err <= 1e-6,
            fmt("delta k-integral error %.3g (tol 1e-8), moment k vs x error %.3g (tol 1e-6)", delta_err,
                moment_err)};
}

Outcome weak_convergence() {
    double moment_err = 0.0, ks = 0.0;
    for (const InitialState& init : {kSymmetric, kAntisymmetric}) {
        const WalkState s = evolve(init, kHadamard, 2000);
        for (int r : {1, 2})
            moment_err = std::max(moment_err, std::abs(empirical_rescaled_moment(s, r) - theoretical_moment(init, r)));
        ks = std::max(ks, ks_distance(s, limit_law(init)));
    }
    return {moment_err <= 1e-2 && ks <= 0.05,
            fmt("t=2000: moment error %.3g (tol 1e-2), KS %.3g (tol 0.05)", moment_err, ks)};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(105);
    double path = 0.0, memory = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const CoinParams coin = random_coin(rng);
        const InitialState init = random_initial_state(rng);
        const MemoryWalkState m0 = MemoryWalkState::from_initial(init);
        for (std::int64_t t = 0; t <= 12; ++t) {
            const ProbabilityDistribution d = distribution(evolve(init, coin, t));
            const ProbabilityDistribution dm = position_marginal(memory_evolve(m0, coin, t));
            for (std::int64_t x = -t; x <= t; ++x) {
                path = std::max(path, std::abs(d.at(x) - path_sum_oracle(init, coin, t, x).norm2()));
                memory = std::max(memory, std::abs(d.at(x) - dm.at(x)));
            }
        }
    }
    return {path <= 1e-12 && memory <= 1e-12,
            fmt("path-sum error %.3g, memory-walk error %.3g (tol 1e-12)", path, memory)};
}

Outcome spectral_health() {
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> kdist(-std::numbers::pi, std::numbers::pi);
    double residual = 0.0, gram = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const double k = kdist(rng);
        const EigenSystem e = hadamard_eigen(k);
        const C4Matrix u = hat_u(kHadamard, k);
        for (std::size_t j = 0; j < 4; ++j) {
            residual = std::max(residual, (mat_vec(u, e.eigenvectors[j]) - e.eigenvalues[j] * e.eigenvectors[j]).norm());
            for (std::size_t l = 0; l < 4; ++l)
                gram = std::max(gram, std::abs(inner(e.eigenvectors[l], e.eigenvectors[j]) - (l == j ? 1.0 : 0.0)));
        }
    }
    double fourier = 0.0;
    for (int n = 0; n < 20; ++n) {
        const std::int64_t t = 10 * (n + 1);
        const InitialState init = random_initial_state(rng);
        const WalkState a = fourier_evolve(init, kHadamard, t, 2 * t + 2);
        const WalkState b = evolve(init, kHadamard, t);
        for (std::int64_t x = -t; x <= t; ++x) fourier = std::max(fourier, max_abs_diff(a.at(x), b.at(x)));
    }
    return {residual <= 1e-10 && gram <= 1e-10 && fourier <= 1e-10,
            fmt("residual %.3g, gram %.3g, fourier vs direct %.3g (tol 1e-10)", residual, gram, fourier)};
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden values", 1.0, golden_values},
        {2, "localization limit", 30.0, localization_limit},
        {3, "stationary limits match amplitudes", 60.0, theorem1_consistency},
        {4, "sum rule", 60.0, sum_rule},
        {5, "limit law normalization", 60.0, normalization},
        {6, "dual-route identities", 60.0, dual_routes},
        {7, "weak convergence", 120.0, weak_convergence},
        {8, "oracle equivalence", 60.0, oracle_equivalence},
        {9, "spectral health", 60.0, spectral_health},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, "threw"};
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.time_limit_s;
        const bool ok = o.passed && in_time;
        failures += ok ? 0 : 1;
        std::printf("%s criterion %d (%s): %s; %.2fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.time_limit_s);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
