#include "memwalk/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "memwalk/limit_law.hpp"
#include "memwalk/memory_walk.hpp"
#include "memwalk/sampling.hpp"
#include "memwalk/spectral.hpp"
#include "memwalk/stationary.hpp"
#include "memwalk/walk.hpp"

namespace memwalk::cli {

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> t{
        {"unitarity", 1e-12},
        {"norm", 1e-10},
        {"parity", 0.0},
        {"oracle", 1e-12},
        {"bijection", 1e-12},
        {"eigen-residual", 1e-10},
        {"eigen-orthonormality", 1e-10},
        {"eigen-determinant", 1e-10},
        {"fourier", 1e-10},
        {"stationary-consistency", 1e-12},
        {"sum-limit-equals-delta", 1e-10},
        {"delta-dual", 1e-8},
        {"normalization", 1e-8},
        {"moment-duality", 1e-6},
        {"h-finite-difference", 1e-7},
        {"density-nonnegativity", 1e-10},
        // ratio of late to early worst-case error of P(X_2t = 0)
        {"convergence-trend", 1.0},
    };
    return t;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Suite {
public:
    explicit Suite(const RunConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    double tol(const std::string& name) const {
        const auto it = cfg_.tolerances.find(name);
        return it != cfg_.tolerances.end() ? it->second : default_tolerances().at(name);
    }

    void record(const std::string& name, double measured, std::string detail) {
        const double thr = tol(name);
        report_.checks.push_back({name, measured, thr, measured <= thr, std::move(detail)});
    }

    std::mt19937_64& rng() { return rng_; }
    const RunConfig& cfg() const { return cfg_; }
    VerifyReport take() { return std::move(report_); }

private:
    const RunConfig& cfg_;
    std::mt19937_64 rng_;
    VerifyReport report_;
};

C4Matrix perturbed_coin(const RunConfig& cfg) {
    C4Matrix u = build_coin(cfg.coin_params());
    u(0, 2) += cfg.perturb_coin;
    u(2, 0) += cfg.perturb_coin;
    return u;
}

void check_unitarity_and_norm(Suite& s) {
    const C4Matrix u = perturbed_coin(s.cfg());
    s.record("unitarity", max_abs_diff(mat_mul(u, adjoint(u)), C4Matrix::identity()),
             "max |U U^dagger - I| of the configured coin");

    const auto [left, right] = split_coin(u);
    WalkState w = WalkState::at_origin(s.cfg().initial_state().vector());
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        w = step(w, left, right);
        worst = std::max(worst, std::abs(w.total_probability() - 1.0));
    }
    s.record("norm", worst, "max |sum_x P(X_t=x) - 1| over t <= 1000");
}

void check_oracle(Suite& s) {
    double worst = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const CoinParams coin = random_coin(s.rng());
        const InitialState init = random_initial_state(s.rng());
        const auto [left, right] = split_coin(build_coin(coin));
        WalkState w = WalkState::at_origin(init.vector());
        for (std::int64_t t = 0; t <= 12; ++t) {
            if (t > 0) w = step(w, left, right);
            for (std::int64_t x = -t; x <= t; ++x) {
                const double p = path_sum_oracle(init, coin, t, x).norm2();
                worst = std::max(worst, std::abs(p - w.at(x).norm2()));
            }
        }
    }
    s.record("oracle", worst, "path-sum vs evolve, 50 random (coin, init), t <= 12");
}

void check_bijection_and_parity(Suite& s) {
    double worst = 0.0;
    double parity = 0.0;
    for (int pair = 0; pair < 20; ++pair) {
        const CoinParams coin = random_coin(s.rng());
        const InitialState init = random_initial_state(s.rng());
        MemoryWalkState m = MemoryWalkState::from_initial(init);
        const auto [left, right] = split_coin(build_coin(coin));
        WalkState w = WalkState::at_origin(init.vector());
        for (std::int64_t t = 0; t <= 12; ++t) {
            if (t > 0) {
                m = memory_evolve(m, coin, 1);
                w = step(w, left, right);
            }
            const ProbabilityDistribution pm = position_marginal(m);
            const ProbabilityDistribution pw = distribution(w);
            for (std::int64_t x = -t; x <= t; ++x) {
                worst = std::max(worst, std::abs(pm.at(x) - pw.at(x)));
                if ((x + t) % 2 != 0) parity = std::max({parity, pm.at(x), pw.at(x)});
            }
        }
    }
    s.record("bijection", worst, "memory walk marginal vs 4-state walk, 20 pairs, t <= 12");
    s.record("parity", parity, "largest probability on a wrong-parity site");
}

void check_eigen(Suite& s) {
    std::uniform_real_distribution<double> kd(-std::numbers::pi, std::numbers::pi);
    double residual = 0.0, gram = 0.0, det = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const double k = kd(s.rng());
        const EigenSystem sys = hadamard_eigen(k);
        const C4Matrix u = hat_u(CoinParams::hadamard(), k);
        Complex prod = 1.0;
        for (std::size_t j = 0; j < 4; ++j) {
            residual = std::max(residual, (mat_vec(u, sys.eigenvectors[j]) -
                                           sys.eigenvalues[j] * sys.eigenvectors[j]).norm());
            for (std::size_t i = 0; i < 4; ++i) {
                const Complex g = inner(sys.eigenvectors[i], sys.eigenvectors[j]);
                gram = std::max(gram, std::abs(g - (i == j ? 1.0 : 0.0)));
            }
            prod *= sys.eigenvalues[j];
        }
        det = std::max(det, std::abs(prod - determinant(u)));
    }
    s.record("eigen-residual", residual, "max |U(k) v - l v| over 1000 random k");
    s.record("eigen-orthonormality", gram, "max |<v_i|v_j> - delta_ij|");
    s.record("eigen-determinant", det, "|prod l_j - det U(k)|");
}

void check_fourier(Suite& s) {
    double worst = 0.0;
    const CoinParams coin = s.cfg().coin_params();
    for (int n = 0; n < 20; ++n) {
        const InitialState init = random_initial_state(s.rng());
        const auto [left, right] = split_coin(build_coin(coin));
        WalkState w = WalkState::at_origin(init.vector());
        // Every 7th time plus the endpoint keeps the suite fast; tests sweep all t.
        for (std::int64_t t = 0; t <= 200; ++t) {
            if (t > 0) w = step(w, left, right);
            if (t % 7 != 0 && t != 200) continue;
            const WalkState f = fourier_evolve(init, coin, t, 2 * t + 2);
            for (std::int64_t x = -t; x <= t; x += 2) worst = std::max(worst, max_abs_diff(f.at(x), w.at(x)));
        }
    }
    s.record("fourier", worst, "momentum-grid evolution vs direct evolution, t <= 200");
}

void check_theorem_identities(Suite& s) {
    double consistency = 0.0, sum_rule = 0.0, dual = 0.0, norm = 0.0, nonneg = 0.0;
    for (int n = 0; n < 100; ++n) {
        const InitialState init = random_initial_state(s.rng());
        for (std::int64_t x = -6; x <= 6; ++x) {
            const StationaryAmplitude a = stationary_amplitude(x, init);
            consistency = std::max({consistency,
                                    std::abs(a.even_limit.norm2() - theorem1_px(x, Parity::even, init)),
                                    std::abs(a.odd_limit.norm2() - theorem1_px(x, Parity::odd, init))});
        }
        const double delta = delta_mass(init);
        sum_rule = std::max({sum_rule, std::abs(stationary_total(init, Parity::even) - delta),
                             std::abs(stationary_total(init, Parity::odd) - delta)});
        dual = std::max(dual, std::abs(delta - delta_mass_k_integral(init, 512)));
        const LimitLaw law = limit_law(init);
        norm = std::max(norm, std::abs(law.delta + density_mass(law) - 1.0));
        for (int i = 1; i < 2000; ++i) {
            const double x = (-1.0 + i / 1000.0) / std::numbers::sqrt2;
            nonneg = std::max(nonneg, -law.density(x));
        }
    }
    s.record("stationary-consistency", consistency, "Theorem-1 values vs |limit amplitude|^2, 100 inits");
    s.record("sum-limit-equals-delta", sum_rule, "sum_x lim P(X_t=x) vs atom mass, both parities, 100 inits");
    s.record("delta-dual", dual, "closed-form atom vs momentum integral, 100 inits");
    s.record("normalization", norm, "atom + density mass - 1, 100 inits");
    s.record("density-nonnegativity", nonneg, "largest negative density value, 100 inits");
}

void check_moments(Suite& s) {
    double worst = 0.0;
    for (int n = 0; n < 20; ++n) {
        const InitialState init = random_initial_state(s.rng());
        for (int r = 0; r <= 4; ++r)
            worst = std::max(worst, std::abs(theoretical_moment(init, r, 512) - theoretical_moment_x(init, r)));
    }
    s.record("moment-duality", worst, "k-space vs x-space limit moments, r <= 4, 20 inits");

    std::uniform_real_distribution<double> kd(-std::numbers::pi, std::numbers::pi);
    double fd = 0.0;
    const double h = 1e-5;
    auto lambda3 = [](double k) {
        const double sk = std::sin(k);
        return Complex(-std::cos(k), std::sqrt(1.0 + sk * sk)) / std::numbers::sqrt2;
    };
    for (int n = 0; n < 1000; ++n) {
        const double k = kd(s.rng());
        const Complex deriv = (lambda3(k + h) - lambda3(k - h)) / (2.0 * h);
        const double numeric = (Complex(0.0, 1.0) * deriv / lambda3(k)).real();
        fd = std::max(fd, std::abs(numeric - h_j(k, 3)));
    }
    s.record("h-finite-difference", fd, "analytic h_3 vs central difference, 1000 k");
}

void check_convergence(Suite& s) {
    const std::array<std::int64_t, 5> times{50, 100, 200, 400, 800};
    std::array<double, 5> worst{};
    const auto [left, right] = split_coin(build_coin(CoinParams::hadamard()));
    for (int n = 0; n < 10; ++n) {
        const InitialState init = random_initial_state(s.rng());
        const double target = theorem1_p0(init);
        WalkState w = WalkState::at_origin(init.vector());
        std::size_t next = 0;
        for (std::int64_t t = 1; t <= 2 * times.back(); ++t) {
            w = step(w, left, right);
            if (next < times.size() && t == 2 * times[next]) {
                worst[next] = std::max(worst[next], std::abs(return_probability(w) - target));
                ++next;
            }
        }
    }
    const double early = std::max(worst[0], worst[1]);
    const double late = std::max(worst[3], worst[4]);
    std::ostringstream d;
    d << "max over 10 inits of |P(X_2t=0) - limit| at t=50..800:";
    for (double v : worst) {
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.3g", v);
        d << buf;
    }
    s.record("convergence-trend", late / early, d.str());
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg) {
    Suite s(cfg);
    check_unitarity_and_norm(s);
    check_oracle(s);
    check_bijection_and_parity(s);
    check_eigen(s);
    check_fourier(s);
    check_theorem_identities(s);
    check_moments(s);
    check_convergence(s);
    return s.take();
}

std::string format_report(const VerifyReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s %-24s measured=%-12.4g threshold=%-10.3g ", c.passed ? "PASS" : "FAIL",
                      c.name.c_str(), c.measured, c.threshold);
        os << buf << c.detail << '\n';
    }
    os << (r.all_passed() ? "all checks passed" : "verification FAILED") << '\n';
    return os.str();
}

}  // namespace memwalk::cli
