#include <doctest.h>

#include <cmath>
#include <random>

#include "memwalk/errors.hpp"
#include "memwalk/sampling.hpp"
#include "memwalk/walk.hpp"
#include "oracles.hpp"

using namespace memwalk;

namespace {

const InitialState kSymmetric(0.5, 0.5, 0.5, 0.5);
const InitialState kAntisymmetric(0.5, -0.5, -0.5, 0.5);
const InitialState kGammaOnly(0.0, 0.0, 1.0, 0.0);

C4Matrix scaled(double s, std::array<std::array<double, 4>, 4> rows) {
    C4Matrix m;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m(r, c) = s * rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("CoinParams validation") {
    CHECK_NOTHROW(CoinParams::hadamard());
    CHECK_THROWS_AS(CoinParams(1.0, 1.0, 1.0, 1.0), InvalidInput);
    // A defect of 1e-9 is rejected, not renormalized.
    CHECK_THROWS_AS(CoinParams(1.0 + 1e-9, 0.0, 0.0, 1.0), InvalidInput);
    CHECK_NOTHROW(CoinParams(Complex(0, 1), 0.0, 0.0, Complex(0, -1)));
}

TEST_CASE("InitialState validation") {
    CHECK_THROWS_AS(InitialState(1.0, 1.0, 0.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(InitialState::normalized(C4Vector{}), InvalidInput);
    const InitialState s = InitialState::normalized(C4Vector(3.0, 0.0, 4.0, 0.0));
    CHECK(s.alpha().real() == doctest::Approx(0.6));
    CHECK(s.gamma().real() == doctest::Approx(0.8));
}

TEST_CASE("build_coin") {
    SUBCASE("Hadamard matches the 4-state Hadamard matrix") {
        const C4Matrix expected = scaled(oracle::kInvSqrt2, {{{0, 0, 1, 1}, {1, -1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}}});
        CHECK(max_abs_diff(build_coin(CoinParams::hadamard()), expected) < 1e-15);
    }
    SUBCASE("a = d = 1 exchanges states 0 and 2") {
        const C4Matrix expected = scaled(1.0, {{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}});
        CHECK(build_coin(CoinParams(1.0, 0.0, 0.0, 1.0)) == expected);
    }
    SUBCASE("a = d = 0, b = c = 1 agrees with hand multiplication") {
        const C4Matrix expected = scaled(1.0, {{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
        CHECK(build_coin(CoinParams(0.0, 1.0, 1.0, 0.0)) == expected);
        const Complex z = 0.0, o = 1.0;
        const C4Matrix c1 = C4Matrix::from_rows({{{z, o, z, z}, {o, z, z, z}, {z, z, z, o}, {z, z, o, z}}});
        const C4Matrix c2 = C4Matrix::from_rows({{{z, z, o, z}, {z, o, z, z}, {o, z, z, z}, {z, z, z, o}}});
        CHECK(mat_mul(c2, c1) == expected);
    }
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) CHECK(is_unitary(build_coin(random_coin(rng)), 1e-12));
}

TEST_CASE("split_coin") {
    const C4Matrix u = build_coin(CoinParams::hadamard());
    const auto [p, q] = split_coin(u);
    const C4Matrix p_expected = scaled(oracle::kInvSqrt2, {{{0, 0, 1, 1}, {1, -1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
    const C4Matrix q_expected = scaled(oracle::kInvSqrt2, {{{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}}});
    CHECK(max_abs_diff(p, p_expected) < 1e-15);
    CHECK(max_abs_diff(q, q_expected) < 1e-15);

    const auto [pi, qi] = split_coin(C4Matrix::identity());
    CHECK(pi == C4Matrix::diagonal(1.0, 1.0, 0.0, 0.0));
    CHECK(qi == C4Matrix::diagonal(0.0, 0.0, 1.0, 1.0));

    std::mt19937_64 rng(2);
    for (int n = 0; n < 20; ++n) {
        const C4Matrix m = build_coin(random_coin(rng));
        const auto [l, r] = split_coin(m);
        CHECK(l + r == m);
    }
}

TEST_CASE("step") {
    const auto [p, q] = split_coin(build_coin(CoinParams::hadamard()));

    SUBCASE("one step from |0>") {
        const WalkState s = step(WalkState::at_origin(C4Vector::basis(0)), p, q);
        CHECK(s.time() == 1);
        CHECK(max_abs_diff(s.at(-1), C4Vector(0.0, oracle::kInvSqrt2, 0.0, 0.0)) < 1e-15);
        CHECK(max_abs_diff(s.at(1), C4Vector(0.0, 0.0, oracle::kInvSqrt2, 0.0)) < 1e-15);
        CHECK(s.at(0) == C4Vector{});
    }
    SUBCASE("zero state stays zero") {
        WalkState z(7);
        for (int n = 0; n < 3; ++n) z = step(z, p, q);
        CHECK(z.total_probability() == 0.0);
    }
    SUBCASE("two steps apply PQ + QP at the origin") {
        const C4Matrix expected = scaled(0.5, {{{1, 1, 1, -1}, {0, 0, 0, 0}, {1, -1, 1, 1}, {0, 0, 0, 0}}});
        std::mt19937_64 rng(4);
        const InitialState init = random_initial_state(rng);
        WalkState s = WalkState::at_origin(init.vector());
        s = step(step(s, p, q), p, q);
        CHECK(max_abs_diff(s.at(0), mat_vec(expected, init.vector())) < 1e-15);
        CHECK(max_abs_diff(s.at(0), mat_vec(mat_mul(p, q) + mat_mul(q, p), init.vector())) < 1e-15);
    }
    SUBCASE("linearity") {
        std::mt19937_64 rng(9);
        const C4Vector a = random_initial_state(rng).vector();
        const C4Vector b = random_initial_state(rng).vector();
        const Complex ca(0.3, -1.2), cb(-0.7, 0.4);
        WalkState sa = WalkState::at_origin(a), sb = WalkState::at_origin(b);
        WalkState sab = WalkState::at_origin(ca * a + cb * b);
        for (int n = 0; n < 15; ++n) {
            sa = step(sa, p, q);
            sb = step(sb, p, q);
            sab = step(sab, p, q);
        }
        for (std::int64_t x = -15; x <= 15; ++x)
            CHECK(max_abs_diff(sab.at(x), ca * sa.at(x) + cb * sb.at(x)) < 1e-14);
    }
}

TEST_CASE("evolve") {
    const CoinParams h = CoinParams::hadamard();
    SUBCASE("t = 0 is a point mass at the origin") {
        const ProbabilityDistribution d = distribution(evolve(kSymmetric, h, 0));
        CHECK(d.at(0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(d.values().size() == 1);
    }
    SUBCASE("P(X_2 = 0) = 1/2") {
        CHECK(std::abs(distribution(evolve(kSymmetric, h, 2)).at(0) - 0.5) <= 1e-12);
    }
    SUBCASE("psi_4(0) from |2> is (2, -1, 2, 1)/4") {
        const C4Vector psi = evolve(kGammaOnly, h, 4).at(0);
        CHECK(max_abs_diff(psi, C4Vector(0.5, -0.25, 0.5, 0.25)) <= 1e-12);
    }
    SUBCASE("psi_4(0) matrix against every basis input") {
        const C4Matrix expected = scaled(0.25, {{{2, 0, 2, 0}, {1, 1, -1, 1}, {2, 0, 2, 0}, {-1, 1, 1, 1}}});
        for (std::size_t j = 0; j < 4; ++j) {
            C4Vector e = C4Vector::basis(j);
            const C4Vector psi = evolve(InitialState(e), h, 4).at(0);
            CHECK(max_abs_diff(psi, mat_vec(expected, e)) <= 1e-12);
        }
    }
    SUBCASE("budget and precondition") {
        CHECK_THROWS_AS(evolve(kSymmetric, h, -1), InvalidInput);
        CHECK_THROWS_AS(evolve(kSymmetric, h, 11, 10), ResourceError);
        CHECK_NOTHROW(evolve(kSymmetric, h, 10, 10));
    }
}

TEST_CASE("distribution") {
    const CoinParams h = CoinParams::hadamard();
    CHECK(std::abs(distribution(evolve(kSymmetric, h, 4)).at(0) - 0.625) <= 1e-12);

    std::mt19937_64 rng(21);
    const ProbabilityDistribution d1 = distribution(evolve(random_initial_state(rng), h, 1));
    CHECK(d1.at(-1) + d1.at(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d1.at(0) == 0.0);

    const ProbabilityDistribution d10 = distribution(evolve(kSymmetric, h, 10));
    for (std::int64_t x = -10; x <= 10; ++x)
        CHECK(std::abs(d10.at(x) - path_sum_oracle(kSymmetric, h, 10, x).norm2()) <= 1e-12);
}

TEST_CASE("return_probability") {
    const CoinParams h = CoinParams::hadamard();
    CHECK(return_probability(evolve(kSymmetric, h, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(return_probability(evolve(kSymmetric, h, 2)) - 0.5) <= 1e-12);
    CHECK(std::abs(return_probability(evolve(kSymmetric, h, 500)) - oracle::kTwoMinusSqrt2) <= 0.02);
}

TEST_CASE("path_sum_oracle") {
    const CoinParams h = CoinParams::hadamard();
    std::mt19937_64 rng(8);
    const InitialState init = random_initial_state(rng);
    CHECK(path_sum_oracle(init, h, 0, 0) == init.vector());
    CHECK(path_sum_oracle(init, h, 0, 2) == C4Vector{});
    CHECK(max_abs_diff(path_sum_oracle(kGammaOnly, h, 4, 0), C4Vector(0.5, -0.25, 0.5, 0.25)) <= 1e-12);

    const C4Matrix pq_qp = scaled(0.5, {{{1, 1, 1, -1}, {0, 0, 0, 0}, {1, -1, 1, 1}, {0, 0, 0, 0}}});
    CHECK(max_abs_diff(path_sum_oracle(kSymmetric, h, 2, 0), mat_vec(pq_qp, kSymmetric.vector())) <= 1e-12);

    CHECK_THROWS_AS(path_sum_oracle(init, h, 21, 1), ResourceError);
    CHECK_NOTHROW(path_sum_oracle(init, h, 20, 20));
}

TEST_CASE("property: oracle equivalence for random coins and inits, t <= 12") {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int pair = 0; pair < 50; ++pair) {
        const CoinParams coin = random_coin(rng);
        const InitialState init = random_initial_state(rng);
        for (std::int64_t t = 0; t <= 12; ++t) {
            const ProbabilityDistribution d = distribution(evolve(init, coin, t));
            for (std::int64_t x = -t; x <= t; ++x)
                worst = std::max(worst, std::abs(d.at(x) - path_sum_oracle(init, coin, t, x).norm2()));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("property: evolve agrees with an independently built lattice walk") {
    std::mt19937_64 rng(77);
    for (int n = 0; n < 10; ++n) {
        const CoinParams coin = random_coin(rng);
        const InitialState init = random_initial_state(rng);
        oracle::LatticeWalk lattice(coin.a(), coin.b(), coin.c(), coin.d(), init.vector());
        for (int t = 1; t <= 40; ++t) lattice.step();
        const WalkState s = evolve(init, coin, 40);
        for (std::int64_t x = -41; x <= 41; ++x) CHECK(max_abs_diff(s.at(x), lattice.at(x)) < 1e-13);
    }
}

TEST_CASE("property: norm conservation and parity up to t = 5000") {
    std::mt19937_64 rng(13);
    const InitialState init = random_initial_state(rng);
    const auto [p, q] = split_coin(build_coin(CoinParams::hadamard()));
    WalkState s = WalkState::at_origin(init.vector());
    double worst = 0.0;
    for (int t = 1; t <= 5000; ++t) {
        s = step(s, p, q);
        worst = std::max(worst, std::abs(s.total_probability() - 1.0));
    }
    CHECK(worst <= 1e-10);

    const ProbabilityDistribution d = distribution(s);
    for (std::int64_t x = -5000; x <= 5000; x += 1)
        if ((x + 5000) % 2 != 0) REQUIRE(d.at(x) == 0.0);
    CHECK(std::abs(d.sum() - 1.0) <= 1e-10);

    for (int n = 0; n < 5; ++n) {
        const CoinParams coin = random_coin(rng);
        CHECK(std::abs(evolve(random_initial_state(rng), coin, 1000).total_probability() - 1.0) <= 1e-10);
    }
}

TEST_CASE("WalkState support bookkeeping") {
    WalkState s(3);
    CHECK_THROWS_AS(s.set(0, C4Vector::basis(0)), InvalidInput);
    CHECK_THROWS_AS(s.set(5, C4Vector::basis(0)), InvalidInput);
    s.set(-3, C4Vector::basis(1));
    CHECK(s.at(-3) == C4Vector::basis(1));
    CHECK(s.at(-4) == C4Vector{});
    CHECK_THROWS_AS(WalkState(-1), InvalidInput);
}
