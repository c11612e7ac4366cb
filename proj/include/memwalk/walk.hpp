// walk.hpp
// Direct-space evolution of the 4-state walk on Z.
//
// Chiralities 0 and 1 move left, 2 and 3 move right. With the coin block
// [[a, c], [b, d]] one time step is
//
//   psi_{t+1}(x) = P psi_t(x+1) + Q psi_t(x-1),   U = P + Q,
//
// where U has rows [0,0,a,c], [b,d,0,0], [a,c,0,0], [0,0,b,d]; P keeps rows
// 0,1 of U and Q keeps rows 2,3.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "memwalk/linalg.hpp"

namespace memwalk {

inline constexpr double kCoinTolerance = 1e-12;
inline constexpr double kInitTolerance = 1e-12;

// Largest time evolve() accepts without an explicit budget. Storage is
// (t + 1) C4Vectors per state, two states live at once.
inline constexpr std::int64_t kDefaultMaxTime = std::int64_t{1} << 20;

// Amplitudes of the 2x2 coin block [[a, c], [b, d]]. Construction rejects a
// block whose columns are not orthonormal within kCoinTolerance.
class CoinParams {
public:
    CoinParams(Complex a, Complex b, Complex c, Complex d);

    // a = b = c = -d = 1/sqrt(2).
    static CoinParams hadamard();

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    // max |(B^dagger B - I)_{rc}| for the 2x2 block B.
    static double unitarity_defect(Complex a, Complex b, Complex c, Complex d);

private:
    Complex a_, b_, c_, d_;
};

// Initial amplitudes (alpha, beta, gamma, delta) placed at the origin.
class InitialState {
public:
    InitialState(Complex alpha, Complex beta, Complex gamma, Complex delta);
    explicit InitialState(const C4Vector& v) : InitialState(v[0], v[1], v[2], v[3]) {}

    // Scales v to unit norm; throws InvalidInput on the zero vector.
    static InitialState normalized(const C4Vector& v);

    Complex alpha() const { return v_[0]; }
    Complex beta() const { return v_[1]; }
    Complex gamma() const { return v_[2]; }
    Complex delta() const { return v_[3]; }
    const C4Vector& vector() const { return v_; }

private:
    C4Vector v_;
};

// psi_t on its support. Only sites x = -t, -t+2, ..., t can be nonzero, so the
// state stores t + 1 slots; slot i holds x = -t + 2i.
class WalkState {
public:
    explicit WalkState(std::int64_t time);
    WalkState(std::int64_t time, std::vector<C4Vector> slots);

    static WalkState at_origin(const C4Vector& psi0);

    std::int64_t time() const { return time_; }

    // Zero for sites outside [-t, t] or of the wrong parity.
    C4Vector at(std::int64_t x) const;

    // Throws InvalidInput if x cannot carry amplitude at this time.
    void set(std::int64_t x, const C4Vector& v);

    static bool on_support(std::int64_t time, std::int64_t x) {
        return x >= -time && x <= time && ((x + time) % 2 == 0);
    }
    static std::int64_t position_of_slot(std::int64_t time, std::size_t i) {
        return -time + 2 * static_cast<std::int64_t>(i);
    }

    const std::vector<C4Vector>& slots() const { return slots_; }
    double total_probability() const;

private:
    std::int64_t time_;
    std::vector<C4Vector> slots_;
};

// P(X_t = x) for x in [-t, t] (wrong-parity sites included as zeros).
class ProbabilityDistribution {
public:
    ProbabilityDistribution(std::int64_t time, std::vector<double> probs);

    std::int64_t time() const { return time_; }
    std::int64_t min_position() const { return -time_; }
    std::int64_t max_position() const { return time_; }

    // Zero outside [-t, t].
    double at(std::int64_t x) const;
    double sum() const;
    const std::vector<double>& values() const { return probs_; }

private:
    std::int64_t time_;
    std::vector<double> probs_;
};

C4Matrix build_coin(const CoinParams& p);

struct CoinSplit {
    C4Matrix left;   // P
    C4Matrix right;  // Q
};

CoinSplit split_coin(const C4Matrix& u);

WalkState step(const WalkState& s, const C4Matrix& left, const C4Matrix& right);

// t steps from init at the origin. Throws ResourceError if t > max_time and
// InvalidInput if t < 0.
WalkState evolve(const InitialState& init, const CoinParams& coin, std::int64_t t,
                 std::int64_t max_time = kDefaultMaxTime);

ProbabilityDistribution distribution(const WalkState& s);

double return_probability(const WalkState& s);

inline constexpr std::int64_t kPathSumMaxTime = 20;

// Brute-force amplitude: the sum over every length-t word in {P, Q} whose net
// displacement (#Q - #P) equals x of the ordered product applied to psi_0(0).
// Exponential in t; throws ResourceError for t > kPathSumMaxTime.
C4Vector path_sum_oracle(const InitialState& init, const CoinParams& coin, std::int64_t t,
                         std::int64_t x);

}  // namespace memwalk
