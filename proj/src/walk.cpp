#include "memwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "memwalk/errors.hpp"

namespace memwalk {

double CoinParams::unitarity_defect(Complex a, Complex b, Complex c, Complex d) {
    // Columns (a, b) and (c, d) of the block.
    const double n1 = std::norm(a) + std::norm(b);
    const double n2 = std::norm(c) + std::norm(d);
    const Complex cross = std::conj(a) * c + std::conj(b) * d;
    return std::max({std::abs(n1 - 1.0), std::abs(n2 - 1.0), std::abs(cross)});
}

CoinParams::CoinParams(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    const double defect = unitarity_defect(a, b, c, d);
    if (!(defect <= kCoinTolerance)) {
        throw InvalidInput("coin block [[a, c], [b, d]] is not unitary (defect " +
                           std::to_string(defect) + ")");
    }
}

CoinParams CoinParams::hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return CoinParams(h, h, h, -h);
}

InitialState::InitialState(Complex alpha, Complex beta, Complex gamma, Complex delta)
    : v_(alpha, beta, gamma, delta) {
    const double n = v_.norm2();
    if (!(std::abs(n - 1.0) <= kInitTolerance)) {
        throw InvalidInput("initial state must have unit norm (|psi|^2 = " + std::to_string(n) + ")");
    }
}

InitialState InitialState::normalized(const C4Vector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("cannot normalize a zero initial state");
    return InitialState((1.0 / n) * v);
}

WalkState::WalkState(std::int64_t time) : time_(time) {
    if (time < 0) throw InvalidInput("walk time must be non-negative");
    slots_.resize(static_cast<std::size_t>(time) + 1);
}

WalkState::WalkState(std::int64_t time, std::vector<C4Vector> slots)
    : time_(time), slots_(std::move(slots)) {
    if (time < 0) throw InvalidInput("walk time must be non-negative");
    if (slots_.size() != static_cast<std::size_t>(time) + 1)
        throw InvalidInput("walk state needs exactly t + 1 slots");
}

WalkState WalkState::at_origin(const C4Vector& psi0) {
    WalkState s(0);
    s.slots_[0] = psi0;
    return s;
}

C4Vector WalkState::at(std::int64_t x) const {
    if (!on_support(time_, x)) return {};
    return slots_[static_cast<std::size_t>((x + time_) / 2)];
}

void WalkState::set(std::int64_t x, const C4Vector& v) {
    if (!on_support(time_, x))
        throw InvalidInput("site " + std::to_string(x) + " is not on the support at time " +
                           std::to_string(time_));
    slots_[static_cast<std::size_t>((x + time_) / 2)] = v;
}

double WalkState::total_probability() const {
    double s = 0.0;
    for (const auto& v : slots_) s += v.norm2();
    return s;
}

ProbabilityDistribution::ProbabilityDistribution(std::int64_t time, std::vector<double> probs)
    : time_(time), probs_(std::move(probs)) {
    if (time < 0 || probs_.size() != static_cast<std::size_t>(2 * time + 1))
        throw InvalidInput("distribution needs 2t + 1 entries");
}

double ProbabilityDistribution::at(std::int64_t x) const {
    if (x < -time_ || x > time_) return 0.0;
    return probs_[static_cast<std::size_t>(x + time_)];
}

double ProbabilityDistribution::sum() const {
    return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

C4Matrix build_coin(const CoinParams& p) {
    const Complex z = 0.0;
    return C4Matrix::from_rows({{{z, z, p.a(), p.c()},
                                 {p.b(), p.d(), z, z},
                                 {p.a(), p.c(), z, z},
                                 {z, z, p.b(), p.d()}}});
}

CoinSplit split_coin(const C4Matrix& u) {
    CoinSplit s;
    for (std::size_t c = 0; c < kDim; ++c) {
        s.left(0, c) = u(0, c);
        s.left(1, c) = u(1, c);
        s.right(2, c) = u(2, c);
        s.right(3, c) = u(3, c);
    }
    return s;
}

WalkState step(const WalkState& s, const C4Matrix& left, const C4Matrix& right) {
    const std::int64_t t = s.time();
    const auto& old_slots = s.slots();
    std::vector<C4Vector> next(static_cast<std::size_t>(t) + 2);
    // New slot i is x' = -(t+1) + 2i. Its right neighbour x'+1 is old slot i,
    // its left neighbour x'-1 is old slot i-1.
    for (std::size_t i = 0; i < next.size(); ++i) {
        C4Vector v;
        if (i < old_slots.size()) v += mat_vec(left, old_slots[i]);
        if (i >= 1) v += mat_vec(right, old_slots[i - 1]);
        next[i] = v;
    }
    return WalkState(t + 1, std::move(next));
}

WalkState evolve(const InitialState& init, const CoinParams& coin, std::int64_t t,
                 std::int64_t max_time) {
    if (t < 0) throw InvalidInput("evolve: t must be non-negative");
    if (t > max_time)
        throw ResourceError("evolve: t = " + std::to_string(t) + " exceeds the time budget " +
                            std::to_string(max_time));
    const auto [left, right] = split_coin(build_coin(coin));
    WalkState s = WalkState::at_origin(init.vector());
    for (std::int64_t k = 0; k < t; ++k) s = step(s, left, right);
    return s;
}

ProbabilityDistribution distribution(const WalkState& s) {
    const std::int64_t t = s.time();
    std::vector<double> probs(static_cast<std::size_t>(2 * t + 1), 0.0);
    const auto& slots = s.slots();
    for (std::size_t i = 0; i < slots.size(); ++i) probs[2 * i] = slots[i].norm2();
    return ProbabilityDistribution(t, std::move(probs));
}

double return_probability(const WalkState& s) { return s.at(0).norm2(); }

}  // namespace memwalk
