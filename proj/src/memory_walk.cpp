#include "memwalk/memory_walk.hpp"

#include <cstdlib>
#include <string>

#include "memwalk/errors.hpp"

namespace memwalk {

namespace {

void validate(const MemoryKey& k) {
    if (std::abs(k.current - k.previous) != 1)
        throw InvalidInput("memory key needs |n1 - n2| = 1, got n2 = " + std::to_string(k.previous) +
                           ", n1 = " + std::to_string(k.current));
    if (k.coin != 0 && k.coin != 1) throw InvalidInput("memory key coin bit must be 0 or 1");
}

void accumulate(std::map<MemoryKey, Complex>& m, const MemoryKey& k, Complex v) {
    if (v == Complex{}) return;
    m[k] += v;
}

}  // namespace

FourStateLabel map_memory_state(std::int64_t previous, std::int64_t current, int coin) {
    validate({previous, current, coin});
    return {current, static_cast<int>(current - previous + 1 + coin)};
}

MemoryKey unmap_memory_state(const FourStateLabel& label) {
    if (label.chirality < 0 || label.chirality > 3) throw InvalidInput("chirality must be in 0..3");
    const int coin = label.chirality & 1;
    const std::int64_t previous = label.chirality < 2 ? label.position + 1 : label.position - 1;
    return {previous, label.position, coin};
}

MemoryWalkState::MemoryWalkState(std::int64_t time) : time_(time) {
    if (time < 0) throw InvalidInput("memory walk time must be non-negative");
}

void MemoryWalkState::set(const MemoryKey& key, Complex amplitude) {
    validate(key);
    amps_[key] = amplitude;
}

Complex MemoryWalkState::at(const MemoryKey& key) const {
    const auto it = amps_.find(key);
    return it == amps_.end() ? Complex{} : it->second;
}

double MemoryWalkState::total_probability() const {
    double s = 0.0;
    for (const auto& [k, v] : amps_) s += std::norm(v);
    return s;
}

MemoryWalkState MemoryWalkState::from_initial(const InitialState& init) {
    MemoryWalkState s(0);
    for (int ch = 0; ch < 4; ++ch) s.set(unmap_memory_state({0, ch}), init.vector()[ch]);
    return s;
}

MemoryWalkState memory_evolve(const MemoryWalkState& init, const CoinParams& coin, std::int64_t t) {
    if (t < 0) throw InvalidInput("memory_evolve: t must be non-negative");
    MemoryWalkState s = init;
    for (std::int64_t step = 0; step < t; ++step) {
        // C1: |., ., 0> -> a|0> + b|1>,  |., ., 1> -> c|0> + d|1>.
        std::map<MemoryKey, Complex> c1;
        for (const auto& [k, v] : s.amps_) {
            const MemoryKey k0{k.previous, k.current, 0};
            const MemoryKey k1{k.previous, k.current, 1};
            if (k.coin == 0) {
                accumulate(c1, k0, coin.a() * v);
                accumulate(c1, k1, coin.b() * v);
            } else {
                accumulate(c1, k0, coin.c() * v);
                accumulate(c1, k1, coin.d() * v);
            }
        }
        // C2: flip the remembered side of p = 0 kets.
        std::map<MemoryKey, Complex> c2;
        for (const auto& [k, v] : c1) {
            if (k.coin == 0) {
                const std::int64_t mirrored = 2 * k.current - k.previous;
                accumulate(c2, {mirrored, k.current, 0}, v);
            } else {
                accumulate(c2, k, v);
            }
        }
        // S: move away from the remembered side; the old position becomes memory.
        std::map<MemoryKey, Complex> shifted;
        for (const auto& [k, v] : c2) {
            const std::int64_t next = k.previous == k.current + 1 ? k.current - 1 : k.current + 1;
            accumulate(shifted, {k.current, next, k.coin}, v);
        }
        s.amps_ = std::move(shifted);
        ++s.time_;
    }
    return s;
}

ProbabilityDistribution position_marginal(const MemoryWalkState& s) {
    const std::int64_t t = s.time();
    std::vector<double> probs(static_cast<std::size_t>(2 * t + 1), 0.0);
    for (const auto& [k, v] : s.amplitudes()) {
        if (k.current < -t || k.current > t)
            throw InvalidInput("memory state has amplitude outside [-t, t]");
        probs[static_cast<std::size_t>(k.current + t)] += std::norm(v);
    }
    return ProbabilityDistribution(t, std::move(probs));
}

}  // namespace memwalk
