// memory_walk.hpp
// The 2-state walk with one-step memory on basis kets |n2, n1, p>, where n2 is
// the previous position, n1 the current one (|n1 - n2| = 1) and p the coin bit.
// Relabeling |n2, n1, p> -> |n1, n1 - n2 + 1 + p> identifies it with the
// memoryless 4-state walk.

#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "memwalk/linalg.hpp"
#include "memwalk/walk.hpp"

namespace memwalk {

struct MemoryKey {
    std::int64_t previous;  // n2
    std::int64_t current;   // n1
    int coin;               // p

    friend auto operator<=>(const MemoryKey&, const MemoryKey&) = default;
};

struct FourStateLabel {
    std::int64_t position;
    int chirality;  // 0..3

    friend bool operator==(const FourStateLabel&, const FourStateLabel&) = default;
};

// (n1, n1 - n2 + 1 + p). Throws InvalidInput unless |n1 - n2| = 1 and p is 0 or 1.
FourStateLabel map_memory_state(std::int64_t previous, std::int64_t current, int coin);

// Inverse of map_memory_state.
MemoryKey unmap_memory_state(const FourStateLabel& label);

class MemoryWalkState {
public:
    explicit MemoryWalkState(std::int64_t time = 0);

    std::int64_t time() const { return time_; }

    // Validates the key; overwrites any existing amplitude.
    void set(const MemoryKey& key, Complex amplitude);
    Complex at(const MemoryKey& key) const;

    const std::map<MemoryKey, Complex>& amplitudes() const { return amps_; }
    double total_probability() const;

    // Amplitudes on the four keys with n1 = 0 taken from (alpha, ..., delta)
    // through the inverse relabeling.
    static MemoryWalkState from_initial(const InitialState& init);

private:
    friend MemoryWalkState memory_evolve(const MemoryWalkState&, const CoinParams&, std::int64_t);

    std::int64_t time_;
    std::map<MemoryKey, Complex> amps_;
};

// t applications of S C2 C1, acting on |n2, n1, p> kets directly:
//   C1 mixes p with the coin block, C2 swaps |n+1, n, 0> <-> |n-1, n, 0>,
//   S moves |n+1, n, p> -> |n, n-1, p> and |n-1, n, p> -> |n, n+1, p>.
MemoryWalkState memory_evolve(const MemoryWalkState& init, const CoinParams& coin,
                              std::int64_t t);

// Probability of the current position n1, summed over n2 and p.
ProbabilityDistribution position_marginal(const MemoryWalkState& s);

}  // namespace memwalk
