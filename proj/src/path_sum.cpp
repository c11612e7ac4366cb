#include <bit>
#include <cstdint>
#include <string>

#include "memwalk/errors.hpp"
#include "memwalk/walk.hpp"

namespace memwalk {

C4Vector path_sum_oracle(const InitialState& init, const CoinParams& coin, std::int64_t t,
                         std::int64_t x) {
    if (t < 0) throw InvalidInput("path_sum_oracle: t must be non-negative");
    if (t > kPathSumMaxTime)
        throw ResourceError("path_sum_oracle: t = " + std::to_string(t) + " exceeds " +
                            std::to_string(kPathSumMaxTime));

    const auto [left, right] = split_coin(build_coin(coin));
    C4Vector total;
    if ((x + t) % 2 != 0 || x < -t || x > t) return total;

    // Bit s of the word selects the operator applied at step s+1: 1 = Q (right).
    const std::uint64_t words = std::uint64_t{1} << t;
    for (std::uint64_t w = 0; w < words; ++w) {
        const auto rights = static_cast<std::int64_t>(std::popcount(w));
        if (2 * rights - t != x) continue;
        C4Vector v = init.vector();
        for (std::int64_t s = 0; s < t; ++s) v = mat_vec(((w >> s) & 1U) ? right : left, v);
        total += v;
    }
    return total;
}

}  // namespace memwalk
