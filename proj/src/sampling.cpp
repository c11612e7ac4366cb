#include "memwalk/sampling.hpp"

#include <cmath>
#include <numbers>

namespace memwalk {

InitialState random_initial_state(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    C4Vector v;
    for (std::size_t i = 0; i < kDim; ++i) v[i] = Complex(g(rng), g(rng));
    return InitialState::normalized(v);
}

CoinParams random_coin(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double th = angle(rng);
    const Complex a = std::cos(th) * std::polar(1.0, angle(rng));
    const Complex b = std::sin(th) * std::polar(1.0, angle(rng));
    const Complex phase = std::polar(1.0, angle(rng));
    return CoinParams(a, b, -phase * std::conj(b), phase * std::conj(a));
}

}  // namespace memwalk
