#pragma once

#include <random>

#include "memwalk/walk.hpp"

namespace memwalk {

// Gaussian components, normalized: uniform on the unit sphere of C^4.
InitialState random_initial_state(std::mt19937_64& rng);

// Block e^{i chi}-rotated: (a, b) = (e^{i p1} cos th, e^{i p2} sin th),
// (c, d) = e^{i chi} (-conj b, conj a). Every U(2) block arises this way.
CoinParams random_coin(std::mt19937_64& rng);

}  // namespace memwalk
