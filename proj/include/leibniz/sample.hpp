#pragma once
#include <random>
#include "leibniz/construct.hpp"

namespace leibniz {

// Published default seed for every seeded generator.
inline constexpr std::uint64_t default_seed = 20240611;

// Coefficient pool {−1, −½, 0, ½, 1, 2}.
const std::vector<Rational>& sample_values();

// Random extension data over small fixed pools: dim h ≤ 2 (3 for R, heis(3)),
// dim A ≤ 3. Most draws are invalid; zero-heavy draws make valid ones common.
ExtData random_ext_data(ExtKind kind, std::mt19937_64& rng);

}
