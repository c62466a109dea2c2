#pragma once

#include <cstdint>
#include <random>

#include "z2c/rational.hpp"

namespace z2c {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr long kSampleBound = 1000000;

/// Uniform integer in [-10^6, 10^6].
Rational random_coordinate(Rng& rng);
RatVector random_vector(std::size_t n, Rng& rng);
/// Vector with roughly `nonzero` random entries, the rest zero.
RatVector sparse_random_vector(std::size_t n, std::size_t nonzero, Rng& rng);

/// Value of Z2C_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = kDefaultSeed);

}  // namespace z2c
