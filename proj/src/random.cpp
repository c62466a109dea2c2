#include "z2c/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace z2c {

Rational random_coordinate(Rng& rng) {
  std::uniform_int_distribution<long> dist(-kSampleBound, kSampleBound);
  return Rational(dist(rng));
}

RatVector random_vector(std::size_t n, Rng& rng) {
  RatVector v(n);
  for (auto& x : v) x = random_coordinate(rng);
  return v;
}

RatVector sparse_random_vector(std::size_t n, std::size_t nonzero, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  RatVector v(n);
  for (std::size_t i = 0; i < std::min(n, nonzero); ++i) v[idx[i]] = random_coordinate(rng);
  return v;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("Z2C_SEED");
  if (s == nullptr || *s == '\0') return fallback;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used == std::string(s).size()) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace z2c
