#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace z2c::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

PropertyResult poisson_antisymmetry(std::size_t cases, std::uint64_t seed);
PropertyResult poisson_leibniz(std::size_t cases, std::uint64_t seed);
PropertyResult poisson_jacobi(std::size_t cases, std::uint64_t seed);
PropertyResult shift_symmetry(std::size_t cases, std::uint64_t seed);
PropertyResult grading_closure(std::size_t cases, std::uint64_t seed);
PropertyResult algebra_jacobi(std::size_t cases, std::uint64_t seed);

std::vector<PropertyResult> all_properties(std::size_t cases, std::uint64_t seed);

}  // namespace z2c::testing
