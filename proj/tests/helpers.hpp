#pragma once

#include <vector>

#include "z2c/lie_algebra.hpp"
#include "z2c/poly.hpp"
#include "z2c/rational.hpp"

namespace z2c::testing {

// sl2 with basis e, h, f.
inline LieAlgebra sl2_ehf() {
  LieAlgebra g({"e", "h", "f"});
  g.set_bracket(0, 1, {-2, 0, 0});
  g.set_bracket(0, 2, {0, 1, 0});
  g.set_bracket(1, 2, {0, 0, -2});
  return g;
}

inline RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace z2c::testing
