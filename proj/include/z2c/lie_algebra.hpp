#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z2c/linalg.hpp"
#include "z2c/rational.hpp"

namespace z2c {

/// Sparse vector entry (basis index, coefficient).
using SparseEntry = std::pair<std::size_t, Rational>;
using SparseVector = std::vector<SparseEntry>;

/// Finite-dimensional Lie algebra given by structure constants
/// [x_i, x_j] = sum_k c_ij^k x_k (0-based indices internally).
class LieAlgebra {
public:
  LieAlgebra() = default;
  /// Abelian algebra with the given basis labels.
  explicit LieAlgebra(std::vector<std::string> labels);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Sets [x_i, x_j] (and implicitly [x_j, x_i]); i != j.
  void set_bracket(std::size_t i, std::size_t j, const RatVector& value);
  /// [x_i, x_j] as a sparse vector (sorted by index).
  SparseVector basis_bracket(std::size_t i, std::size_t j) const;
  /// Stored entries for i < j.
  const SparseVector& stored(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  RatVector bracket(const RatVector& x, const RatVector& y) const;
  /// Matrix of ad(x) acting on coordinate columns.
  RatMatrix ad(const RatVector& x) const;
  bool is_abelian() const;

  /// Throws CheckError naming the first failing triple. Exhaustive for dim <= 30,
  /// otherwise `samples` random triples of basis elements drawn with `seed`.
  void check_jacobi(std::uint64_t seed = 1, std::size_t samples = 20000) const;

  nlohmann::json to_json() const;
  /// Parses {"dim":n,"labels":[...],"sc":[[i,j,[[k,"p/q"],...]],...]} (1-based, i<j)
  /// and checks the Jacobi identity. Throws ValidationError or ParseError.
  static LieAlgebra from_json(const nlohmann::json& j);

private:
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;  // dim*dim, only i<j used
};

/// Partition of a basis into even and odd indices.
struct Z2Grading {
  std::vector<std::size_t> even;
  std::vector<std::size_t> odd;

  std::vector<int> parity(std::size_t dim) const;
  /// Throws CheckError when [g_i, g_j] is not contained in g_{i+j}.
  void check(const LieAlgebra& g) const;
};

/// Linear map on the basis of g (columns are images of basis vectors).
struct Involution {
  RatMatrix matrix;

  /// Throws CheckError unless sigma^2 = 1 and sigma is an automorphism.
  void check(const LieAlgebra& g) const;
};

/// Subalgebra spanned by `basis` (coordinates in g), with structure constants in
/// that basis. Throws CheckError if the span is not closed.
LieAlgebra subalgebra(const LieAlgebra& g, const std::vector<RatVector>& basis,
                      std::vector<std::string> labels = {});

}  // namespace z2c
