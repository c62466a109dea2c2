#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "z2c/catalog.hpp"
#include "z2c/diagram.hpp"
#include "z2c/lie_algebra.hpp"
#include "z2c/linalg.hpp"
#include "z2c/poly.hpp"
#include "z2c/symbolic.hpp"

namespace z2c {

enum class MatrixKind { Sl, So, Sp };

/// Diagonal block of a block-diagonal matrix realization.
struct MatrixBlock {
  MatrixKind kind = MatrixKind::Sl;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/// Faithful representation of g by block-diagonal matrices, one per basis vector.
class MatrixRealization {
public:
  MatrixRealization() = default;
  MatrixRealization(std::size_t size, std::vector<MatrixBlock> blocks, std::vector<RatMatrix> basis);

  std::size_t size() const noexcept { return size_; }
  const std::vector<MatrixBlock>& blocks() const noexcept { return blocks_; }
  const std::vector<RatMatrix>& basis() const noexcept { return basis_; }

  RatMatrix element(const RatVector& coords) const;
  /// Coordinates of a matrix in the span of the basis; throws CheckError otherwise.
  RatVector coordinates(const RatMatrix& m) const;
  /// Gram matrix of the trace form tr(XY).
  RatMatrix trace_form() const;

private:
  std::size_t size_ = 0;
  std::vector<MatrixBlock> blocks_;
  std::vector<RatMatrix> basis_;
  std::vector<std::size_t> pivots_;  // flattened entry positions
  RatMatrix solve_;                  // coords = solve_ * entries at pivots
};

/// A classical symmetric pair with its grading, Cartan subspace and diagram.
/// The basis is adapted: g0 first (indices 0..dim0-1), then g1.
struct PairRealization {
  PairId id;
  LieAlgebra g;
  Involution sigma;
  Z2Grading grading;
  std::vector<RatVector> cartan;
  SatakeDiagram satake;
  MatrixRealization rep;

  std::size_t dim0() const { return grading.even.size(); }
  std::size_t dim1() const { return grading.odd.size(); }
  /// Rank of g (number of Dynkin nodes).
  int rank_g() const { return satake.size(); }
};

/// Supported: (sl_n, so_n), (sl_n, s(gl_k+gl_n-k)), (sl_2n, sp_2n), (so_p+q, so_p+so_q),
/// (sp_2n, sp_2k+sp_2n-2k), (sp_2n, gl_n), (so_2n, gl_n) and (h+h, diag h) for
/// classical h. Throws UnsupportedError for exceptional algebras.
PairRealization build_pair(const PairId& id);

/// g0 + g1 with [g1, g1] set to zero; re-checks the Jacobi identity.
LieAlgebra contract(const LieAlgebra& g, const Z2Grading& grading);

/// M[i][j] = sum_k c_ij^k xi_k.
RatMatrix kirillov_matrix(const LieAlgebra& q, const RatVector& xi);
/// Kirillov matrix with entries linear forms in the dual coordinates.
PolyMatrix kirillov_symbolic(const LieAlgebra& q);

/// dim q minus the generic rank of the Kirillov matrix (exact symbolic rank).
/// A nonzero `entry_cap_limit` bounds the size of intermediate entries and
/// turns an oversized elimination into BudgetError.
std::size_t index(const LieAlgebra& q, const TermBudget& budget = {}, std::size_t entry_cap_limit = 0);
/// (dim q + ind q) / 2; throws CheckError if not an integer.
Rational b_value(const LieAlgebra& q, std::size_t ind);
Rational b_value(const LieAlgebra& q);

/// Basis of q_xi = ker K_xi.
std::vector<RatVector> stabilizer(const LieAlgebra& q, const RatVector& xi);
bool is_regular(const LieAlgebra& q, const RatVector& xi, std::size_t ind);

struct GradedCentralizer {
  std::vector<RatVector> even;  // g_{0,v}
  std::vector<RatVector> odd;   // g_{1,v}
};

/// Centralizer of v in g0 and in g1; v must lie in g1 (PreconditionError).
GradedCentralizer graded_centralizer(const PairRealization& pr, const RatVector& v);

/// True when the matrix is diagonalizable over an algebraic closure.
bool is_semisimple_matrix(const RatMatrix& m);

struct StabilizerIndexReport {
  RatVector z;
  std::size_t dim_g1z = 0;
  std::size_t index_g0z = 0;
  int expected_dim_g1z = 0;
  int expected_index_g0z = 0;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  bool ok = false;
};

/// Picks a generic z in the Cartan subspace (genericity certified by comparing
/// centralizer dimensions with their symbolic generic values) and compares
/// dim g_{1,z} with the diagram rank and ind g_{0,z} with rk g - rank.
StabilizerIndexReport check_regular_stabilizer_index(const PairRealization& pr, std::uint64_t seed);

/// Compares the coadjoint action of the contraction, computed from structure
/// constants via <x*xi, y> = -<xi, [x,y]>, with the block formula
/// (x0,x1)*(xi0,xi1) = ([x0,xi0] + [x1,xi1], [x0,xi1]) under the trace-form
/// identification of g with g*. Checks every pair of basis elements.
bool coadjoint_check(const PairRealization& pr);

/// Centralizer of the Cartan subspace in g0.
std::vector<RatVector> cartan_centralizer_g0(const PairRealization& pr);

}  // namespace z2c
