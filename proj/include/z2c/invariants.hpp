#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "z2c/lie_algebra.hpp"
#include "z2c/poly.hpp"
#include "z2c/structure.hpp"

namespace z2c {

/// Polynomials in S(q) with per-polynomial centrality flags.
struct InvariantSet {
  std::vector<Poly> polys;
  std::vector<bool> verified_central;
  std::vector<int> degrees;
  std::size_t certified_rank = 0;  // Jacobian rank at sample_point
  RatVector sample_point;
  std::uint64_t seed = 0;

  void add(Poly p, bool central);
  int degree_sum() const;
};

nlohmann::json to_json(const InvariantSet& s, const std::vector<std::string>& labels);

/// True iff {x_i, f} = 0 for every coordinate x_i.
bool verify_central(const LieAlgebra& q, const Poly& f);

/// True iff {e, f} = 0 for every odd coordinate e.
bool g1_invariants_check(const LieAlgebra& k, const Z2Grading& grading, const Poly& f);

/// Terms of f of maximal degree in the odd variables. Throws PreconditionError for f = 0.
Poly top_component(const Poly& f, const Z2Grading& grading);

/// Coefficients e_k of det(t - X) = sum_k (-1)^k e_k t^(N-k) for the generic
/// matrix X of each block (X paired with g* by the trace form), plus the
/// Pfaffian of even orthogonal blocks in place of their determinant. The
/// Pfaffian is normalized by pf(diag([[0,1],[-1,0]], ...)) = 1.
/// Throws PreconditionError without a matrix realization.
InvariantSet classical_invariants(const LieAlgebra& g, const MatrixRealization& rep, const TermBudget& budget = {});

/// Top components of a basis of the invariants of g of each generator degree,
/// chosen so that their top components are linearly independent; only those
/// central in k are kept.
std::vector<Poly> contraction_invariant_pool(const LieAlgebra& k, const Z2Grading& grading, const InvariantSet& ginv,
                                             const TermBudget& budget = {});

/// Up to `count` central elements of k picked from the pool by increasing
/// degree, each raising the Jacobian rank at a random point.
InvariantSet contraction_invariants(const LieAlgebra& k, const std::vector<Poly>& pool, std::size_t count,
                                    std::uint64_t seed);

/// Odd coordinates together with rk g - rank central elements of the
/// contraction, selected to reach Jacobian rank dim g1 + m = b(k).
/// PreconditionError unless the pair is N-regular; CheckError when the pool
/// cannot reach that rank.
InvariantSet nreg_subalgebra(const PairRealization& pr, std::uint64_t seed, const TermBudget& budget = {});

struct NoncommutativityWitness {
  Poly f;
  Poly g;
  Poly bracket;
};

struct WitnessSearch {
  std::optional<NoncommutativityWitness> witness;
  std::vector<std::size_t> invariant_dims;  // dim of degree-d g1-invariants, d = 1..bound
};

struct WitnessLimits {
  unsigned degree_bound = 4;
  std::size_t max_dim = 40;
  std::size_t max_monomials = 20000;
};

/// Searches the g1-invariants of S(k) of degree <= bound for a pair with
/// nonzero bracket. Throws BudgetError when a limit is exceeded.
WitnessSearch noncommutativity_witness(const PairRealization& pr, const WitnessLimits& limits);

}  // namespace z2c
