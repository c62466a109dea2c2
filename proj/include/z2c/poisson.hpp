#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "z2c/lie_algebra.hpp"
#include "z2c/poly.hpp"

namespace z2c {

/// Point of q* in the dual basis.
using Covector = RatVector;

/// Lie-Poisson bracket on S(q): the Leibniz extension of {x_i, x_j} = [x_i, x_j].
/// Throws ValidationError on a variable-count mismatch and BudgetError when a
/// product exceeds `budget`.
Poly poisson_bracket(const LieAlgebra& q, const Poly& f, const Poly& g, const TermBudget& budget = {});

/// (df)_xi as a vector of q.
RatVector differential_at(const Poly& f, const Covector& xi);

/// Coefficients f_xi^j, j = 0..d-1, of f(mu + a*xi) = sum_j f_xi^j(mu) a^j.
/// A constant f yields {f}. Throws PreconditionError for f = 0.
std::vector<Poly> shift(const Poly& f, const Covector& xi);

struct ShiftComponent {
  std::size_t generator = 0;
  unsigned j = 0;
  Poly poly;
};

struct ShiftFamily {
  Covector direction;
  std::vector<Poly> generators;
  std::vector<ShiftComponent> components;

  /// Nonzero components, in generator order then by j.
  std::vector<Poly> polys() const;
};

/// Throws CheckError naming the first coordinate bracket that does not vanish.
void require_central(const LieAlgebra& q, const Poly& f, std::size_t generator);

/// All shifts of Poisson-central generators in direction xi.
ShiftFamily mf_family(const LieAlgebra& q, const std::vector<Poly>& gens, const Covector& xi);

struct BracketWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Poly bracket;
};

struct CommutingResult {
  bool commuting = true;
  std::optional<BracketWitness> witness;
};

CommutingResult pairwise_commuting(const LieAlgebra& q, const std::vector<Poly>& polys, const TermBudget& budget = {});

/// Rank of the matrix of differentials at mu.
std::size_t jacobian_rank_at(const std::vector<Poly>& polys, const Covector& mu);

/// Maximum Jacobian rank over `trials` random points; a lower bound for the
/// transcendence degree of the generated algebra.
std::size_t trdeg_lower_bound(const std::vector<Poly>& polys, std::size_t trials, std::uint64_t seed);

/// Regularity of xi read off from the differentials of free generators of the
/// centre. Asserts the preconditions (count = ind, centrality, independence,
/// degree sum = b(q)) with PreconditionError and throws CheckError if the answer
/// disagrees with the Kirillov-rank test.
bool regularity_via_differentials(const LieAlgebra& q, const std::vector<Poly>& free_gens, const Covector& xi,
                                  std::size_t ind, std::uint64_t seed = 1);

/// {"nvars":n,"terms":[[[a1,...,an],"p/q"],...]} in grlex order.
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace z2c
