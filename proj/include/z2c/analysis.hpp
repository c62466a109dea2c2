#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "z2c/catalog.hpp"
#include "z2c/lie_algebra.hpp"
#include "z2c/poly.hpp"

namespace z2c {

struct Check {
  std::string name;
  nlohmann::json expected;  // exact integers, booleans or rational strings
  nlohmann::json computed;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::string pair;    // pair name, or a description of the sweep
  std::string satake;  // DSL of the diagram when a single pair is checked
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, double>> timings;  // seconds; not serialized

  void add(std::string name, nlohmann::json expected, nlohmann::json computed, std::string note = {});
  bool passed() const;
};

/// Deterministic serializations (timings are left out).
nlohmann::ordered_json to_json(const VerificationReport& r);
std::string to_markdown(const VerificationReport& r);

struct IndexResult {
  std::size_t index = 0;
  bool symbolic = false;      // exact elimination; otherwise certified at `point`
  std::size_t lower = 0;      // Jacobian rank of central elements at `point`
  std::size_t upper = 0;      // corank of the Kirillov matrix at `point`
  RatVector point;
};

/// Exact index: symbolic elimination with intermediate entries bounded by
/// `entry_cap_limit` (0: unbounded); beyond that, a certificate at a rational
/// point where the differentials of the given central elements span a space
/// as large as the stabilizer. Throws BudgetError when neither succeeds.
IndexResult certified_index(const LieAlgebra& q, const std::vector<Poly>& central, std::uint64_t seed,
                            std::size_t entry_cap_limit);

struct SuiteOptions {
  std::uint64_t seed = 1;
  bool exact = false;                  // unbounded symbolic elimination
  std::size_t entry_cap_limit = 10000;  // used unless exact
  TermBudget budget;
};

/// ind k = rk g, b(k) = b(g), classical invariants of g and central elements
/// of the contraction.
VerificationReport verify_summary(const PairId& pair, const SuiteOptions& options = {});

/// has_codim3 = !has_bad_rank1_subpair on every diagram over connected Dynkin
/// graphs with at most max_nodes nodes (and on diagonal diagrams), plus the
/// codim-3 table rows of that size. PreconditionError for max_nodes > 8.
VerificationReport verify_main_theorem_combinatorics(int max_nodes);

/// dim k_eta = dim g1 - dim g0 + dim g_{0,beta} + dim (g_{0,beta})_alpha at
/// eta = (0, beta0) and `samples` random points.
VerificationReport verify_dim_stab(const PairId& pair, std::size_t samples, std::uint64_t seed);

/// Shift family of central elements of the contraction of a maximal-rank pair
/// and an odd coordinate commuting with it but outside it.
/// PreconditionError unless the diagram is all white without arrows.
VerificationReport demonstrate_nonmaximality(const PairId& pair, std::uint64_t seed,
                                             const std::optional<RatVector>& xi = std::nullopt);

/// The N-regular subalgebra with its rank certificate and the index formula
/// for the centralizer of a Cartan subspace. PreconditionError unless N-regular.
VerificationReport verify_nreg(const PairId& pair, const SuiteOptions& options = {});

/// Non-exceptional catalog pairs with 1 <= rk g <= max_rank, deduplicated by name.
std::vector<PairId> structure_pairs(int max_rank);

}  // namespace z2c
