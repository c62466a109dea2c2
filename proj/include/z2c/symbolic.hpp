#pragma once

#include <cstddef>
#include <vector>

#include "z2c/poly.hpp"

namespace z2c {

using PolyMatrix = std::vector<std::vector<Poly>>;

enum class PivotRule {
  FewestTerms,   // fewest terms, then lowest degree, then least fill
  LowestDegree,  // lowest degree, then fewest terms, then least fill
  LeastFill,     // least fill, then fewest terms
};

struct RankOptions {
  /// Abort when a single entry grows beyond this many terms; 0 means unlimited.
  std::size_t max_entry_terms = 0;
  TermBudget budget;
  PivotRule rule = PivotRule::FewestTerms;
};

/// Rank over the fraction field of a matrix with polynomial entries, by
/// fraction-free elimination with sparse pivoting. Rows are kept primitive by
/// dividing out their monomial and rational content after every update.
/// Throws BudgetError when a limit in `options` is exceeded.
std::size_t symbolic_rank(PolyMatrix m, const RankOptions& options = {});

/// Runs every pivot rule under a per-entry term cap starting at `first_cap`
/// and growing tenfold up to `last_cap`, then throws BudgetError. With
/// last_cap = 0 the cap grows to 100 * first_cap and a final uncapped attempt
/// follows.
std::size_t symbolic_rank_portfolio(const PolyMatrix& m, std::size_t first_cap, std::size_t last_cap = 0,
                                    const TermBudget& budget = {});

}  // namespace z2c
