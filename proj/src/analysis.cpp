#include "z2c/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "z2c/diagram.hpp"
#include "z2c/error.hpp"
#include "z2c/invariants.hpp"
#include "z2c/poisson.hpp"
#include "z2c/random.hpp"
#include "z2c/structure.hpp"

namespace z2c {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// (a + b) / 2 as an exact JSON value: an integer when even, "p/2" otherwise.
nlohmann::json half_sum(std::size_t a, std::size_t b) {
  if ((a + b) % 2 == 0) return (a + b) / 2;
  return std::to_string(a + b) + "/2";
}

bool is_exceptional(const PairId& id) {
  if (id.family == Family::Diagonal)
    return id.factor == DynkinType::E || id.factor == DynkinType::F || id.factor == DynkinType::G;
  return static_cast<int>(id.family) > static_cast<int>(Family::Diagonal);
}

std::string json_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

void VerificationReport::add(std::string name, nlohmann::json expected, nlohmann::json computed, std::string note) {
  const bool pass = expected == computed;
  checks.push_back({std::move(name), std::move(expected), std::move(computed), pass, std::move(note)});
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["suite"] = r.suite;
  out["pair"] = r.pair;
  if (!r.satake.empty()) out["satake"] = r.satake;
  out["seed"] = r.seed;
  out["passed"] = r.passed();
  out["checks"] = std::move(checks);
  out["notes"] = r.notes;
  return out;
}

std::string to_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "## " << r.suite << ": " << r.pair << "\n\n";
  if (!r.satake.empty()) os << "Satake diagram: `" << r.satake << "`\n\n";
  os << "Seed: " << r.seed << ". Result: " << (r.passed() ? "PASS" : "FAIL") << ".\n\n";
  os << "| check | expected | computed | pass | note |\n|---|---|---|---|---|\n";
  for (const auto& c : r.checks)
    os << "| " << c.name << " | " << json_text(c.expected) << " | " << json_text(c.computed) << " | "
       << (c.pass ? "yes" : "NO") << " | " << c.note << " |\n";
  if (!r.notes.empty()) {
    os << "\n";
    for (const auto& n : r.notes) os << "- " << n << "\n";
  }
  return os.str();
}

IndexResult certified_index(const LieAlgebra& q, const std::vector<Poly>& central, std::uint64_t seed,
                            std::size_t entry_cap_limit) {
  try {
    IndexResult r;
    r.index = index(q, {}, entry_cap_limit);
    r.symbolic = true;
    return r;
  } catch (const BudgetError&) {
    if (entry_cap_limit == 0) throw;
  }
  // Differentials of central elements lie in every stabilizer, so their rank at
  // any point bounds the index from below, and any stabilizer bounds it above.
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    IndexResult r;
    r.point = random_vector(q.dim(), rng);
    r.upper = stabilizer(q, r.point).size();
    r.lower = jacobian_rank_at(central, r.point);
    if (r.lower == r.upper) {
      r.index = r.upper;
      return r;
    }
  }
  throw BudgetError("index: symbolic elimination exceeded its budget and no certificate was found");
}

VerificationReport verify_summary(const PairId& pair, const SuiteOptions& options) {
  const auto t0 = Clock::now();
  const PairId id = normalized(pair);
  const PairRealization pr = build_pair(id);
  VerificationReport r;
  r.suite = "summary";
  r.pair = pair_name(id);
  r.satake = pr.satake.to_dsl();
  r.seed = options.seed;
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = pr.g.dim();
  const std::size_t rk = static_cast<std::size_t>(pr.rank_g());

  const InvariantSet ginv = classical_invariants(pr.g, pr.rep, options.budget);
  r.add("invariants of g: count = rk g", rk, ginv.polys.size());
  r.add("invariants of g: degree sum = b(g)", half_sum(n, rk), ginv.degree_sum(), "b(g) = (dim g + rk g)/2");
  r.add("invariants of g: central", true,
        std::all_of(ginv.verified_central.begin(), ginv.verified_central.end(), [](bool b) { return b; }));
  r.timings.emplace_back("invariants of g", seconds_since(t0));

  const auto t1 = Clock::now();
  const auto pool = contraction_invariant_pool(k, pr.grading, ginv, options.budget);
  const InvariantSet kinv = contraction_invariants(k, pool, rk, options.seed);
  r.timings.emplace_back("invariants of k", seconds_since(t1));

  const auto t2 = Clock::now();
  const IndexResult ir = certified_index(k, kinv.polys, options.seed, options.exact ? 0 : options.entry_cap_limit);
  r.timings.emplace_back("index of k", seconds_since(t2));
  r.add("ind k = rk g", rk, ir.index,
        ir.symbolic ? "symbolic elimination"
                    : "certified at a sample point: " + std::to_string(ir.lower) +
                          " independent differentials of central elements, stabilizer of dimension " +
                          std::to_string(ir.upper));
  const nlohmann::json bk = half_sum(n, ir.index);
  r.add("b(k) = b(g)", half_sum(n, rk), bk);
  if (kinv.polys.size() == rk) {
    r.add("central elements of k: degree sum = b(k)", bk, kinv.degree_sum(),
          "rk g independent top components found");
  } else {
    r.notes.push_back("found " + std::to_string(kinv.polys.size()) + " of " + std::to_string(rk) +
                      " independent central elements of k; degree sum not asserted");
  }
  for (const auto& p : kinv.polys) r.notes.push_back("central in k: " + p.to_string(k.labels()));
  return r;
}

VerificationReport verify_main_theorem_combinatorics(int max_nodes) {
  if (max_nodes < 1 || max_nodes > 8)
    throw PreconditionError("max_nodes must be between 1 and 8, got " + std::to_string(max_nodes));
  VerificationReport r;
  r.suite = "main";
  r.pair = "all diagrams with at most " + std::to_string(max_nodes) + " nodes";
  std::set<std::string> seen;
  std::size_t total = 0, codim3 = 0;
  auto sweep = [&](const std::string& label, const std::vector<SatakeDiagram>& diagrams) {
    std::size_t agree = 0;
    for (const auto& d : diagrams) {
      const bool c3 = has_codim3(d);
      if (c3 == !has_bad_rank1_subpair(d)) ++agree;
      if (c3) ++codim3;
      seen.insert(d.to_dsl());
    }
    total += diagrams.size();
    r.add("codim3 = no bad rank-one subpair on " + label, diagrams.size(), agree);
  };
  for (const auto& c : connected_types(max_nodes)) sweep(c.name(), enumerate_diagrams(c));
  sweep("diagonal diagrams", enumerate_diagonal_diagrams(max_nodes));
  for (const auto& e : codim3_table(max_nodes)) {
    const SatakeDiagram d = satake_of(e.pair);
    if (d.size() > max_nodes) continue;
    r.add("codim-3 table row " + std::to_string(e.row) + " " + pair_name(e.pair) + ": swept with codim3", true,
          seen.count(d.to_dsl()) == 1 && has_codim3(d));
  }
  r.notes.push_back(std::to_string(total) + " diagrams checked, " + std::to_string(codim3) + " with codim3");
  return r;
}

VerificationReport verify_dim_stab(const PairId& pair, std::size_t samples, std::uint64_t seed) {
  const PairId id = normalized(pair);
  const PairRealization pr = build_pair(id);
  VerificationReport r;
  r.suite = "dimstab";
  r.pair = pair_name(id);
  r.satake = pr.satake.to_dsl();
  r.seed = seed;
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = k.dim(), n0 = pr.dim0(), n1 = pr.dim1();
  const auto& even = pr.grading.even;
  const auto& odd = pr.grading.odd;
  Rng rng(seed);
  for (std::size_t s = 0; s <= samples; ++s) {
    RatVector eta = random_vector(n, rng);
    if (s == 0)
      for (auto i : odd) eta[i] = 0;
    const std::size_t lhs = stabilizer(k, eta).size();
    // g_{0,beta}: x0 with beta([x0, g1]) = 0.
    RatMatrix bt(n1, n0);
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j)
        for (const auto& [t, c] : k.basis_bracket(even[i], odd[j])) bt(j, i) += c * eta[t];
    std::vector<RatVector> basis;
    RatVector alpha;
    for (const auto& u : bt.kernel()) {
      RatVector v(n);
      Rational a = 0;
      for (std::size_t i = 0; i < n0; ++i) {
        v[even[i]] = u[i];
        a += u[i] * eta[even[i]];
      }
      basis.push_back(std::move(v));
      alpha.push_back(a);
    }
    std::size_t kernel = 0;
    if (!basis.empty()) kernel = stabilizer(subalgebra(k, basis), alpha).size();
    const long rhs = static_cast<long>(n1) - static_cast<long>(n0) + static_cast<long>(basis.size()) +
                     static_cast<long>(kernel);
    r.add(s == 0 ? "beta = 0: dim k_eta = formula" : "sample " + std::to_string(s) + ": dim k_eta = formula", rhs,
          static_cast<long>(lhs), "dim g0,beta = " + std::to_string(basis.size()));
  }
  return r;
}

VerificationReport demonstrate_nonmaximality(const PairId& pair, std::uint64_t seed,
                                             const std::optional<RatVector>& xi) {
  const PairId id = normalized(pair);
  const PairRealization pr = build_pair(id);
  if (pr.satake.black_count() != 0 || !pr.satake.arrows().empty())
    throw PreconditionError("pair " + pair_name(id) + " is not of maximal rank");
  VerificationReport r;
  r.suite = "nonmax";
  r.pair = pair_name(id);
  r.satake = pr.satake.to_dsl();
  r.seed = seed;
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = k.dim();
  const std::size_t rk = static_cast<std::size_t>(pr.rank_g());
  const auto pool = contraction_invariant_pool(k, pr.grading, classical_invariants(pr.g, pr.rep));
  const InvariantSet gens = contraction_invariants(k, pool, rk, seed);
  r.add("independent central elements of k", rk, gens.polys.size());

  RatVector direction;
  bool regular = false;
  if (xi) {
    if (xi->size() != n) throw ValidationError("direction has " + std::to_string(xi->size()) + " coordinates, expected " + std::to_string(n));
    direction = *xi;
    regular = is_regular(k, direction, rk);
  } else {
    Rng rng(seed);
    for (int attempt = 0; attempt < 16 && !regular; ++attempt) {
      direction = RatVector(n);
      for (auto i : pr.grading.odd) direction[i] = random_coordinate(rng);
      regular = is_regular(k, direction, rk);
    }
  }
  std::ostringstream dir;
  for (std::size_t i = 0; i < n; ++i) dir << (i ? "," : "") << to_string(direction[i]);
  r.add("direction is regular", true, regular, "xi = (" + dir.str() + ")");

  const ShiftFamily family = mf_family(k, gens.polys, direction);
  const auto polys = family.polys();
  r.add("shift family commutes", true, pairwise_commuting(k, polys).commuting);
  r.add("Jacobian rank of the family = b(k)", half_sum(n, rk), trdeg_lower_bound(polys, 4, seed));
  for (const auto& p : polys) r.notes.push_back("family: " + p.to_string(k.labels()));

  std::vector<RatVector> linear;
  for (const auto& p : polys)
    if (p.degree() == 1) linear.push_back(p.linear_coefficients());
  const std::size_t base = rank_of(linear);
  std::optional<std::size_t> adjoined;
  for (auto i : pr.grading.odd) {
    RatVector e(n);
    e[i] = 1;
    auto span = linear;
    span.push_back(e);
    if (rank_of(span) == base) continue;
    const Poly x = Poly::variable(n, i);
    if (std::all_of(polys.begin(), polys.end(), [&](const Poly& p) { return poisson_bracket(k, x, p).is_zero(); })) {
      adjoined = i;
      break;
    }
  }
  r.add("odd coordinate commuting with the family outside its degree-1 part", true, adjoined.has_value(),
        adjoined ? "adjoined " + k.labels()[*adjoined] : std::string("none found"));
  return r;
}

VerificationReport verify_nreg(const PairId& pair, const SuiteOptions& options) {
  const PairId id = normalized(pair);
  const PairRealization pr = build_pair(id);
  if (!is_n_regular(pr.satake))
    throw PreconditionError("pair " + pair_name(id) + " is not N-regular: its Satake diagram has black nodes");
  VerificationReport r;
  r.suite = "nreg";
  r.pair = pair_name(id);
  r.satake = pr.satake.to_dsl();
  r.seed = options.seed;
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = k.dim(), n0 = pr.dim0(), n1 = pr.dim1();
  const std::size_t rk = static_cast<std::size_t>(pr.rank_g());
  const std::size_t m = rk - static_cast<std::size_t>(rank(pr.satake));

  const InvariantSet ginv = classical_invariants(pr.g, pr.rep, options.budget);
  const auto pool = contraction_invariant_pool(k, pr.grading, ginv, options.budget);
  const InvariantSet kinv = contraction_invariants(k, pool, rk, options.seed);
  const IndexResult ir = certified_index(k, kinv.polys, options.seed, options.exact ? 0 : options.entry_cap_limit);
  const nlohmann::json bk = half_sum(n, ir.index);

  try {
    const InvariantSet nr = nreg_subalgebra(pr, options.seed, options.budget);
    r.add("generator count = dim g1 + m", n1 + m, nr.polys.size(), "m = " + std::to_string(m));
    r.add("generator count = b(k)", bk, nr.polys.size());
    r.add("certified Jacobian rank = b(k)", bk, nr.certified_rank);
    r.add("generators commute", true, pairwise_commuting(k, nr.polys, options.budget).commuting);
    for (std::size_t i = n1; i < nr.polys.size(); ++i) r.notes.push_back("generator: " + nr.polys[i].to_string(k.labels()));
  } catch (const CheckError& e) {
    r.add("N-regular subalgebra constructed", true, false, e.what());
  }

  const auto cent = cartan_centralizer_g0(pr);
  const LieAlgebra rsub = cent.empty() ? LieAlgebra() : subalgebra(pr.g, cent);
  const std::size_t ind_r = cent.empty() ? 0 : index(rsub);
  r.add("ind k = dim g1 - dim g0 + dim r + ind r", static_cast<long>(ir.index),
        static_cast<long>(n1) - static_cast<long>(n0) + static_cast<long>(cent.size()) + static_cast<long>(ind_r),
        std::string("r = centralizer of ce in g0, ") + (rsub.is_abelian() ? "toral" : "not abelian"));
  r.add("dim g1 + dim r = b(k)", bk, n1 + cent.size());
  return r;
}

std::vector<PairId> structure_pairs(int max_rank) {
  std::vector<PairId> out;
  std::set<std::string> names;
  for (int nodes = 1; nodes <= max_rank; ++nodes)
    for (const auto& id : instances_with_nodes(nodes))
      if (!is_exceptional(id) && names.insert(pair_name(id)).second) out.push_back(id);
  return out;
}

}  // namespace z2c
