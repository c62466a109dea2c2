#include "z2c/poisson.hpp"

#include <algorithm>
#include <optional>

#include "z2c/error.hpp"
#include "z2c/random.hpp"
#include "z2c/structure.hpp"

namespace z2c {

namespace {

// Index of the variable when p is c * x_m.
std::optional<std::size_t> single_variable(const Poly& p) {
  if (p.size() != 1 || p.degree() != 1) return std::nullopt;
  const auto& e = p.terms().front().monomial.exponents();
  return static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
}

// {x_m, f} = sum_j [x_m, x_j] d_j f as a balanced sum of derivations.
Poly coordinate_bracket(const LieAlgebra& q, std::size_t m, const Poly& f) {
  const std::size_t n = q.dim();
  std::vector<Poly> parts;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == m) continue;
    for (const auto& [k, c] : q.basis_bracket(m, j)) {
      Poly p = f.derivation(j, k);
      if (!p.is_zero()) parts.push_back(p * c);
    }
  }
  if (parts.empty()) return Poly(n);
  while (parts.size() > 1) {
    std::vector<Poly> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

}  // namespace

Poly poisson_bracket(const LieAlgebra& q, const Poly& f, const Poly& g, const TermBudget& budget) {
  const std::size_t n = q.dim();
  if (f.nvars() != n || g.nvars() != n)
    throw ValidationError("polynomial has " + std::to_string(f.nvars() == n ? g.nvars() : f.nvars()) +
                          " variables but the algebra has dimension " + std::to_string(n));
  Poly out(n);
  if (f.is_constant() || g.is_constant()) return out;
  if (const auto m = single_variable(f)) return coordinate_bracket(q, *m, g) * f.terms().front().coeff;
  if (const auto m = single_variable(g)) return coordinate_bracket(q, *m, f) * Rational(-g.terms().front().coeff);
  std::vector<Poly> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const SparseVector& c = q.stored(i, j);
      if (c.empty()) continue;
      const bool a = !df[i].is_zero() && !dg[j].is_zero();
      const bool b = !df[j].is_zero() && !dg[i].is_zero();
      if (!a && !b) continue;
      Poly coeff(n);
      if (a) {
        budget.check(df[i], dg[j]);
        coeff += df[i] * dg[j];
      }
      if (b) {
        budget.check(df[j], dg[i]);
        coeff -= df[j] * dg[i];
      }
      if (coeff.is_zero()) continue;
      RatVector lin(n);
      for (const auto& [k, v] : c) lin[k] = v;
      const Poly l = Poly::linear(lin);
      budget.check(coeff, l);
      out += coeff * l;
    }
  return out;
}

RatVector differential_at(const Poly& f, const Covector& xi) { return f.gradient_at(xi); }

std::vector<Poly> shift(const Poly& f, const Covector& xi) {
  if (f.is_zero()) throw PreconditionError("shift of the zero polynomial");
  if (xi.size() != f.nvars()) throw ValidationError("direction has the wrong length");
  const int d = f.degree();
  std::vector<Poly> out{f};
  Poly current = f;
  for (int j = 1; j < d; ++j) {
    current = current.directional_derivative(xi) * Rational(1, j);
    out.push_back(current);
  }
  return out;
}

std::vector<Poly> ShiftFamily::polys() const {
  std::vector<Poly> out;
  for (const auto& c : components)
    if (!c.poly.is_zero()) out.push_back(c.poly);
  return out;
}

void require_central(const LieAlgebra& q, const Poly& f, std::size_t generator) {
  for (std::size_t i = 0; i < q.dim(); ++i) {
    const Poly b = poisson_bracket(q, Poly::variable(q.dim(), i), f);
    if (!b.is_zero())
      throw CheckError("generator " + std::to_string(generator + 1) + " is not central: {" + q.labels()[i] +
                       ", f} = " + b.to_string(q.labels()));
  }
}

ShiftFamily mf_family(const LieAlgebra& q, const std::vector<Poly>& gens, const Covector& xi) {
  ShiftFamily family;
  family.direction = xi;
  family.generators = gens;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    require_central(q, gens[g], g);
    const auto parts = shift(gens[g], xi);
    for (std::size_t j = 0; j < parts.size(); ++j)
      family.components.push_back({g, static_cast<unsigned>(j), parts[j]});
  }
  return family;
}

CommutingResult pairwise_commuting(const LieAlgebra& q, const std::vector<Poly>& polys, const TermBudget& budget) {
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      Poly b = poisson_bracket(q, polys[i], polys[j], budget);
      if (!b.is_zero()) return {false, BracketWitness{i, j, std::move(b)}};
    }
  return {};
}

std::size_t jacobian_rank_at(const std::vector<Poly>& polys, const Covector& mu) {
  std::vector<RatVector> rows;
  rows.reserve(polys.size());
  for (const auto& p : polys) rows.push_back(p.gradient_at(mu));
  return rank_of(rows);
}

std::size_t trdeg_lower_bound(const std::vector<Poly>& polys, std::size_t trials, std::uint64_t seed) {
  if (polys.empty()) return 0;
  Rng rng(seed);
  std::size_t best = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    best = std::max(best, jacobian_rank_at(polys, random_vector(polys.front().nvars(), rng)));
    if (best == polys.size()) break;
  }
  return best;
}

bool regularity_via_differentials(const LieAlgebra& q, const std::vector<Poly>& free_gens, const Covector& xi,
                                  std::size_t ind, std::uint64_t seed) {
  if (free_gens.size() != ind)
    throw PreconditionError("expected " + std::to_string(ind) + " generators, got " +
                            std::to_string(free_gens.size()));
  std::size_t degrees = 0;
  for (std::size_t g = 0; g < free_gens.size(); ++g) {
    try {
      require_central(q, free_gens[g], g);
    } catch (const CheckError& e) {
      throw PreconditionError(e.what());
    }
    degrees += static_cast<std::size_t>(std::max(0, free_gens[g].degree()));
  }
  const Rational b = b_value(q, ind);
  if (Rational(static_cast<long>(degrees)) != b)
    throw PreconditionError("degree sum " + std::to_string(degrees) + " differs from b(q) = " + to_string(b));
  if (trdeg_lower_bound(free_gens, 8, seed) != ind)
    throw PreconditionError("generators are not algebraically independent at the sampled points");
  const bool via_differentials = jacobian_rank_at(free_gens, xi) == ind;
  const bool via_kirillov = is_regular(q, xi, ind);
  if (via_differentials != via_kirillov)
    throw CheckError("differential criterion and Kirillov rank disagree on regularity");
  return via_differentials;
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) terms.push_back({t.monomial.exponents(), to_string(t.coeff)});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j) {
  try {
    const std::size_t n = j.at("nvars").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto e = t.at(0).get<std::vector<std::uint16_t>>();
      if (e.size() != n) throw ValidationError("exponent vector has the wrong length");
      Rational c = parse_rational(t.at(1).get<std::string>());
      if (sgn(c) == 0) throw ValidationError("stored zero coefficient");
      terms.push_back({Monomial(std::move(e)), c});
    }
    return Poly::from_terms(n, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace z2c
