#include "z2c/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "z2c/error.hpp"
#include "z2c/poisson.hpp"
#include "z2c/random.hpp"

namespace z2c {

namespace {

std::vector<bool> odd_mask(const Z2Grading& grading, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (auto i : grading.odd) mask.at(i) = true;
  return mask;
}

Poly multiply(const Poly& a, const Poly& b, const TermBudget& budget) {
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
  budget.check(a, b);
  return a * b;
}

// Pairwise summation keeps merges balanced.
Poly sum_all(std::vector<Poly> parts, std::size_t nvars) {
  if (parts.empty()) return Poly(nvars);
  while (parts.size() > 1) {
    std::vector<Poly> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

Poly dot(const PolyMatrix& a, std::size_t i, const PolyMatrix& b, std::size_t j, const TermBudget& budget) {
  std::vector<Poly> parts;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[i][k].is_zero() && !b[k][j].is_zero()) parts.push_back(multiply(a[i][k], b[k][j], budget));
  return sum_all(std::move(parts), a.front().front().nvars());
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, const TermBudget& budget) {
  const std::size_t n = a.size();
  PolyMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i].push_back(dot(a, i, b, j, budget));
  return out;
}

// e_1..e_N of the matrix by the Faddeev-LeVerrier recursion.
std::vector<Poly> elementary_coefficients(const PolyMatrix& x, std::size_t upto, const TermBudget& budget) {
  const std::size_t n = x.size();
  const std::size_t nvars = x.front().front().nvars();
  std::vector<Poly> e{Poly::constant(nvars, 1)};
  PolyMatrix m(n, std::vector<Poly>(n, Poly(nvars)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(nvars, 1);
  for (std::size_t k = 1; k <= upto; ++k) {
    // The last step needs only the diagonal of X M_k.
    PolyMatrix xm;
    std::vector<Poly> diag;
    if (k == upto) {
      for (std::size_t i = 0; i < n; ++i) diag.push_back(dot(x, i, m, i, budget));
    } else {
      xm = multiply(x, m, budget);
      for (std::size_t i = 0; i < n; ++i) diag.push_back(xm[i][i]);
    }
    // c_{N-k} = -tr(X M_k) / k and e_k = (-1)^k c_{N-k}.
    const Poly c = sum_all(std::move(diag), nvars) * Rational(-1, static_cast<long>(k));
    e.push_back(k % 2 == 0 ? c : -c);
    if (k == upto) break;
    for (std::size_t i = 0; i < n; ++i) xm[i][i] += c;
    m = std::move(xm);
  }
  return e;
}

Poly pfaffian(const PolyMatrix& x, const TermBudget& budget) {
  std::map<std::uint64_t, Poly> memo;
  const std::size_t nvars = x.front().front().nvars();
  auto rec = [&](auto&& self, std::uint64_t rows) -> Poly {
    if (rows == 0) return Poly::constant(nvars, 1);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < x.size(); ++i)
      if ((rows >> i) & 1u) idx.push_back(i);
    Poly out(nvars);
    const std::size_t first = idx.front();
    for (std::size_t t = 1; t < idx.size(); ++t) {
      const Poly& a = x[first][idx[t]];
      if (a.is_zero()) continue;
      const std::uint64_t rest = rows & ~(std::uint64_t{1} << first) & ~(std::uint64_t{1} << idx[t]);
      Poly term = multiply(a, self(self, rest), budget);
      if (t % 2 == 1)
        out += term;
      else
        out -= term;
    }
    memo.emplace(rows, out);
    return out;
  };
  return rec(rec, (std::uint64_t{1} << x.size()) - 1);
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RatVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n), x;
    e[j] = 1;
    if (!m.solve(e, x)) throw CheckError("trace form is degenerate");
    cols.push_back(std::move(x));
  }
  return RatMatrix::from_columns(cols, n);
}

// Rewrites the polynomials as a basis of their span whose top components are
// linearly independent, level by level.
std::vector<Poly> filtered_basis(const std::vector<Poly>& polys, const std::vector<bool>& mask) {
  struct Item {
    Poly poly;
    int level;
    Poly top;
  };
  std::vector<Item> basis;
  std::deque<Poly> work(polys.begin(), polys.end());
  while (!work.empty()) {
    Poly p = std::move(work.front());
    work.pop_front();
    while (!p.is_zero()) {
      const int level = p.degree_in(mask);
      const Poly top = p.top_component(mask);
      std::vector<std::size_t> same;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].level == level) same.push_back(i);
      std::map<std::vector<std::uint16_t>, std::size_t> rows;
      auto row_of = [&](const Monomial& m) { return rows.emplace(m.exponents(), rows.size()).first->second; };
      for (const auto& t : top.terms()) row_of(t.monomial);
      for (auto i : same)
        for (const auto& t : basis[i].top.terms()) row_of(t.monomial);
      RatMatrix a(rows.size(), same.size());
      RatVector b(rows.size()), x;
      for (std::size_t c = 0; c < same.size(); ++c)
        for (const auto& t : basis[same[c]].top.terms()) a(row_of(t.monomial), c) = t.coeff;
      for (const auto& t : top.terms()) b[row_of(t.monomial)] = t.coeff;
      if (same.empty() || !a.solve(b, x)) {
        basis.push_back({p, level, top});
        break;
      }
      for (std::size_t c = 0; c < same.size(); ++c)
        if (sgn(x[c]) != 0) p -= basis[same[c]].poly * x[c];
    }
  }
  std::vector<Poly> out;
  for (auto& item : basis) out.push_back(std::move(item.poly));
  return out;
}

void products_of_degree(const std::vector<Poly>& gens, std::size_t from, int degree, Poly current,
                        std::vector<Poly>& out, const TermBudget& budget) {
  if (degree == 0) {
    out.push_back(std::move(current));
    return;
  }
  for (std::size_t i = from; i < gens.size(); ++i) {
    const int d = gens[i].degree();
    if (d <= 0 || d > degree) continue;
    products_of_degree(gens, i, degree - d, multiply(current, gens[i], budget), out, budget);
  }
}

std::vector<Poly> sorted_by_degree(std::vector<Poly> polys) {
  std::stable_sort(polys.begin(), polys.end(), [](const Poly& a, const Poly& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a.size() < b.size();
  });
  return polys;
}

}  // namespace

void InvariantSet::add(Poly p, bool central) {
  degrees.push_back(p.degree());
  verified_central.push_back(central);
  polys.push_back(std::move(p));
}

int InvariantSet::degree_sum() const {
  int s = 0;
  for (int d : degrees) s += d;
  return s;
}

nlohmann::json to_json(const InvariantSet& s, const std::vector<std::string>& labels) {
  nlohmann::json polys = nlohmann::json::array();
  for (std::size_t i = 0; i < s.polys.size(); ++i)
    polys.push_back({{"poly", s.polys[i].to_string(labels)},
                     {"degree", s.degrees[i]},
                     {"verified_central", static_cast<bool>(s.verified_central[i])}});
  nlohmann::json point = nlohmann::json::array();
  for (const auto& c : s.sample_point) point.push_back(to_string(c));
  return {{"polys", polys}, {"certified_rank", s.certified_rank}, {"sample_point", point}, {"seed", s.seed}};
}

bool verify_central(const LieAlgebra& q, const Poly& f) {
  for (std::size_t i = 0; i < q.dim(); ++i)
    if (!poisson_bracket(q, Poly::variable(q.dim(), i), f).is_zero()) return false;
  return true;
}

bool g1_invariants_check(const LieAlgebra& k, const Z2Grading& grading, const Poly& f) {
  for (auto i : grading.odd)
    if (!poisson_bracket(k, Poly::variable(k.dim(), i), f).is_zero()) return false;
  return true;
}

Poly top_component(const Poly& f, const Z2Grading& grading) {
  if (f.is_zero()) throw PreconditionError("top component of the zero polynomial");
  return f.top_component(odd_mask(grading, f.nvars()));
}

InvariantSet classical_invariants(const LieAlgebra& g, const MatrixRealization& rep, const TermBudget& budget) {
  if (rep.basis().size() != g.dim() || g.dim() == 0)
    throw PreconditionError("classical invariants need a matrix realization of the algebra");
  const std::size_t n = g.dim();
  const RatMatrix dual = inverse(rep.trace_form());
  InvariantSet out;
  for (const auto& block : rep.blocks()) {
    const std::size_t size = block.size;
    PolyMatrix x(size, std::vector<Poly>(size, Poly(n)));
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) {
        RatVector coeffs(n);
        for (std::size_t i = 0; i < n; ++i) {
          const Rational& e = rep.basis()[i](block.offset + r, block.offset + c);
          if (sgn(e) == 0) continue;
          for (std::size_t j = 0; j < n; ++j) coeffs[j] += dual(i, j) * e;
        }
        x[r][c] = Poly::linear(coeffs);
      }
    std::vector<std::size_t> keep;
    bool pf = false;
    switch (block.kind) {
      case MatrixKind::Sl:
        for (std::size_t k = 2; k <= size; ++k) keep.push_back(k);
        break;
      case MatrixKind::Sp:
        for (std::size_t k = 2; k <= size; k += 2) keep.push_back(k);
        break;
      case MatrixKind::So:
        pf = size % 2 == 0;
        for (std::size_t k = 2; k + (pf ? 2 : 1) <= size; k += 2) keep.push_back(k);
        break;
    }
    const std::size_t upto = keep.empty() ? 0 : keep.back();
    const auto e = elementary_coefficients(x, upto, budget);
    for (auto k : keep) out.add(e[k], verify_central(g, e[k]));
    if (pf) {
      Poly p = pfaffian(x, budget);
      out.add(p, verify_central(g, p));
    }
  }
  Rng rng(kDefaultSeed);
  out.seed = kDefaultSeed;
  out.sample_point = random_vector(n, rng);
  out.certified_rank = jacobian_rank_at(out.polys, out.sample_point);
  return out;
}

std::vector<Poly> contraction_invariant_pool(const LieAlgebra& k, const Z2Grading& grading, const InvariantSet& ginv,
                                             const TermBudget& budget) {
  const std::size_t n = k.dim();
  const auto mask = odd_mask(grading, n);
  std::vector<int> degrees = ginv.degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  std::vector<Poly> pool;
  for (int d : degrees) {
    std::vector<Poly> products;
    products_of_degree(ginv.polys, 0, d, Poly::constant(n, 1), products, budget);
    for (const auto& p : filtered_basis(products, mask)) {
      Poly top = p.top_component(mask);
      if (verify_central(k, top)) pool.push_back(std::move(top));
    }
  }
  return sorted_by_degree(std::move(pool));
}

InvariantSet contraction_invariants(const LieAlgebra& k, const std::vector<Poly>& pool, std::size_t count,
                                    std::uint64_t seed) {
  Rng rng(seed);
  InvariantSet out;
  out.seed = seed;
  out.sample_point = random_vector(k.dim(), rng);
  std::vector<RatVector> grads;
  for (const auto& p : sorted_by_degree(pool)) {
    if (out.polys.size() == count) break;
    grads.push_back(p.gradient_at(out.sample_point));
    if (rank_of(grads) == grads.size()) {
      out.add(p, verify_central(k, p));
    } else {
      grads.pop_back();
    }
  }
  out.certified_rank = grads.size();
  return out;
}

InvariantSet nreg_subalgebra(const PairRealization& pr, std::uint64_t seed, const TermBudget& budget) {
  if (!is_n_regular(pr.satake))
    throw PreconditionError("pair " + pair_name(pr.id) + " is not N-regular: its Satake diagram has black nodes");
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = k.dim();
  const std::size_t m = static_cast<std::size_t>(pr.rank_g() - rank(pr.satake));
  const auto pool = contraction_invariant_pool(k, pr.grading, classical_invariants(pr.g, pr.rep, budget), budget);

  Rng rng(seed);
  InvariantSet out;
  out.seed = seed;
  out.sample_point = random_vector(n, rng);
  std::vector<RatVector> grads;
  for (auto i : pr.grading.odd) {
    out.add(Poly::variable(n, i), true);
    grads.push_back(out.polys.back().gradient_at(out.sample_point));
  }
  std::size_t added = 0;
  for (const auto& p : pool) {
    if (added == m) break;
    grads.push_back(p.gradient_at(out.sample_point));
    if (rank_of(grads) == grads.size()) {
      out.add(p, true);
      ++added;
    } else {
      grads.pop_back();
    }
  }
  out.certified_rank = rank_of(grads);
  if (out.certified_rank != pr.dim1() + m)
    throw CheckError("top-component pool reaches Jacobian rank " + std::to_string(out.certified_rank) + ", needed " +
                     std::to_string(pr.dim1() + m));
  if (!pairwise_commuting(k, out.polys, budget).commuting) throw CheckError("selected generators do not commute");
  return out;
}

WitnessSearch noncommutativity_witness(const PairRealization& pr, const WitnessLimits& limits) {
  const LieAlgebra k = contract(pr.g, pr.grading);
  const std::size_t n = k.dim();
  if (n > limits.max_dim)
    throw BudgetError("dimension " + std::to_string(n) + " exceeds the witness search limit " +
                      std::to_string(limits.max_dim));
  WitnessSearch out;
  std::vector<Poly> invariants;
  for (unsigned d = 1; d <= limits.degree_bound; ++d) {
    // Monomials of degree d, as exponent vectors.
    std::vector<Poly> current;
    std::vector<std::uint16_t> e(n, 0);
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
      if (current.size() > limits.max_monomials)
        throw BudgetError("more than " + std::to_string(limits.max_monomials) + " monomials in degree " +
                          std::to_string(d));
      if (var + 1 == n) {
        e[var] = static_cast<std::uint16_t>(left);
        current.push_back(Poly::from_terms(n, {Term{Monomial(e), Rational(1)}}));
        e[var] = 0;
        return;
      }
      for (unsigned a = left + 1; a-- > 0;) {
        e[var] = static_cast<std::uint16_t>(a);
        self(self, var + 1, left - a);
      }
      e[var] = 0;
    };
    rec(rec, 0, d);
    for (auto odd : pr.grading.odd) {
      if (current.empty()) break;
      const Poly x = Poly::variable(n, odd);
      std::vector<Poly> images;
      std::map<std::vector<std::uint16_t>, std::size_t> rows;
      for (const auto& p : current) {
        images.push_back(poisson_bracket(k, x, p));
        for (const auto& t : images.back().terms()) rows.emplace(t.monomial.exponents(), rows.size());
      }
      if (rows.empty()) continue;
      RatMatrix a(rows.size(), current.size());
      for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& t : images[c].terms()) a(rows.at(t.monomial.exponents()), c) = t.coeff;
      std::vector<Poly> next;
      for (const auto& v : a.kernel()) {
        Poly p(n);
        for (std::size_t c = 0; c < v.size(); ++c)
          if (sgn(v[c]) != 0) p += current[c] * v[c];
        next.push_back(std::move(p));
      }
      current = std::move(next);
    }
    out.invariant_dims.push_back(current.size());
    invariants.insert(invariants.end(), current.begin(), current.end());
  }
  for (std::size_t i = 0; i < invariants.size() && !out.witness; ++i)
    for (std::size_t j = i + 1; j < invariants.size(); ++j) {
      Poly b = poisson_bracket(k, invariants[i], invariants[j]);
      if (!b.is_zero()) {
        out.witness = NoncommutativityWitness{invariants[i], invariants[j], std::move(b)};
        break;
      }
    }
  return out;
}

}  // namespace z2c
