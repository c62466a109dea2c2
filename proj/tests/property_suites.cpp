#include "property_suites.hpp"

#include <random>

#include "helpers.hpp"
#include "z2c/poisson.hpp"
#include "z2c/random.hpp"
#include "z2c/structure.hpp"

namespace z2c::testing {

namespace {

struct Graded {
  std::string name;
  LieAlgebra q;
  Z2Grading grading;
};

// Small algebras (at most 8 variables) for polynomial identities.
const std::vector<Graded>& small_algebras() {
  static const std::vector<Graded> list = [] {
    std::vector<Graded> out;
    out.push_back({"sl2", sl2_ehf(), {}});
    for (const char* name : {"sl2,so2", "sl3,so3", "sl3,gl1", "sl2+sl2,diag"}) {
      const auto pr = build_pair(parse_pair(name));
      out.push_back({name, pr.g, pr.grading});
      out.push_back({std::string("k(") + name + ")", contract(pr.g, pr.grading), pr.grading});
    }
    return out;
  }();
  return list;
}

// Graded algebras of every supported family up to dimension 21.
const std::vector<Graded>& graded_algebras() {
  static const std::vector<Graded> list = [] {
    std::vector<Graded> out;
    for (const char* name : {"sl2,so2", "sl3,so3", "sl3,gl1", "sl4,sp4", "sl4,gl2", "so5,so4", "so5,so2+so3",
                             "sp4,sp2+sp2", "sp4,gl2", "so6,gl3", "sl2+sl2,diag", "sl3+sl3,diag", "so5+so5,diag"}) {
      const auto pr = build_pair(parse_pair(name));
      out.push_back({name, pr.g, pr.grading});
      out.push_back({std::string("k(") + name + ")", contract(pr.g, pr.grading), pr.grading});
    }
    return out;
  }();
  return list;
}

Rational small_rational(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

Poly random_poly(std::size_t nvars, int max_degree, Rng& rng, bool homogeneous = false) {
  std::uniform_int_distribution<int> nterms(1, 5), deg(homogeneous ? max_degree : 0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Poly p(nvars);
  while (p.is_zero())
    for (int t = nterms(rng); t > 0; --t) {
      Poly m = Poly::constant(nvars, small_rational(rng));
      for (int d = deg(rng); d > 0; --d) m = m * Poly::variable(nvars, var(rng));
      p += m;
    }
  return p;
}

const Graded& pick(const std::vector<Graded>& list, Rng& rng) {
  return list[std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng)];
}

template <class Case>
PropertyResult run(std::string name, std::size_t cases, std::uint64_t seed, Case&& one) {
  PropertyResult r{std::move(name), cases, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::string what = one(rng);
    if (!what.empty()) {
      if (r.failures++ == 0) r.first_failure = "case " + std::to_string(i) + ": " + what;
    }
  }
  return r;
}

RatVector random_in(const std::vector<std::size_t>& support, std::size_t n, Rng& rng) {
  RatVector v(n);
  for (auto i : support) v[i] = small_rational(rng);
  return v;
}

}  // namespace

PropertyResult poisson_antisymmetry(std::size_t cases, std::uint64_t seed) {
  return run("Poisson antisymmetry", cases, seed, [](Rng& rng) -> std::string {
    const auto& a = pick(small_algebras(), rng);
    const Poly f = random_poly(a.q.dim(), 3, rng), g = random_poly(a.q.dim(), 3, rng);
    if (poisson_bracket(a.q, f, g) + poisson_bracket(a.q, g, f) == Poly(a.q.dim())) return {};
    return a.name + ": {f,g} + {g,f} != 0 for f = " + f.to_string(a.q.labels());
  });
}

PropertyResult poisson_leibniz(std::size_t cases, std::uint64_t seed) {
  return run("Poisson Leibniz rule", cases, seed, [](Rng& rng) -> std::string {
    const auto& a = pick(small_algebras(), rng);
    const std::size_t n = a.q.dim();
    const Poly f = random_poly(n, 3, rng), g = random_poly(n, 3, rng), h = random_poly(n, 3, rng);
    const Poly lhs = poisson_bracket(a.q, f, g * h);
    const Poly rhs = poisson_bracket(a.q, f, g) * h + g * poisson_bracket(a.q, f, h);
    if (lhs == rhs) return {};
    return a.name + ": {f, gh} != {f,g}h + g{f,h} for f = " + f.to_string(a.q.labels());
  });
}

PropertyResult poisson_jacobi(std::size_t cases, std::uint64_t seed) {
  return run("Poisson Jacobi identity", cases, seed, [](Rng& rng) -> std::string {
    const auto& a = pick(small_algebras(), rng);
    const std::size_t n = a.q.dim();
    const Poly f = random_poly(n, 3, rng), g = random_poly(n, 3, rng), h = random_poly(n, 3, rng);
    const Poly sum = poisson_bracket(a.q, f, poisson_bracket(a.q, g, h)) +
                     poisson_bracket(a.q, g, poisson_bracket(a.q, h, f)) +
                     poisson_bracket(a.q, h, poisson_bracket(a.q, f, g));
    if (sum.is_zero()) return {};
    return a.name + ": Jacobi sum is " + sum.to_string(a.q.labels());
  });
}

PropertyResult shift_symmetry(std::size_t cases, std::uint64_t seed) {
  return run("shift symmetry", cases, seed, [](Rng& rng) -> std::string {
    std::uniform_int_distribution<std::size_t> nv(1, 8);
    std::uniform_int_distribution<int> dd(2, 4);
    const std::size_t n = nv(rng);
    const int d = dd(rng);
    const Poly f = random_poly(n, d, rng, true);
    const RatVector xi = random_vector(n, rng), mu = random_vector(n, rng);
    const auto fx = shift(f, xi), fm = shift(f, mu);
    if (fx.front() != f) return "f_xi^0 != f";
    for (int j = 1; j < d; ++j)
      if (fx[j].evaluate(mu) != fm[d - j].evaluate(xi))
        return "f_xi^" + std::to_string(j) + "(mu) != f_mu^" + std::to_string(d - j) + "(xi)";
    return {};
  });
}

PropertyResult grading_closure(std::size_t cases, std::uint64_t seed) {
  return run("grading closure", cases, seed, [](Rng& rng) -> std::string {
    const auto& a = pick(graded_algebras(), rng);
    const std::size_t n = a.q.dim();
    const std::vector<std::size_t>* parts[2] = {&a.grading.even, &a.grading.odd};
    std::uniform_int_distribution<int> bit(0, 1);
    const int i = bit(rng), j = bit(rng);
    const RatVector z = a.q.bracket(random_in(*parts[i], n, rng), random_in(*parts[j], n, rng));
    for (auto k : *parts[(i + j + 1) % 2])
      if (z[k] != 0) return a.name + ": [g" + std::to_string(i) + ", g" + std::to_string(j) + "] leaves its part";
    return {};
  });
}

PropertyResult algebra_jacobi(std::size_t cases, std::uint64_t seed) {
  return run("Jacobi identity of constructed algebras", cases, seed, [](Rng& rng) -> std::string {
    const auto& a = pick(graded_algebras(), rng);
    const std::size_t n = a.q.dim();
    const RatVector x = random_vector(n, rng), y = random_vector(n, rng), z = random_vector(n, rng);
    const RatVector t1 = a.q.bracket(x, a.q.bracket(y, z));
    const RatVector t2 = a.q.bracket(y, a.q.bracket(z, x));
    const RatVector t3 = a.q.bracket(z, a.q.bracket(x, y));
    for (std::size_t k = 0; k < n; ++k)
      if (t1[k] + t2[k] + t3[k] != 0) return a.name + ": Jacobi sum is nonzero";
    return {};
  });
}

std::vector<PropertyResult> all_properties(std::size_t cases, std::uint64_t seed) {
  return {poisson_antisymmetry(cases, seed), poisson_leibniz(cases, seed), poisson_jacobi(cases, seed),
          shift_symmetry(cases, seed),       grading_closure(cases, seed), algebra_jacobi(cases, seed)};
}

}  // namespace z2c::testing
