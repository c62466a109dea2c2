#include <doctest.h>

#include "helpers.hpp"
#include "property_suites.hpp"
#include "z2c/error.hpp"
#include "z2c/poisson.hpp"
#include "z2c/structure.hpp"

using namespace z2c;
using z2c::testing::vec;

namespace {

struct Sl2So2 {
  PairRealization pr = build_pair(parse_pair("sl2,so2"));
  LieAlgebra k = contract(pr.g, pr.grading);
  Poly p(const char* text) const { return parse_poly(text, k.labels()); }
};

}  // namespace

TEST_CASE("brackets of coordinates and the contracted Casimir") {
  const auto g = z2c::testing::sl2_ehf();
  const auto e = parse_poly("e", g.labels()), f = parse_poly("f", g.labels());
  CHECK(poisson_bracket(g, e, f).to_string(g.labels()) == "h");

  const Sl2So2 s;
  CHECK(poisson_bracket(s.k, s.p("v^2+w^2"), s.p("u")).is_zero());
  CHECK(poisson_bracket(s.k, s.p("u"), s.p("v")) == s.p("-2*w"));
  CHECK(poisson_bracket(s.k, s.p("u^2+v*w"), s.p("u^2+v*w")).is_zero());
  CHECK_THROWS_AS(poisson_bracket(s.k, s.p("u"), Poly::variable(2, 0)), ValidationError);
}

TEST_CASE("bracket budget") {
  const Sl2So2 s;
  const Poly big = s.p("u+v+w").pow(6);
  CHECK_THROWS_AS(poisson_bracket(s.k, big, big, TermBudget{10}), BudgetError);
  CHECK_NOTHROW(poisson_bracket(s.k, big, big, TermBudget{10000}));
}

TEST_CASE("differentials") {
  const Sl2So2 s;
  CHECK(differential_at(s.p("v^2+w^2"), vec({0, 1, 0})) == vec({0, 2, 0}));
  for (const auto& xi : {vec({0, 0, 0}), vec({3, -1, 2})}) CHECK(differential_at(s.p("w"), xi) == vec({0, 0, 1}));
}

TEST_CASE("last shift is the differential with constant 1") {
  const Sl2So2 s;
  const RatVector xi = vec({2, -3, 5});
  for (const char* text : {"v^2+w^2", "u^3-2*u*v*w+w^3", "u*v^2*w+7*w^4"}) {
    INFO(text);
    const Poly f = s.p(text);
    const auto parts = shift(f, xi);
    CHECK(static_cast<int>(parts.size()) == f.degree());
    const Poly last = parts.back();
    CHECK(last.degree() == 1);
    CHECK(last.linear_coefficients() == differential_at(f, xi));
  }
}

TEST_CASE("argument shifts") {
  const Sl2So2 s;
  const auto parts = shift(s.p("v^2+w^2"), vec({0, 1, 0}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == s.p("v^2+w^2"));
  CHECK(parts[1] == s.p("2*v"));
  CHECK(shift(s.p("5"), vec({1, 1, 1})).size() == 1);
  CHECK_THROWS_AS(shift(Poly(3), vec({1, 1, 1})), PreconditionError);
  const auto sym = z2c::testing::shift_symmetry(100, 7);
  CHECK_MESSAGE(sym.failures == 0, sym.first_failure);
}

TEST_CASE("shift families commute") {
  const Sl2So2 s;
  const auto fam = mf_family(s.k, {s.p("v^2+w^2")}, vec({0, 1, 0}));
  CHECK(fam.polys() == std::vector<Poly>{s.p("v^2+w^2"), s.p("2*v")});
  CHECK(pairwise_commuting(s.k, fam.polys()).commuting);
  CHECK(jacobian_rank_at(fam.polys(), vec({0, 1, 1})) == 2);

  const auto zero = mf_family(s.k, {s.p("v^2+w^2")}, vec({0, 0, 0}));
  CHECK(zero.polys() == std::vector<Poly>{s.p("v^2+w^2")});
  CHECK_THROWS_AS(mf_family(s.k, {s.p("u")}, vec({0, 1, 0})), CheckError);

  const auto g = z2c::testing::sl2_ehf();
  const Poly cas = parse_poly("h^2+4*e*f", g.labels());
  const auto sl2fam = mf_family(g, {cas}, vec({3, -4, 11}));
  CHECK(sl2fam.polys().size() == 2);
  CHECK(pairwise_commuting(g, sl2fam.polys()).commuting);
}

TEST_CASE("commutativity witnesses") {
  const auto g = z2c::testing::sl2_ehf();
  const auto r = pairwise_commuting(g, {parse_poly("e", g.labels()), parse_poly("f", g.labels())});
  CHECK_FALSE(r.commuting);
  REQUIRE(r.witness);
  CHECK(r.witness->bracket.to_string(g.labels()) == "h");
  CHECK(pairwise_commuting(g, {parse_poly("e", g.labels())}).commuting);
}

TEST_CASE("Jacobian ranks") {
  const Sl2So2 s;
  const std::vector<Poly> coords{s.p("u"), s.p("v"), s.p("w")};
  CHECK(jacobian_rank_at(coords, vec({0, 0, 0})) == 3);
  CHECK(jacobian_rank_at({s.p("v^2"), s.p("v^2")}, vec({1, 1, 1})) == 1);
  CHECK(trdeg_lower_bound({s.p("v^2+w^2"), s.p("v"), s.p("w")}, 4, 1) == 2);
}

TEST_CASE("regularity via differentials") {
  const Sl2So2 s;
  const Poly cas = s.p("v^2+w^2");
  CHECK(regularity_via_differentials(s.k, {cas}, vec({0, 1, 0}), 1));
  CHECK_FALSE(regularity_via_differentials(s.k, {cas}, vec({1, 0, 0}), 1));
  CHECK_THROWS_AS(regularity_via_differentials(s.k, {cas, s.p("v")}, vec({0, 1, 0}), 1), PreconditionError);
  CHECK_THROWS_AS(regularity_via_differentials(s.k, {s.p("(v^2+w^2)^2")}, vec({0, 1, 0}), 1), PreconditionError);

  const auto g = z2c::testing::sl2_ehf();
  CHECK(regularity_via_differentials(g, {parse_poly("h^2+4*e*f", g.labels())}, vec({0, 1, 0}), 1));
}

TEST_CASE("polynomial JSON") {
  const Sl2So2 s;
  const Poly f = s.p("1/4*u^2-v*w+3");
  const auto j = poly_to_json(f);
  CHECK(j.dump() == R"({"nvars":3,"terms":[[[2,0,0],"1/4"],[[0,1,1],"-1"],[[0,0,0],"3"]]})");
  CHECK(poly_from_json(j) == f);
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"nvars":2,"terms":[[[1],"1"]]})")), ValidationError);
}

TEST_CASE("Poisson axioms on random polynomials") {
  for (const auto& r : {z2c::testing::poisson_antisymmetry(100, 1), z2c::testing::poisson_leibniz(100, 1),
                        z2c::testing::poisson_jacobi(100, 1)}) {
    INFO(r.name);
    CHECK_MESSAGE(r.failures == 0, r.first_failure);
  }
}
