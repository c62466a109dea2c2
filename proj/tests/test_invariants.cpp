#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "z2c/error.hpp"
#include "z2c/invariants.hpp"
#include "z2c/poisson.hpp"
#include "z2c/structure.hpp"

using namespace z2c;

namespace {

std::vector<int> sorted_degrees(const InvariantSet& s) {
  auto d = s.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("classical invariants of small algebras") {
  const auto sl2 = build_pair(parse_pair("sl2,so2"));
  const auto c2 = classical_invariants(sl2.g, sl2.rep);
  REQUIRE(c2.polys.size() == 1);
  CHECK(c2.degrees == std::vector<int>{2});
  CHECK(c2.verified_central == std::vector<bool>{true});
  // (h^2 + 4ef)/4 with e = (w+u)/2, f = (w-u)/2, h = v.
  CHECK(c2.polys[0].to_string(sl2.g.labels()) == "1/4*u^2-1/4*v^2-1/4*w^2");

  const auto sl3 = build_pair(parse_pair("sl3,so3"));
  const auto c3 = classical_invariants(sl3.g, sl3.rep);
  CHECK(sorted_degrees(c3) == std::vector<int>{2, 3});
  CHECK(c3.degree_sum() == 5);

  const auto so4 = build_pair(parse_pair("so4,so1+so3"));
  const auto c4 = classical_invariants(so4.g, so4.rep);
  CHECK(sorted_degrees(c4) == std::vector<int>{2, 2});
  CHECK(c4.degree_sum() == 4);

  CHECK_THROWS_AS(classical_invariants(sl2.g, MatrixRealization{}), PreconditionError);
}

TEST_CASE("classical invariants have degree sum b(g)") {
  for (const char* name : {"sp4,gl2", "so5,so4", "so6,gl3", "sl4,sp4", "so8,so4+so4", "sl3+sl3,diag"}) {
    INFO(name);
    const auto pr = build_pair(parse_pair(name));
    const auto c = classical_invariants(pr.g, pr.rep);
    CHECK(c.polys.size() == static_cast<std::size_t>(pr.rank_g()));
    CHECK(Rational(c.degree_sum()) == b_value(pr.g, pr.rank_g()));
    CHECK(std::all_of(c.verified_central.begin(), c.verified_central.end(), [](bool b) { return b; }));
    CHECK(c.certified_rank == c.polys.size());
  }
}

TEST_CASE("Pfaffian normalization") {
  const auto pr = build_pair(parse_pair("so4,so2+so2"));
  const auto c = classical_invariants(pr.g, pr.rep);
  // The Pfaffian is the degree-2 invariant that is not a multiple of the trace of X^2.
  const auto& rep = pr.rep;
  RatMatrix target(4, 4);
  target(0, 1) = 1;
  target(1, 0) = -1;
  target(2, 3) = 1;
  target(3, 2) = -1;
  // Coordinates of the point of g* paired with X = target under the trace form.
  const RatVector x = rep.coordinates(target);
  const RatMatrix gram = rep.trace_form();
  const RatVector xi = gram * x;
  CHECK(std::any_of(c.polys.begin(), c.polys.end(), [&](const Poly& p) { return p.evaluate(xi) == 1; }));
}

TEST_CASE("top components") {
  const auto pr = build_pair(parse_pair("sl2,so2"));
  const auto& l = pr.g.labels();
  CHECK(top_component(parse_poly("v^2+w^2-u^2", l), pr.grading) == parse_poly("v^2+w^2", l));
  CHECK(top_component(parse_poly("u^3", l), pr.grading) == parse_poly("u^3", l));
  CHECK(top_component(parse_poly("v*w+w^2", l), pr.grading) == parse_poly("v*w+w^2", l));
  CHECK_THROWS_AS(top_component(Poly(3), pr.grading), PreconditionError);
}

TEST_CASE("centrality and g1-invariance") {
  const auto pr = build_pair(parse_pair("sl2,so2"));
  const auto k = contract(pr.g, pr.grading);
  const auto& l = k.labels();
  CHECK(verify_central(k, parse_poly("v^2+w^2", l)));
  CHECK_FALSE(verify_central(k, parse_poly("u", l)));
  CHECK(verify_central(k, Poly::constant(3, 7)));
  CHECK(g1_invariants_check(k, pr.grading, parse_poly("v", l)));
  CHECK(g1_invariants_check(k, pr.grading, parse_poly("w", l)));
  CHECK(g1_invariants_check(k, pr.grading, parse_poly("v^2+w^2", l)));
  CHECK_FALSE(g1_invariants_check(k, pr.grading, parse_poly("u", l)));
}

TEST_CASE("contraction invariants") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sp4,sp2+sp2", "sl2+sl2,diag"}) {
    INFO(name);
    const auto pr = build_pair(parse_pair(name));
    const auto k = contract(pr.g, pr.grading);
    const auto pool = contraction_invariant_pool(k, pr.grading, classical_invariants(pr.g, pr.rep));
    const auto inv = contraction_invariants(k, pool, pr.rank_g(), 1);
    CHECK(inv.polys.size() == static_cast<std::size_t>(pr.rank_g()));
    CHECK(Rational(inv.degree_sum()) == b_value(k, pr.rank_g()));
    for (const auto& p : inv.polys) CHECK(verify_central(k, p));
    CHECK(pairwise_commuting(k, inv.polys).commuting);
  }
}

TEST_CASE("N-regular subalgebras") {
  const auto sl2 = build_pair(parse_pair("sl2,so2"));
  const auto a = nreg_subalgebra(sl2, 1);
  CHECK(a.polys.size() == 2);
  CHECK(a.certified_rank == 2);

  const auto diag = build_pair(parse_pair("sl2+sl2,diag"));
  const auto b = nreg_subalgebra(diag, 1);
  CHECK(b.polys.size() == 4);
  CHECK(b.certified_rank == 4);
  CHECK(pairwise_commuting(contract(diag.g, diag.grading), b.polys).commuting);

  CHECK_THROWS_AS(nreg_subalgebra(build_pair(parse_pair("sp4,sp2+sp2")), 1), PreconditionError);
}

TEST_CASE("non-commutativity witnesses") {
  const auto sp = build_pair(parse_pair("sp4,sp2+sp2"));
  WitnessLimits two;
  two.degree_bound = 2;
  const auto w = noncommutativity_witness(sp, two);
  REQUIRE(w.witness);
  const auto k = contract(sp.g, sp.grading);
  CHECK(g1_invariants_check(k, sp.grading, w.witness->f));
  CHECK(g1_invariants_check(k, sp.grading, w.witness->g));
  CHECK(poisson_bracket(k, w.witness->f, w.witness->g) == w.witness->bracket);
  CHECK_FALSE(w.witness->bracket.is_zero());

  CHECK_FALSE(noncommutativity_witness(build_pair(parse_pair("sl2,so2")), WitnessLimits{}).witness);
  WitnessLimits zero;
  zero.degree_bound = 0;
  CHECK_FALSE(noncommutativity_witness(sp, zero).witness);
}

TEST_CASE("invariant set JSON") {
  const auto pr = build_pair(parse_pair("sl2,so2"));
  const auto c = classical_invariants(pr.g, pr.rep);
  const auto j = to_json(c, pr.g.labels());
  CHECK(j.at("polys").at(0).at("poly") == "1/4*u^2-1/4*v^2-1/4*w^2");
  CHECK(j.at("polys").at(0).at("degree") == 2);
  CHECK(j.at("certified_rank") == 1);
}
