#include <doctest.h>

#include "helpers.hpp"
#include "z2c/error.hpp"
#include "z2c/structure.hpp"

using namespace z2c;
using z2c::testing::vec;

namespace {

RatVector bracket_of(const LieAlgebra& q, std::size_t i, std::size_t j) {
  RatVector x(q.dim()), y(q.dim());
  x[i] = 1;
  y[j] = 1;
  return q.bracket(x, y);
}

}  // namespace

TEST_CASE("contraction of (sl2, so2)") {
  const auto pr = build_pair(parse_pair("sl2,so2"));
  CHECK(pr.g.dim() == 3);
  CHECK(pr.dim0() == 1);
  CHECK(pr.dim1() == 2);
  const auto k = contract(pr.g, pr.grading);
  CHECK(bracket_of(k, 0, 1) == vec({0, 0, -2}));
  CHECK(bracket_of(k, 0, 2) == vec({0, 2, 0}));
  CHECK(bracket_of(k, 1, 2) == vec({0, 0, 0}));
  CHECK(index(k) == 1);
  CHECK(b_value(k) == 2);
}

TEST_CASE("Kirillov matrix and regularity") {
  const auto pr = build_pair(parse_pair("sl2,so2"));
  const auto k = contract(pr.g, pr.grading);
  const auto m = kirillov_matrix(k, vec({5, 3, 7}));
  CHECK(m.row(0) == vec({0, -14, 6}));
  CHECK(m.row(1) == vec({14, 0, 0}));
  CHECK(m.row(2) == vec({-6, 0, 0}));
  CHECK(kirillov_matrix(k, vec({0, 0, 0})).is_zero());

  CHECK(stabilizer(k, vec({0, 1, 0})).size() == 1);
  CHECK(stabilizer(k, vec({0, 0, 0})).size() == 3);
  CHECK_FALSE(is_regular(k, vec({1, 0, 0}), 1));
  CHECK(is_regular(k, vec({0, 1, 0}), 1));
  CHECK(is_regular(z2c::testing::sl2_ehf(), vec({0, 1, 0}), 1));
}

TEST_CASE("index of semisimple and abelian algebras") {
  CHECK(index(z2c::testing::sl2_ehf()) == 1);
  CHECK(index(build_pair(parse_pair("sl3,so3")).g) == 2);
  CHECK(index(LieAlgebra({"a", "b", "c", "d"})) == 4);
  CHECK(b_value(build_pair(parse_pair("sl3,so3")).g) == 5);
}

TEST_CASE("pair dimensions") {
  const auto sp = build_pair(parse_pair("sp4,sp2+sp2"));
  CHECK(sp.dim0() == 6);
  CHECK(sp.dim1() == 4);
  const auto diag = build_pair(parse_pair("sl2+sl2,diag"));
  CHECK(diag.g.dim() == 6);
  CHECK(diag.dim0() == 3);
  CHECK_THROWS_AS(build_pair(parse_pair("E6,F4")), UnsupportedError);
}

TEST_CASE("index of contractions equals rank") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sl3,gl1", "so5,so4", "sp4,sp2+sp2", "sl2+sl2,diag"}) {
    INFO(name);
    const auto pr = build_pair(parse_pair(name));
    const auto k = contract(pr.g, pr.grading);
    CHECK(index(k) == static_cast<std::size_t>(pr.rank_g()));
    CHECK(b_value(k) == b_value(pr.g));
  }
}

TEST_CASE("graded centralizer") {
  const auto pr = build_pair(parse_pair("sl3,so3"));
  const RatVector zero(pr.g.dim());
  const auto all = graded_centralizer(pr, zero);
  CHECK(all.even.size() == pr.dim0());
  CHECK(all.odd.size() == pr.dim1());

  RatVector h(pr.g.dim());
  for (std::size_t c = 0; c < pr.cartan.size(); ++c)
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += Rational(static_cast<long>(3 + 7 * c)) * pr.cartan[c][i];
  const auto gc = graded_centralizer(pr, h);
  CHECK(gc.odd.size() == pr.cartan.size());
  CHECK(pr.dim0() - gc.even.size() == pr.dim1() - gc.odd.size());

  RatVector even(pr.g.dim());
  even[pr.grading.even.front()] = 1;
  CHECK_THROWS_AS(graded_centralizer(pr, even), PreconditionError);
}

TEST_CASE("index of regular stabilizers") {
  for (const char* name : {"sl2,so2", "sl2+sl2,diag", "sp4,sp2+sp2", "sl4,gl1"}) {
    INFO(name);
    const auto report = check_regular_stabilizer_index(build_pair(parse_pair(name)), 1);
    CHECK(report.ok);
    CHECK(report.dim_g1z == static_cast<std::size_t>(report.expected_dim_g1z));
  }
  CHECK(check_regular_stabilizer_index(build_pair(parse_pair("sl2+sl2,diag")), 1).index_g0z == 1);
  CHECK(check_regular_stabilizer_index(build_pair(parse_pair("sp4,sp2+sp2")), 1).index_g0z == 1);
  CHECK(check_regular_stabilizer_index(build_pair(parse_pair("sl2,so2")), 1).index_g0z == 0);
}

TEST_CASE("coadjoint action of contractions") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sp4,gl2", "so5,so2+so3", "sl3+sl3,diag"}) {
    INFO(name);
    CHECK(coadjoint_check(build_pair(parse_pair(name))));
  }
}

TEST_CASE("maximal-rank pairs have dim g1 = b(g)") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sl4,so4", "so5,so2+so3", "sp4,gl2", "so7,so3+so4"}) {
    INFO(name);
    const auto pr = build_pair(parse_pair(name));
    CHECK(Rational(static_cast<long>(pr.dim1())) == b_value(pr.g, pr.rank_g()));
  }
}

TEST_CASE("constructed algebras satisfy their axioms") {
  for (const char* name : {"sl4,sp4", "so6,gl3", "sp6,sp2+sp4", "sl5,gl2", "so3+so3,diag"}) {
    INFO(name);
    const auto pr = build_pair(parse_pair(name));
    CHECK_NOTHROW(pr.g.check_jacobi());
    CHECK_NOTHROW(pr.sigma.check(pr.g));
    CHECK_NOTHROW(pr.grading.check(pr.g));
    CHECK_NOTHROW(contract(pr.g, pr.grading).check_jacobi());
  }
}

TEST_CASE("structure constants JSON") {
  const auto g = z2c::testing::sl2_ehf();
  const auto back = LieAlgebra::from_json(g.to_json());
  CHECK(back.labels() == g.labels());
  CHECK(bracket_of(back, 0, 2) == vec({0, 1, 0}));
  auto bad = g.to_json();
  bad["sc"] = nlohmann::json::parse(R"([[1,2,[[1,"1"]]],[1,3,[[3,"1"]]],[2,3,[[2,"1"]]]])");
  CHECK_THROWS_AS(LieAlgebra::from_json(bad), ValidationError);
}
