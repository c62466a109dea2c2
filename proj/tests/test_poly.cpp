#include <doctest.h>

#include "z2c/error.hpp"
#include "z2c/linalg.hpp"
#include "z2c/poly.hpp"

using namespace z2c;

namespace {
const std::vector<std::string> uvw{"u", "v", "w"};
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("poly arithmetic and printing") {
  Poly p = parse_poly("v^2 + w^2", uvw);
  CHECK(p.to_string(uvw) == "v^2+w^2");
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  Poly q = parse_poly("(v+w)*(v-w)", uvw);
  CHECK(q.to_string(uvw) == "v^2-w^2");
  CHECK((p + q).to_string(uvw) == "2*v^2");
  CHECK((p - p).is_zero());
  CHECK((p - p).to_string(uvw) == "0");
  CHECK(parse_poly("1/2*u*v - 3", uvw).to_string(uvw) == "1/2*u*v-3");
  CHECK(parse_poly("-u^2", uvw).to_string(uvw) == "-u^2");
  CHECK(p.derivative(1).to_string(uvw) == "2*v");
  CHECK(parse_poly("(u+v)^3", uvw) == parse_poly("u^3+3*u^2*v+3*u*v^2+v^3", uvw));
}

TEST_CASE("poly evaluation and gradient") {
  Poly p = parse_poly("u*v^2 + 2*w", uvw);
  RatVector pt{Rational(1), Rational(2), Rational(3)};
  CHECK(p.evaluate(pt) == 10);
  auto g = p.gradient_at(pt);
  CHECK(g == RatVector{4, 4, 2});
  CHECK(p.directional_derivative({0, 1, 0}) == parse_poly("2*u*v", uvw));
}

TEST_CASE("poly parse errors carry positions") {
  try {
    parse_poly("v^2 + q", uvw);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  CHECK_THROWS_AS(parse_poly("v^", uvw), ParseError);
  CHECK_THROWS_AS(parse_poly("(u+v", uvw), ParseError);
}

TEST_CASE("term budget") {
  Poly a = parse_poly("u+v+w", uvw);
  TermBudget b{8};
  CHECK_THROWS_AS(b.check(a, a), BudgetError);
  TermBudget{9}.check(a, a);
}

TEST_CASE("rational matrix kernel and rank") {
  RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  auto k = m.kernel();
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m * k[0]));
  RatVector x;
  CHECK(m.solve({1, 2, 1}, x));
  CHECK(m * x == RatVector{1, 2, 1});
  CHECK_FALSE(m.solve({1, 0, 0}, x));
}
