#include <doctest.h>

#include "helpers.hpp"
#include "z2c/analysis.hpp"
#include "z2c/error.hpp"
#include "z2c/structure.hpp"

using namespace z2c;
using z2c::testing::vec;

namespace {

const Check* find_check(const VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("summary suite") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sl2+sl2,diag"}) {
    INFO(name);
    const auto r = verify_summary(parse_pair(name));
    CHECK(r.passed());
    CHECK(r.suite == "summary");
  }
  const auto r = verify_summary(parse_pair("sl2,so2"));
  const auto j = to_json(r);
  CHECK(j.at("passed") == true);
  CHECK(j.at("satake") == "A1 colors=w arrows=[]");
  CHECK(to_json(verify_summary(parse_pair("sl2,so2"))).dump() == j.dump());
  CHECK_THROWS_AS(verify_summary(parse_pair("E7,E6+t1")), UnsupportedError);
}

TEST_CASE("index certificates") {
  const auto pr = build_pair(parse_pair("sl3,so3"));
  const auto k = contract(pr.g, pr.grading);
  const auto exact = certified_index(k, {}, 1, 0);
  CHECK(exact.symbolic);
  CHECK(exact.index == 2);
}

TEST_CASE("main theorem sweep") {
  const auto small = verify_main_theorem_combinatorics(2);
  CHECK(small.passed());
  CHECK(small.checks.size() >= 5);
  const auto six = verify_main_theorem_combinatorics(6);
  CHECK(six.passed());
  CHECK_THROWS_AS(verify_main_theorem_combinatorics(9), PreconditionError);
}

TEST_CASE("stabilizer dimension formula") {
  for (const char* name : {"sl2,so2", "sl3,so3", "sp4,sp2+sp2", "sl3,gl1"}) {
    INFO(name);
    CHECK(verify_dim_stab(parse_pair(name), 20, 1).passed());
  }
}

TEST_CASE("non-maximality of shift families for maximal-rank pairs") {
  const auto id = parse_pair("sl2,so2");
  for (const auto& xi : {vec({0, 1, 0}), vec({0, 0, 1})}) {
    const auto r = demonstrate_nonmaximality(id, 1, xi);
    CHECK(r.passed());
  }
  CHECK(demonstrate_nonmaximality(parse_pair("sl3,so3"), 1).passed());
  CHECK_THROWS_AS(demonstrate_nonmaximality(parse_pair("sp4,sp2+sp2"), 1), PreconditionError);
}

TEST_CASE("N-regular suite") {
  for (const char* name : {"sl2,so2", "sl2+sl2,diag", "sl3,gl1"}) {
    INFO(name);
    CHECK(verify_nreg(parse_pair(name)).passed());
  }
  CHECK_THROWS_AS(verify_nreg(parse_pair("sp4,sp2+sp2")), PreconditionError);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.suite = "demo";
  r.pair = "(sl2, so2)";
  r.seed = 3;
  r.add("two equals two", 2, 2, "note");
  r.add("ratio", "1/2", "1/3");
  r.timings.push_back({"all", 1.5});
  CHECK_FALSE(r.passed());
  const auto j = to_json(r);
  CHECK(j.dump() ==
        R"j({"suite":"demo","pair":"(sl2, so2)","seed":3,"passed":false,"checks":[)j"
        R"j({"name":"two equals two","expected":2,"computed":2,"pass":true,"note":"note"},)j"
        R"j({"name":"ratio","expected":"1/2","computed":"1/3","pass":false}],"notes":[]})j");
  const auto md = to_markdown(r);
  CHECK(md.find("| check | expected | computed | pass | note |") != std::string::npos);
  CHECK(md.find("| ratio | 1/2 | 1/3 | NO |  |") != std::string::npos);
  CHECK(find_check(r, "ratio") != nullptr);
}

TEST_CASE("structure pairs up to rank 2") {
  const auto pairs = structure_pairs(2);
  CHECK(pairs.size() >= 8);
  for (const auto& p : pairs) CHECK(algebra_rank(p) <= 2);
}
