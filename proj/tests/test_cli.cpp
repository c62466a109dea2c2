#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace z2c;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify command") {
  const auto e6 = cli({"classify", "--pair", "E6,F4"});
  CHECK(e6.code == kExitPass);
  CHECK(e6.out == "{\"family\":\"E6/F4\",\"params\":[],\"rank\":2,\"codim3\":true,\"n_regular\":false,\"m\":null}\n");
  const auto a1 = cli({"classify", "A1 colors=w arrows=[]"});
  CHECK(a1.code == kExitPass);
  CHECK(a1.out.find("\"codim3\":false") != std::string::npos);
  CHECK(cli({"classify", "--diagram", "A2 colors=wb arrows=[(1,2)]"}).code == kExitValidation);
  CHECK(cli({"classify", "A2 colours=ww"}).code == kExitParse);
  CHECK(cli({"classify"}).code == kExitParse);
  CHECK(cli({"frobnicate"}).code == kExitParse);
  CHECK(cli({"--help"}).code == kExitPass);
}

TEST_CASE("bracket and shift commands") {
  CHECK(cli({"bracket", "--pair", "sl2,so2", "v^2+w^2", "u"}).out == "0\n");
  CHECK(cli({"bracket", "--pair", "sl2,so2", "--ambient", "v", "w"}).out == "2*u\n");
  CHECK(cli({"bracket", "--algebra", Z2C_DATA_DIR "/sl2.json", "e", "f"}).out == "h\n");
  CHECK(cli({"shift", "--pair", "sl2,so2", "--xi", "0,1,0", "v^2+w^2"}).out == "v^2+w^2 ; 2*v\n");
  CHECK(cli({"shift", "--pair", "sl2,so2", "--xi", "0,1", "v^2+w^2"}).code == kExitValidation);
  CHECK(cli({"shift", "--pair", "sl2,so2", "--xi", "0,a,1", "v^2"}).code == kExitParse);
  CHECK(cli({"bracket", "--pair", "sl2,so2", "(u", "v"}).code == kExitParse);
  CHECK(cli({"bracket", "--algebra", "/nonexistent.json", "e", "f"}).code == kExitParse);
  CHECK(cli({"bracket", "--pair", "E6,F4", "x1", "x2"}).code == kExitUnsupported);
  CHECK(cli({"bracket", "--pair", "sl3,so3", "(x1+x2+x3+y1+y2+y3+y4+y5)^6", "(x1+y1+y2+y3+y4+y5)^6"}).code ==
        kExitBudget);
}

TEST_CASE("verify command") {
  const auto main = cli({"verify", "--suite", "main", "--max-nodes", "4", "--format", "markdown"});
  CHECK(main.code == kExitPass);
  CHECK(main.out.find("| check | expected | computed | pass | note |") != std::string::npos);
  const auto summary = cli({"verify", "--suite", "summary", "--pair", "sl2,so2"});
  CHECK(summary.code == kExitPass);
  CHECK(summary.out == cli({"verify", "--suite", "summary", "--pair", "sl2,so2"}).out);
  CHECK(cli({"verify", "--suite", "nreg", "--pair", "sp4,sp2+sp2"}).code == kExitUnsupported);
  CHECK(cli({"verify", "--suite", "summary", "--pair", "E6,F4"}).code == kExitUnsupported);
  CHECK(cli({"verify", "--suite", "bogus"}).code == kExitParse);
  CHECK(cli({"verify", "--suite", "witness", "--pair", "sp4,sp2+sp2", "--degree-bound", "2"}).code == kExitPass);

  const std::string prefix = "cli_test_report";
  CHECK(cli({"verify", "--suite", "dimstab", "--pair", "sl2,so2", "--out", prefix}).code == kExitPass);
  std::ifstream json(prefix + ".json"), md(prefix + ".md");
  CHECK(json.good());
  CHECK(md.good());
  std::remove((prefix + ".json").c_str());
  std::remove((prefix + ".md").c_str());
}

TEST_CASE("export command") {
  const auto r = cli({"export", "--pair", "sl2,so2"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("satake").at("colors") == "w");
  CHECK(j.at("grading").at("odd") == nlohmann::json::array({2, 3}));
  CHECK(j.at("contraction").at("labels") == nlohmann::json::array({"u", "v", "w"}));
}
