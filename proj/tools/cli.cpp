#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "z2c/analysis.hpp"
#include "z2c/catalog.hpp"
#include "z2c/diagram.hpp"
#include "z2c/error.hpp"
#include "z2c/invariants.hpp"
#include "z2c/poisson.hpp"
#include "z2c/random.hpp"
#include "z2c/structure.hpp"

namespace z2c {

namespace {

constexpr const char* kPairHelp =
    "Pair grammar: sl<n>,so<n> | sl<n>,gl<k> | sl<n>,s(gl<k>+gl<n-k>) | sl<2n>,sp<2n> | so<p+q>,so<p>+so<q> | "
    "so<n>,so<n-1> | so<2n>,gl<n> | sp<2n>,sp<2k>+sp<2n-2k> | sp<2n>,gl<n> | <h>+<h>,diag | "
    "E6,sp8 | E6,sl6+sl2 | E6,so10+t1 | E6,F4 | E7,sl8 | E7,so12+sl2 | E7,E6+t1 | E8,so16 | E8,E7+sl2 | "
    "F4,sp6+sl2 | F4,so9 | G2,sl2+sl2";

// Term-product cap for symbolic brackets requested from the command line.
constexpr std::size_t kBracketBudget = 10000;

constexpr std::size_t kDimStabSamples = 20;

struct Config {
  std::uint64_t seed = kDefaultSeed;
  bool exact = false;
  unsigned degree_bound = 4;
  int max_nodes = 6;
  std::string format = "json";
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file " + path, 0);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json parse_json_text(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

LieAlgebra load_algebra(const std::string& pair, const std::string& file, bool ambient) {
  if (!file.empty()) return LieAlgebra::from_json(parse_json_text(read_file(file)));
  if (pair.empty()) throw ParseError("either --pair or --algebra is required", 0);
  const PairRealization pr = build_pair(parse_pair(pair));
  return ambient ? pr.g : contract(pr.g, pr.grading);
}

RatVector parse_covector(const std::string& text, std::size_t n) {
  RatVector v;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      v.push_back(parse_rational(part));
    } catch (const ParseError& e) {
      throw ParseError("invalid coordinate '" + part + "'", start + e.position());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (v.size() != n)
    throw ValidationError("covector has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(n));
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text;
}

int emit(const VerificationReport& r, const Config& cfg, std::ostream& out) {
  const std::string json = to_json(r).dump(2) + "\n";
  const std::string md = to_markdown(r);
  out << (cfg.format == "markdown" ? md : json);
  if (!cfg.out.empty()) {
    write_file(cfg.out + ".json", json);
    write_file(cfg.out + ".md", md);
  }
  return r.passed() ? kExitPass : kExitCheckFailed;
}

VerificationReport witness_report(const PairId& pair, const Config& cfg) {
  const PairId id = normalized(pair);
  const PairRealization pr = build_pair(id);
  VerificationReport r;
  r.suite = "witness";
  r.pair = pair_name(id);
  r.satake = pr.satake.to_dsl();
  r.seed = cfg.seed;
  WitnessLimits limits;
  limits.degree_bound = cfg.degree_bound;
  const WitnessSearch search = noncommutativity_witness(pr, limits);
  const bool n_regular = is_n_regular(pr.satake);
  r.add("non-commuting g1-invariants found up to degree " + std::to_string(cfg.degree_bound), !n_regular,
        search.witness.has_value(), n_regular ? "N-regular: the g1-invariants commute" : "not N-regular");
  for (std::size_t d = 0; d < search.invariant_dims.size(); ++d)
    r.notes.push_back("degree " + std::to_string(d + 1) + ": " + std::to_string(search.invariant_dims[d]) +
                      " independent g1-invariants");
  if (search.witness) {
    const auto& labels = pr.g.labels();
    r.notes.push_back("f = " + search.witness->f.to_string(labels));
    r.notes.push_back("g = " + search.witness->g.to_string(labels));
    r.notes.push_back("{f, g} = " + search.witness->bracket.to_string(labels));
  }
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Satake diagrams, symmetric pairs and their Z2-contractions"};
  app.require_subcommand(1);
  app.footer(kPairHelp);

  Config cfg;
  cfg.seed = seed_from_env(kDefaultSeed);
  std::string pair, diagram, suite, algebra, xi;
  std::vector<std::string> polys;
  bool ambient = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a Satake diagram or a named pair");
  classify_cmd->add_option("diagram,--diagram", diagram, "Diagram in the form \"A3 colors=wbw arrows=[(1,3)]\"");
  classify_cmd->add_option("--pair", pair, "Named symmetric pair");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and emit a report");
  verify_cmd->add_option("--suite", suite, "summary | main | dimstab | nreg | nonmax | witness")
      ->required()
      ->check(CLI::IsMember({"summary", "main", "dimstab", "nreg", "nonmax", "witness"}));
  verify_cmd->add_option("--pair", pair, "Named symmetric pair");
  verify_cmd->add_option("--xi", xi, "Direction for nonmax, comma-separated rationals");
  verify_cmd->add_option("--seed", cfg.seed, "Random seed (default 1, or Z2C_SEED)");
  verify_cmd->add_flag("--exact", cfg.exact, "Unbounded symbolic elimination for indices");
  verify_cmd->add_option("--degree-bound", cfg.degree_bound, "Degree bound of the witness search (default 4)");
  verify_cmd->add_option("--max-nodes", cfg.max_nodes, "Node bound of the diagram sweep (default 6)")
      ->check(CLI::Range(1, 8));
  verify_cmd->add_option("--format", cfg.format, "json | markdown")->check(CLI::IsMember({"json", "markdown"}));
  verify_cmd->add_option("--out", cfg.out, "Also write <out>.json and <out>.md");

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie-Poisson bracket of two polynomials");
  auto* shift_cmd = app.add_subcommand("shift", "Argument shifts f_xi^j, j = 0..d-1");
  for (auto* cmd : {bracket_cmd, shift_cmd}) {
    cmd->add_option("--pair", pair, "Contraction of a named pair");
    cmd->add_option("--algebra", algebra, "Structure-constant JSON file");
    cmd->add_flag("--ambient", ambient, "Use g instead of its contraction");
  }
  bracket_cmd->add_option("polys", polys, "Two polynomials")->expected(2)->required();
  shift_cmd->add_option("--xi", xi, "Direction, comma-separated rationals")->required();
  shift_cmd->add_option("poly", polys, "Polynomial")->expected(1)->required();

  auto* export_cmd = app.add_subcommand("export", "Structure constants, grading and diagram of a pair as JSON");
  export_cmd->add_option("--pair", pair, "Named symmetric pair")->required();
  export_cmd->add_option("--out", cfg.out, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitParse;
  }

  try {
    if (classify_cmd->parsed()) {
      if (diagram.empty() == pair.empty()) throw ParseError("give exactly one of a diagram or --pair", 0);
      const SatakeDiagram d = diagram.empty() ? satake_of(parse_pair(pair)) : parse_satake(diagram);
      out << to_json(classify(d)).dump() << "\n";
      return kExitPass;
    }
    if (verify_cmd->parsed()) {
      if (suite == "main") return emit(verify_main_theorem_combinatorics(cfg.max_nodes), cfg, out);
      if (pair.empty()) throw ParseError("suite " + suite + " needs --pair", 0);
      const PairId id = parse_pair(pair);
      SuiteOptions options;
      options.seed = cfg.seed;
      options.exact = cfg.exact;
      if (suite == "summary") return emit(verify_summary(id, options), cfg, out);
      if (suite == "dimstab") return emit(verify_dim_stab(id, kDimStabSamples, cfg.seed), cfg, out);
      if (suite == "nreg") return emit(verify_nreg(id, options), cfg, out);
      if (suite == "witness") return emit(witness_report(id, cfg), cfg, out);
      std::optional<RatVector> dir;
      if (!xi.empty()) dir = parse_covector(xi, build_pair(id).g.dim());
      return emit(demonstrate_nonmaximality(id, cfg.seed, dir), cfg, out);
    }
    if (bracket_cmd->parsed() || shift_cmd->parsed()) {
      const LieAlgebra q = load_algebra(pair, algebra, ambient);
      const auto& labels = q.labels();
      if (bracket_cmd->parsed()) {
        const Poly f = parse_poly(polys[0], labels);
        const Poly g = parse_poly(polys[1], labels);
        out << poisson_bracket(q, f, g, TermBudget{kBracketBudget}).to_string(labels) << "\n";
      } else {
        const Poly f = parse_poly(polys[0], labels);
        const auto parts = shift(f, parse_covector(xi, q.dim()));
        for (std::size_t j = 0; j < parts.size(); ++j) out << (j ? " ; " : "") << parts[j].to_string(labels);
        out << "\n";
      }
      return kExitPass;
    }
    if (export_cmd->parsed()) {
      const PairRealization pr = build_pair(parse_pair(pair));
      nlohmann::ordered_json j;
      j["pair"] = pair_name(pr.id);
      j["satake"] = to_json(pr.satake);
      j["algebra"] = pr.g.to_json();
      j["contraction"] = contract(pr.g, pr.grading).to_json();
      std::vector<std::size_t> even, odd;
      for (auto i : pr.grading.even) even.push_back(i + 1);
      for (auto i : pr.grading.odd) odd.push_back(i + 1);
      j["grading"] = {{"even", even}, {"odd", odd}};
      const std::string text = j.dump(2) + "\n";
      if (cfg.out.empty())
        out << text;
      else
        write_file(cfg.out, text);
      return kExitPass;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitParse;
}

}  // namespace z2c
