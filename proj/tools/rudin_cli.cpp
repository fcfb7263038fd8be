// rudin: co-rank of Rudin quotient modules from the command line.
//
// Exit codes: 0 success, 1 failed assertion or invariant, 2 input error,
// 3 method precondition not met.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rudin/corank.hpp"
#include "rudin/error.hpp"
#include "rudin/io/json_io.hpp"
#include "rudin/numerics/tensor_module.hpp"
#include "rudin/pareto.hpp"
#include "rudin/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kPrecondition = 3;

using rudin::Error;
using rudin::ErrorCode;
using rudin::io::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RUDIN_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed RUDIN_SEED=" << env << "\n";
    }
  }
  return 0;
}

bool write_json(const std::string& path, const json& doc) {
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return true;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << doc.dump(2) << "\n";
  return true;
}

void print_report(const rudin::CorankReport& report) {
  std::cout << "method: " << rudin::to_string(report.method) << "\n";
  if (report.method == rudin::CorankMethod::IzuchiPublished) {
    std::cout << "*** KNOWN-INCORRECT: this is the published two-variable formula, which undercounts;\n"
                 "*** it is reported only for comparison with --method=general.\n";
  }
  if (report.truncated_window) {
    std::cout << "note: the family is a window truncation; the value is not a limit\n";
  }
  std::cout << "tuples: " << report.per_tuple.size() << "\n";
  for (const auto& t : report.per_tuple) {
    std::cout << "  " << t.tuple.to_string() << "  Z=" << t.zero_set.to_string();
    if (!t.minimal_rep.tuples.empty()) std::cout << "  minimal=" << t.minimal_rep.to_string();
    if (t.i_set) {
      std::cout << "  I={";
      for (std::size_t i = 0; i < t.i_set->size(); ++i) std::cout << (i ? ", " : "") << (*t.i_set)[i];
      std::cout << "}";
    }
    std::cout << "  count=" << t.count << "\n";
  }
  std::cout << "co-rank = " << report.overall << "\n";
}

int cmd_corank(const std::string& input, const std::string& method, const std::string& json_out) {
  rudin::RudinFamily fam = [&] { return rudin::io::load_family(input); }();
  rudin::CorankReport report;
  if (method == "general") {
    report = rudin::corank_general(fam);
  } else if (method == "monotone") {
    const auto increasing = rudin::declared_increasing(fam);
    for (std::size_t i = 0; i < fam.n(); ++i) {
      if (fam.variable(i).monotone == rudin::Monotonicity::None) {
        std::cerr << "error: --method=monotone needs every variable declared increasing or decreasing; variable "
                  << i + 1 << " is \"none\"\n";
        return kPrecondition;
      }
    }
    if (increasing.empty() || increasing.size() == fam.n()) {
      std::cerr << "error: --method=monotone needs at least one increasing and one decreasing variable\n";
      return kPrecondition;
    }
    const auto check = rudin::validate_monotone(fam, increasing);
    if (!check) {
      std::cerr << "error: family fails the monotone hypotheses:\n";
      for (const auto& d : check.diagnostics) std::cerr << "  " << d << "\n";
      return kPrecondition;
    }
    report = rudin::corank_monotone(fam, increasing);
  } else {
    report = rudin::izuchi_published_corank(fam);
  }
  print_report(report);
  if (!json_out.empty() && !write_json(json_out, rudin::io::report_to_json(report))) return kInputError;
  return kOk;
}

std::vector<rudin::OrderTuple> parse_tuples(const std::string& text) {
  static const std::regex tuple_re(R"(\(\s*(\d+(?:\s*,\s*\d+)*)\s*\))");
  static const std::regex whole_re(R"(^\s*\(\s*\d+(?:\s*,\s*\d+)*\s*\)(?:\s*,\s*\(\s*\d+(?:\s*,\s*\d+)*\s*\))*\s*$)");
  if (!std::regex_match(text, whole_re)) {
    throw Error(ErrorCode::ParseError, "malformed tuple list \"" + text + "\"; expected e.g. \"(2,1),(1,2)\"");
  }
  std::vector<rudin::OrderTuple> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), tuple_re); it != std::sregex_iterator(); ++it) {
    std::vector<int> l;
    std::stringstream entries((*it)[1].str());
    for (std::string item; std::getline(entries, item, ',');) {
      const int v = std::stoi(item);
      if (v < 1) throw Error(ErrorCode::ParseError, "tuple entries must be >= 1");
      l.push_back(v);
    }
    if (!out.empty() && l.size() != out.front().size()) {
      throw Error(ErrorCode::ParseError, "tuples have different lengths");
    }
    out.emplace_back(std::move(l));
  }
  return out;
}

rudin::DiscPoint parse_point(const std::string& text) {
  static const std::regex point_re(R"(^\s*([-+0-9.eE]+)\s*,\s*([-+0-9.eE]+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, point_re)) {
    throw Error(ErrorCode::ParseError, "malformed point \"" + text + "\"; expected \"re,im\"");
  }
  try {
    return rudin::DiscPoint(std::stod(m[1].str()), std::stod(m[2].str()));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "malformed point \"" + text + "\"");
  }
}

int cmd_minimal_rep(const std::vector<std::string>& points, const std::string& tuples_text, std::uint64_t seed) {
  const auto tuples = parse_tuples(tuples_text);
  const auto rep = rudin::pareto_maximal(tuples);
  std::cout << "A~ = " << rep.to_string() << "\n";
  std::cout << "#A~ = " << rep.size() << "\n";
  if (points.empty()) return kOk;

  std::vector<rudin::DiscPoint> alpha;
  for (const auto& p : points) alpha.push_back(parse_point(p));
  if (alpha.size() != tuples.front().size()) {
    throw Error(ErrorCode::ParseError, "--point count differs from the tuple length");
  }
  const auto module = rudin::numerics::assemble_point_module(alpha, tuples);
  const int nakayama = rudin::numerics::nakayama_corank(module);
  const auto cert = rudin::numerics::randomized_min_generators(module, 20, seed);
  std::cout << "module dim = " << module.dim() << "\n";
  std::cout << "nakayama co-rank = " << nakayama << "\n";
  std::cout << "randomized generators = " << cert.generators << " (" << cert.successes << "/" << cert.trials
            << " draws, seed " << cert.seed << ")\n";
  if (nakayama != static_cast<int>(rep.size()) || cert.generators != nakayama) {
    std::cout << "MISMATCH between symbolic and numerical co-rank\n";
    return kFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<rudin::suites::SuiteResult> results;
  if (suite == "algebra" || suite == "all") results.push_back(rudin::suites::algebra(seed));
  if (suite == "operators" || suite == "all") results.push_back(rudin::suites::operators(seed));
  if (suite == "oracles" || suite == "all") results.push_back(rudin::suites::oracles(seed));
  bool ok = true;
  for (const auto& r : results) {
    std::cout << "[" << r.suite << "] seed " << seed << "\n";
    for (const auto& c : r.checks) {
      std::cout << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << "\n";
    }
    ok = ok && r.passed();
  }
  if (!ok) {
    std::cout << "failed invariants:\n";
    for (const auto& r : results) {
      for (const auto& c : r.checks) {
        if (!c.passed) std::cout << "  " << r.suite << ": " << c.name << "\n";
      }
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_paper_examples(const std::string& json_out, std::uint64_t seed) {
  const auto result = rudin::suites::paper_examples(seed);
  std::cout << std::left << std::setw(22) << "instance" << std::setw(18) << "method" << std::setw(8) << "value"
            << "expected\n";
  for (const auto& row : result.table) {
    std::cout << std::setw(22) << row.instance << std::setw(18) << row.method << std::setw(8) << row.value
              << row.expected << "\n";
  }
  std::cout << "\n";
  for (const auto& a : result.assertions) {
    std::cout << (a.passed ? "PASS" : "FAIL") << "  " << a.name << " (" << a.detail << ")\n";
  }
  if (!json_out.empty()) {
    json rows = json::array();
    for (const auto& row : result.table) {
      rows.push_back({{"instance", row.instance}, {"method", row.method}, {"value", row.value}, {"expected", row.expected}});
    }
    json assertions = json::array();
    for (const auto& a : result.assertions) {
      assertions.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    }
    if (!write_json(json_out, {{"seed", seed}, {"table", rows}, {"assertions", assertions}})) return kInputError;
  }
  for (const auto& a : result.assertions) {
    if (!a.passed) {
      std::cerr << "first failing assertion: " << a.name << "\n";
      return kFailed;
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-rank of Rudin quotient modules of the Hardy space over the polydisc"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();

  auto* corank = app.add_subcommand("corank", "co-rank of a family read from a JSON file");
  std::string input;
  std::string method = "general";
  std::string corank_json;
  corank->add_option("input", input, "family JSON file")->required();
  corank->add_option("--method", method, "general | monotone | izuchi")
      ->check(CLI::IsMember({"general", "monotone", "izuchi"}));
  corank->add_option("--json", corank_json, "write the report as JSON ('-' for stdout)");

  auto* minimal = app.add_subcommand("minimal-rep", "minimal representation of a tuple set");
  std::vector<std::string> points;
  std::string tuples;
  minimal->add_option("--point", points, "coordinates \"re,im\" of alpha_i, one flag per variable");
  minimal->add_option("--tuples", tuples, "order tuples, e.g. \"(2,1),(1,1),(1,2)\"")->required();
  minimal->add_option("--seed", seed, "seed for the numerical generator draws");

  auto* verify = app.add_subcommand("verify", "run the property batteries");
  std::string suite = "all";
  verify->add_option("--suite", suite, "algebra | operators | oracles | all")
      ->check(CLI::IsMember({"algebra", "operators", "oracles", "all"}));
  verify->add_option("--seed", seed, "seed (default 0 or $RUDIN_SEED)");

  auto* paper = app.add_subcommand("paper-examples", "reproduce the worked examples");
  std::string paper_json;
  paper->add_option("--json", paper_json, "write the comparison table as JSON ('-' for stdout)");
  paper->add_option("--seed", seed, "seed for the numerical generator draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*corank) return cmd_corank(input, method, corank_json);
    if (*minimal) return cmd_minimal_rep(points, tuples, seed);
    if (*verify) return cmd_verify(suite, seed);
    if (*paper) return cmd_paper_examples(paper_json, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NotMonotone:
      case ErrorCode::NotTwoVariables:
      case ErrorCode::BadVariablePartition:
        return kPrecondition;
      case ErrorCode::ParseError:
      case ErrorCode::InvalidArgument:
      case ErrorCode::DeskScaleExceeded:
      case ErrorCode::EmptyInput:
        return kInputError;
      default:
        return kFailed;
    }
  }
  return kInputError;
}
