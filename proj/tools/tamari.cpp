// Command line access to the tables, single values, series and invariant
// suites. Data goes to stdout (or --out), progress and errors to stderr.
//
// Exit codes: 0 success, 1 other error, 2 usage, 3 budget exceeded,
// 4 verification failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamari/diagonal.hpp"
#include "tamari/enumeration.hpp"
#include "tamari/equations.hpp"
#include "tamari/formulas.hpp"
#include "tamari/lattice_path.hpp"
#include "tamari/suites.hpp"
#include "tamari/tables.hpp"

namespace {

using namespace tamari;

constexpr int kOther = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr int kFailed = 4;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::string format = "csv";
  std::uint64_t budget = 0;
  int order = 0;
  std::string out;
  std::size_t jobs = 1;
  bool quiet = false;
};

void progress(const Globals& g, const std::string& message) {
  if (!g.quiet) std::cerr << "tamari: " << message << '\n';
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + g.out + " for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("write to " + g.out + " failed");
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::int64_t parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw UsageError("expected a nonnegative integer, got '" + text + "'");
  }
  return std::stoll(text);
}

// table ---------------------------------------------------------------

struct TableArgs {
  std::string name;
  int n = 0;
  int m = 0;
  std::string source;
  bool marginal = false;
  bool binomial = false;
};

int run_table(const Globals& g, const TableArgs& a, Budget& budget) {
  TableOptions options;
  options.n = a.n;
  options.m = a.m;
  options.source = a.source;
  options.marginal = a.marginal;
  options.binomial = a.binomial;
  options.jobs = g.jobs;
  options.progress = [&](const std::string& message) { progress(g, message); };
  TextTable table;
  try {
    table = make_table(a.name, options, budget);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(g, g.format == "json" ? table.to_json() : table.to_csv());
  return 0;
}

// verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int n = 0;
  std::string mode;
};

int run_verify(const Globals& g, const VerifyArgs& a, Budget& budget) {
  SuiteOptions options;
  options.n = a.n;
  options.order = g.order;
  if (!a.mode.empty()) {
    try {
      options.mode = parse_decomposition_mode(a.mode);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) throw UsageError("unknown suite: " + a.suite);
  progress(g, "running suite " + a.suite);
  const auto reports = run_suite(a.suite, options, budget);

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  std::string text;
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["suite"] = a.suite;
    j["passed"] = passed;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["passed"] = r.passed();
      c["checks"] = r.checks;
      c["failures"] = r.failures;
      c["first_counterexample"] = r.passed() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.first_failure);
      c["notes"] = r.notes;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    text = j.dump(2) + "\n";
  } else {
    text = "check,passed,checks,failures,first_counterexample\n";
    for (const auto& r : reports) {
      text += csv_quote(r.name) + "," + (r.passed() ? "true" : "false") + "," + std::to_string(r.checks) + "," +
              std::to_string(r.failures) + "," + csv_quote(r.first_failure) + "\n";
    }
  }
  emit(g, text);
  for (const auto& r : reports) {
    for (const auto& note : r.notes) progress(g, note);
  }
  return passed ? 0 : kFailed;
}

// eval ----------------------------------------------------------------

struct EvalArgs {
  std::vector<std::string> words;
  std::string source = "formula";
};

int run_eval(const Globals& g, const EvalArgs& a, Budget& budget) {
  if (a.words.empty()) throw UsageError("eval needs an expression: a N K | b N K | intervals N | sync N | m-intervals M N");
  const std::string& expr = a.words[0];
  std::vector<std::int64_t> args;
  for (std::size_t i = 1; i < a.words.size(); ++i) args.push_back(parse_count(a.words[i]));
  auto arity = [&](std::size_t k) {
    if (args.size() != k) {
      throw UsageError(expr + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
    }
  };
  auto positive = [&](std::int64_t v, const char* what) {
    if (v <= 0) throw UsageError(std::string(what) + " must be positive");
  };
  if (a.source != "formula" && a.source != "enumeration") throw UsageError("unknown source: " + a.source);
  const bool enumerate = a.source == "enumeration";

  ExactInt value;
  std::string label;
  if (expr == "a" || expr == "b") {
    arity(2);
    positive(args[0], "n");
    label = expr + "(" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")";
    const auto n = static_cast<std::size_t>(args[0]);
    const auto k = static_cast<std::size_t>(args[1]);
    if (!enumerate) {
      value = expr == "a" ? a_formula(args[0], args[1]) : b_formula(args[0], args[1]);
    } else {
      const auto row = expr == "a" ? interval_histogram(n, budget, g.jobs) : diagonal_fvector(n, budget);
      value = k < row.size() ? row[k] : ExactInt(0);
    }
  } else if (expr == "intervals") {
    arity(1);
    positive(args[0], "n");
    label = "intervals(" + std::to_string(args[0]) + ")";
    if (enumerate) {
      value = count_intervals(static_cast<std::size_t>(args[0]), budget);
    } else {
      for (const auto& v : a_row(args[0])) value += v;
    }
  } else if (expr == "sync") {
    arity(1);
    positive(args[0], "n");
    label = "sync(" + std::to_string(args[0]) + ")";
    if (enumerate) {
      const auto row = interval_histogram(static_cast<std::size_t>(args[0]), budget, g.jobs);
      value = row.back();
    } else {
      value = synchronized_count(args[0]);
    }
  } else if (expr == "m-intervals") {
    arity(2);
    positive(args[0], "m");
    positive(args[1], "n");
    label = "m-intervals(" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")";
    value = enumerate ? m_tamari_interval_count(static_cast<int>(args[0]), static_cast<int>(args[1]), budget)
                      : m_tamari_interval_formula(args[0], args[1]);
  } else {
    throw UsageError("unknown expression: " + expr);
  }

  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["expr"] = label;
    j["value"] = to_decimal(value);
    emit(g, j.dump() + "\n");
  } else {
    emit(g, to_decimal(value) + "\n");
  }
  return 0;
}

// series --------------------------------------------------------------

struct SeriesArgs {
  std::string name;
  std::string solver = "newton";
};

int run_series(const Globals& g, const SeriesArgs& a, Budget& budget) {
  const int order = g.order > 0 ? g.order : 8;
  ZSeries s;
  if (a.name == "a") {
    if (a.solver == "newton") {
      s = newton_solve(PolynomialEquation::quartic(), order);
    } else if (a.solver == "formula") {
      s = a_series_from_formula(order);
    } else if (a.solver == "enumeration") {
      s = a_series_from_enumeration(order, budget);
    } else {
      throw UsageError("unknown solver: " + a.solver);
    }
  } else if (a.name == "b") {
    if (a.solver == "newton") {
      s = newton_solve(PolynomialEquation::quartic().shifted_z(1), order);
    } else if (a.solver == "formula") {
      s = b_series_from_formula(order);
    } else {
      throw UsageError("series b has solvers newton and formula");
    }
  } else {
    throw UsageError("unknown series: " + a.name + " (available: a, b)");
  }
  if (g.format == "json") {
    emit(g, to_json(s) + "\n");
    return 0;
  }
  std::string text = "n,k,coefficient\n";
  const auto rows = coefficient_rows(s);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      if (rows[n][k] != 0) text += std::to_string(n) + "," + std::to_string(k) + "," + to_decimal(rows[n][k]) + "\n";
    }
  }
  emit(g, text);
  return 0;
}

// faces ---------------------------------------------------------------

int run_faces(const Globals& g, int n, Budget& budget) {
  if (n <= 0) throw UsageError("faces needs a positive n");
  const auto size = static_cast<std::size_t>(n);
  if (g.format == "json") {
    emit(g, face_records_json(size, budget) + "\n");
    return 0;
  }
  const TreeIndex index(size, &budget);
  std::string text = "f,g,dim,internal,min-min,max-min,min-max,max-max\n";
  const DecompositionMode modes[] = {DecompositionMode::MinMin, DecompositionMode::MaxMin, DecompositionMode::MinMax,
                                     DecompositionMode::MaxMax};
  for_each_diagonal_face(index, budget, [&](const DiagonalFace& face, std::uint32_t, std::uint32_t) {
    text += csv_quote(to_string(face.f)) + "," + csv_quote(to_string(face.g)) + "," + std::to_string(face.dim) + "," +
            (is_internal(face.f, face.g) ? "true" : "false");
    for (auto mode : modes) {
      const auto [lo, hi] = assigned_interval(face, mode);
      text += "," + csv_quote(to_string(lo) + " <= " + to_string(hi));
    }
    text += "\n";
  });
  emit(g, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamari intervals, diagonal faces of the associahedron and their generating functions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  try {
    g.budget = Budget::default_limit();
  } catch (const std::invalid_argument& e) {
    std::cerr << "tamari: " << e.what() << "\n";
    return kUsage;
  }
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--budget", g.budget, "Maximum number of enumerated elements (default: TAMARI_BUDGET or 2e8)")
      ->check(CLI::PositiveNumber);
  app.add_option("--order", g.order, "Truncation order of series")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Write the result to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads for interval enumeration")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "No progress messages");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a count table");
  table_cmd->add_option("name", table.name, "Table")->required()->check(CLI::IsMember(table_names()));
  table_cmd->add_option("--n", table.n, "Largest n")->check(CLI::PositiveNumber);
  table_cmd->add_option("--m", table.m, "Largest m")->check(CLI::PositiveNumber);
  table_cmd->add_option("--source", table.source, "formula, enumeration, faces or newton");
  table_cmd->add_flag("--marginal", table.marginal, "Single-block marginal (refined-ell, refined-pq)");
  table_cmd->add_flag("--binomial", table.binomial, "Binomial transform in k (refined-ell, refined-pq)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite; exit 4 if any check fails");
  verify_cmd->add_option("suite", verify.suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--n", verify.n, "Size bound")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", verify.mode, "Decomposition rule: min-min, max-min, min-max or max-max");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single count");
  eval_cmd->add_option("expr", eval.words, "a N K | b N K | intervals N | sync N | m-intervals M N")->required();
  eval_cmd->add_option("--source", eval.source, "formula or enumeration");

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Print the coefficients of A(t, z) or B(t, z)");
  series_cmd->add_option("name", series.name, "a or b")->required();
  series_cmd->add_option("--solver", series.solver, "newton, formula or enumeration");

  int faces_n = 0;
  auto* faces_cmd = app.add_subcommand("faces", "List the faces of the diagonal with their assigned intervals");
  faces_cmd->add_option("n", faces_n, "Number of nodes")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    Budget budget{g.budget, 0};
    if (table_cmd->parsed()) return run_table(g, table, budget);
    if (verify_cmd->parsed()) return run_verify(g, verify, budget);
    if (eval_cmd->parsed()) return run_eval(g, eval, budget);
    if (series_cmd->parsed()) return run_series(g, series, budget);
    if (faces_cmd->parsed()) return run_faces(g, faces_n, budget);
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "tamari: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "tamari: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "tamari: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "tamari: " << e.what() << "\n";
    return kOther;
  }
}
