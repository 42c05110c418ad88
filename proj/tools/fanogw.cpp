// fanogw: command-line front end for the counting-matrix pipeline.
//
// exit codes: 0 success, 1 verification mismatch, 2 invalid input,
// 3 internal or math error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fanogw/pipeline.hpp"

namespace {

using namespace fanogw;

struct Options {
  std::size_t order = 7;
  std::string format = "text";
  std::string variety = "V10";
  std::optional<std::string> lambda;
  std::optional<std::string> periods;
  long deg = 0;
  std::string target = "all";
  std::optional<std::string> corrupt;
};

PeriodVector parse_periods(const std::string& csv) {
  PeriodVector v;
  std::stringstream ss(csv);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= v.values.size()) throw InvalidInput("--periods takes exactly five values d2..d6");
    v.values[i++] = Rational::parse(item);
  }
  if (i != v.values.size()) throw InvalidInput("--periods takes exactly five values d2..d6");
  return v;
}

VarietyConfig variety(const Options& o) {
  return detail::run_stage("config", [&] { return resolve_variety(o.variety); });
}

// Stages shared by the subcommands that need a recovered matrix.
PipelineReport full_report(const Options& o) {
  PipelineReport r = run_pipeline(variety(o), std::max<std::size_t>(o.order, 5));
  if (!r.matrix) throw StageError("solver", InvalidInput(r.config.name + " is not an index-1 threefold"));
  return r;
}

int emit(const ordered_json& j, const Options& o) {
  std::cout << serialize(j, o.format);
  return 0;
}

int run(const std::string& cmd, const Options& o) {
  if (o.format != "json" && o.format != "text") throw InvalidInput("--format must be json or text");
  const int d_max = static_cast<int>(o.order) - 1;
  if (o.order < 1) throw InvalidInput("--order must be >= 1");

  if (cmd == "iseries") {
    VarietyConfig cfg = variety(o);
    HSeriesPair pair = detail::run_stage("grassmann", [&] { return ambient_iseries(cfg.spec.ambient, d_max); });
    return emit({{"ambient", cfg.spec.ambient.to_string()}, {"iseries", to_json(pair)}}, o);
  }
  if (cmd == "lefschetz") {
    VarietyConfig cfg = variety(o);
    HSeriesPair amb = detail::run_stage("grassmann", [&] { return ambient_iseries(cfg.spec.ambient, std::max(d_max, 1)); });
    return detail::run_stage("lefschetz", [&] {
      Rational alpha = lefschetz_shift(cfg.spec, amb.c0);
      HSeriesPair y = quantum_lefschetz(amb, cfg.spec, d_max);
      return emit({{"variety", cfg.name}, {"shift", to_json(alpha)}, {"iseries", to_json(y)}}, o);
    });
  }
  if (cmd == "matrix") {
    PipelineReport r = full_report(o);
    return emit({{"variety", r.config.name}, {"deg", r.matrix->deg()}, {"matrix", to_json(*r.matrix)}}, o);
  }
  if (cmd == "periods") {
    PipelineReport r = full_report(o);
    return emit({{"variety", r.config.name},
                 {"periods", to_json(*r.periods)},
                 {"discriminant", to_json(*r.discriminant)}},
                o);
  }
  if (cmd == "invert") {
    PeriodVector v;
    long deg = o.deg;
    if (o.periods) {
      v = parse_periods(*o.periods);
      if (deg <= 0) throw InvalidInput("--deg is required with --periods");
    } else {
      PipelineReport r = full_report(o);
      v = *r.periods;
      if (deg <= 0) deg = r.matrix->deg();
    }
    CountingMatrix m = detail::run_stage("solver", [&] { return invert_periods(v, deg); });
    return emit({{"periods", to_json(v)}, {"discriminant", to_json(discriminant(v))}, {"matrix", to_json(m)}}, o);
  }
  if (cmd == "d3") {
    PipelineReport r = full_report(o);
    Rational lambda = o.lambda ? Rational::parse(*o.lambda) : r.shift;
    D3Summary s = detail::run_stage("d3", [&] {
      DifferentialOperator op = d3_operator(*r.matrix, lambda);
      return D3Summary{lambda, op, frobenius_solve(op, o.order)};
    });
    return emit({{"variety", r.config.name}, {"d3", to_json(s)}}, o);
  }
  if (cmd == "modularity") {
    PipelineReport r = full_report(o);
    Rational alpha = o.lambda ? Rational::parse(*o.lambda) : r.shift;
    ModularityReport m = detail::run_stage("d3", [&] { return modularity_report(*r.matrix, alpha, o.order); });
    return emit({{"variety", r.config.name}, {"modularity", to_json(m)}}, o);
  }
  if (cmd == "report") {
    std::cout << serialize_report(run_pipeline(variety(o), o.order), o.format);
    return 0;
  }
  if (cmd == "verify") {
    VerifyResult v = verify_theorem(o.target, o.corrupt);
    std::cout << serialize(to_json(v), o.format);
    for (const auto& row : v.rows)
      if (!row.ok) std::cerr << "mismatch: " << row.label << " printed " << row.printed.to_string() << " derived "
                             << row.derived.to_string() << "\n";
    return v.exit_code();
  }
  throw InvalidInput("unknown command " + cmd);
}

int exit_code_for(const Error& e) {
  const std::string n = e.name();
  return n == "InvalidInput" || n == "NotFano" || n == "InvalidLevel" ? 2 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting matrices and D3 operators of Fano threefolds in exact arithmetic"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_variety) {
    sub->add_option("--order", o.order, "number of q-coefficients (default 7)")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    if (with_variety) sub->add_option("--variety", o.variety, "catalog name (V10, V14) or JSON config path");
  };

  std::vector<std::pair<std::string, std::string>> commands{
      {"iseries", "ambient Grassmannian I-series modulo H^2"},
      {"lefschetz", "complete-intersection I-series and shift"},
      {"matrix", "recovered counting matrix"},
      {"periods", "period vector d2..d6 and discriminant"},
      {"invert", "counting matrix from a period vector"},
      {"d3", "D3 operator and normalized power-series solution"},
      {"modularity", "comparison of D3 solutions with candidate series"},
      {"report", "full pipeline report"},
      {"verify", "recompute V10/V14 and compare with printed values"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, name != "verify");
    if (name == "d3" || name == "modularity") sub->add_option("--lambda", o.lambda, "rational P/Q");
    if (name == "invert") {
      sub->add_option("--periods", o.periods, "d2,d3,d4,d5,d6 as rationals");
      sub->add_option("--deg", o.deg, "anticanonical degree");
    }
    if (name == "verify") {
      sub->add_option("target", o.target, "V10, V14 or all");
      sub->add_option("--corrupt", o.corrupt)->group("");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return run(cmd, o);
  } catch (const StageError& e) {
    std::cerr << "error [" << e.stage() << "] " << e.name() << ": " << e.detail() << "\n";
    return exit_code_for(e);
  } catch (const Error& e) {
    std::cerr << "error [" << cmd << "] " << e.name() << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error [" << cmd << "] internal: " << e.what() << "\n";
    return 3;
  }
}
