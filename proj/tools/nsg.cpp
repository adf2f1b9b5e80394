// nsg: numerical semigroup invariants, ideal calculus and Gorenstein-hierarchy
// classification from the command line.
//
// Exit codes: 0 ok, 1 usage/parse, 2 not numerical, 3 regular semigroup,
// 4 verification failure, 5 internal.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/error.hpp"
#include "nsg/expression.hpp"
#include "nsg/report_json.hpp"
#include "nsg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotNumerical = 2;
constexpr int kExitRegular = 3;
constexpr int kExitVerification = 4;
constexpr int kExitInternal = 5;

constexpr nsg::Int kCensusGenusCap = 24;

int exit_code_for(nsg::ErrorKind kind) {
  switch (kind) {
    case nsg::ErrorKind::NotNumerical: return kExitNotNumerical;
    case nsg::ErrorKind::RegularSemigroup: return kExitRegular;
    case nsg::ErrorKind::TheoremViolation: return kExitVerification;
    case nsg::ErrorKind::Parse:
    case nsg::ErrorKind::NotAMember:
    case nsg::ErrorKind::FrobeniusCapExceeded:
    case nsg::ErrorKind::CapExceeded: return kExitUsage;
    case nsg::ErrorKind::AmbientMismatch:
    case nsg::ErrorKind::ReductionCapExceeded: return kExitInternal;
  }
  return kExitInternal;
}

nsg::SemigroupPtr build(const std::vector<nsg::Int>& gens) {
  return nsg::share(nsg::NumericalSemigroup::from_generators(gens));
}

void emit(const std::string& text, const std::string& out_file) {
  std::cout << text;
  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_file + " for writing");
    out << text;
  }
}

std::string describe_ideal(const nsg::RelativeIdeal& e) {
  if (e.is_interval()) {
    if (e.min() == 0) return "{0,1,2,…} = ℕ (offset 0, no gaps)";
    return "[" + std::to_string(e.min()) + ",∞) (offset " + std::to_string(e.min()) +
           ", no gaps)";
  }
  if (e == nsg::unit_ideal(e.ambient())) return "H = " + nsg::format_ideal(e);
  return nsg::format_ideal(e);
}

int run_analyze(const std::vector<nsg::Int>& gens, bool json) {
  const nsg::ClassificationReport r = nsg::check_theorem_equivalence(build(gens));
  std::cout << (json ? nsg::dump(nsg::to_json(r)) : nsg::format_report(r));
  return kExitOk;
}

int run_census(nsg::Int g_max, bool json, bool parallel, const std::string& out_file) {
  if (g_max < 1 || g_max > kCensusGenusCap) {
    std::cerr << "census: genus must be in [1, " << kCensusGenusCap << "]\n";
    return kExitUsage;
  }
  const auto rows = parallel ? nsg::census_parallel(g_max) : nsg::census_serial(g_max);
  emit(json ? nsg::dump(nsg::to_json(rows)) : nsg::format_census(rows), out_file);
  bool violated = false;
  for (const auto& r : rows) {
    for (const auto& d : r.violation_details) {
      std::cerr << "violation: " << d << '\n';
      violated = true;
    }
  }
  return violated ? kExitVerification : kExitOk;
}

int run_verify(const std::vector<nsg::Int>& gens, nsg::Int genus_max, const std::string& checks,
               bool json, bool parallel) {
  if (gens.empty() == (genus_max < 0)) {
    std::cerr << "verify: give either generators or --genus-max\n";
    return kExitUsage;
  }
  const auto selected = checks.empty() ? nsg::all_checks() : nsg::parse_checks(checks);
  std::vector<nsg::NumericalSemigroup> subjects;
  if (!gens.empty()) {
    auto h = nsg::NumericalSemigroup::from_generators(gens);
    nsg::require_singular(h);
    subjects.push_back(std::move(h));
  } else {
    if (genus_max < 1 || genus_max > kCensusGenusCap) {
      std::cerr << "verify: --genus-max must be in [1, " << kCensusGenusCap << "]\n";
      return kExitUsage;
    }
    for (nsg::Int g = 1; g <= genus_max; ++g) {
      auto layer = nsg::semigroups_of_genus(g);
      std::move(layer.begin(), layer.end(), std::back_inserter(subjects));
    }
  }
  const nsg::VerifyReport report = nsg::verify_semigroups(subjects, selected, parallel);
  std::cout << (json ? nsg::dump(nsg::to_json(report)) : nsg::format_verify(report));
  if (!report.ok()) {
    for (const auto& t : report.tallies) {
      for (const auto& f : t.failures) std::cerr << nsg::to_string(t.check) << ": " << f << '\n';
    }
    return kExitVerification;
  }
  return kExitOk;
}

int run_ideal(const std::vector<std::string>& args) {
  if (args.size() < 2) {
    std::cerr << "ideal: expected generators followed by an expression\n";
    return kExitUsage;
  }
  std::vector<nsg::Int> gens;
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    try {
      std::size_t used = 0;
      gens.push_back(std::stoll(args[i], &used));
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
    } catch (const std::exception&) {
      std::cerr << "ideal: '" << args[i] << "' is not an integer generator\n";
      return kExitUsage;
    }
  }
  const auto expr = nsg::IdealExpression::parse(args.back());
  const auto h = build(gens);
  std::cout << describe_ideal(expr.evaluate(h)) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups: invariants, relative ideals, blowups and classification"};
  app.require_subcommand(1);

  std::vector<nsg::Int> gens;
  bool json = false;
  bool parallel = false;
  std::string out_file;
  std::string checks;
  nsg::Int genus_max = -1;
  nsg::Int g_max = 0;
  std::vector<std::string> ideal_args;

  auto* analyze = app.add_subcommand("analyze", "Classify one semigroup");
  analyze->add_option("generators", gens, "Generators")->required();
  analyze->add_flag("--json", json, "Emit JSON");

  auto* census = app.add_subcommand("census", "Class counts per genus over the semigroup tree");
  census->add_option("g_max", g_max, "Largest genus")->required();
  census->add_flag("--json", json, "Emit JSON");
  census->add_flag("--parallel", parallel, "Use OpenMP workers");
  census->add_option("--out", out_file, "Also write the output to FILE");

  auto* verify = app.add_subcommand("verify", "Check the theorems on one semigroup or a genus sweep");
  verify->add_option("generators", gens, "Generators");
  verify->add_option("--genus-max", genus_max, "Sweep every semigroup of genus 1..G");
  verify->add_option("--checks", checks,
                     "Comma list of: equivalence,chain,ffg,lipman,corollary,ulrich");
  verify->add_flag("--json", json, "Emit JSON");
  verify->add_flag("--parallel", parallel, "Use OpenMP workers");

  auto* ideal = app.add_subcommand("ideal", "Evaluate an ideal expression, e.g. ideal 4 5 11 \"tr(K)\"");
  ideal->add_option("args", ideal_args, "Generators followed by the expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(gens, json);
    if (*census) return run_census(g_max, json, parallel, out_file);
    if (*verify) return run_verify(gens, genus_max, checks, json, parallel);
    if (*ideal) return run_ideal(ideal_args);
  } catch (const nsg::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
