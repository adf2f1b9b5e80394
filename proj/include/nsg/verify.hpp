#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsg/enumeration.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class Check { Equivalence, Chain, Ffg, Lipman, Corollary, Ulrich };

const char* to_string(Check c);
/// Comma-separated check names; throws Error(Parse) on an unknown name.
std::vector<Check> parse_checks(std::string_view list);
std::vector<Check> all_checks();

struct CheckTally {
  Check check = Check::Equivalence;
  Int passed = 0;
  Int failed = 0;
  Int vacuous = 0;
  Int skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0; }
};

struct VerifyReport {
  Int semigroups = 0;
  std::vector<CheckTally> tallies;

  bool ok() const;
};

/// Runs the selected checks on each semigroup. The parallel path evaluates
/// semigroups on OpenMP threads and folds in input order, so both paths
/// produce identical reports.
VerifyReport verify_semigroups(std::span<const NumericalSemigroup> semigroups,
                               std::span<const Check> checks, bool parallel = false,
                               Int ulrich_cap = kDefaultIdealFrobeniusCap);

}  // namespace nsg
