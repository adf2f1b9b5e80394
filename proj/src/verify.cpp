#include "nsg/verify.hpp"

#include <algorithm>
#include <optional>

#include "nsg/classify.hpp"
#include "nsg/error.hpp"

namespace nsg {

namespace {

constexpr Check kAll[] = {Check::Equivalence, Check::Chain,     Check::Ffg,
                          Check::Lipman,      Check::Corollary, Check::Ulrich};

enum class Status { Pass, Fail, Vacuous, Skipped };

struct Verdict {
  Status status = Status::Pass;
  std::string detail;
};

Verdict from_outcome(const CheckOutcome& c) {
  if (!c.holds) return {Status::Fail, c.detail};
  return {c.vacuous ? Status::Vacuous : Status::Pass, {}};
}

std::vector<Verdict> run_one(const NumericalSemigroup& h, std::span<const Check> checks,
                             Int ulrich_cap) {
  const SemigroupPtr p = share(h);
  std::optional<ClassificationReport> report;
  std::string classify_error;
  if (h.is_naturals()) {
    classify_error = "regular semigroup";
  } else {
    try {
      report = check_theorem_equivalence(p);
    } catch (const Error& e) {
      classify_error = e.what();
    }
  }

  std::vector<Verdict> out;
  for (Check c : checks) {
    if (h.is_naturals()) {
      out.push_back({Status::Skipped, {}});
      continue;
    }
    if (c == Check::Ulrich) {
      if (h.frobenius() > ulrich_cap) {
        out.push_back({Status::Skipped, {}});
        continue;
      }
      const UlrichCheck u = verify_ulrich_classification(p, ulrich_cap);
      if (u.agrees()) {
        out.push_back({Status::Pass, {}});
      } else {
        std::string d = "mcc=" + std::string(u.mcc ? "true" : "false") +
                        " but all K-Ulrich ideals isomorphic to N is " +
                        (u.all_ulrich_are_naturals ? "true" : "false");
        if (u.witness) d += "; witness " + format_ideal(*u.witness);
        out.push_back({Status::Fail, d});
      }
      continue;
    }
    if (!report) {
      out.push_back({Status::Fail, classify_error});
      continue;
    }
    switch (c) {
      case Check::Equivalence: out.push_back({Status::Pass, {}}); break;
      case Check::Chain: out.push_back(from_outcome(check_chain(*report))); break;
      case Check::Ffg: out.push_back(from_outcome(check_ffg_proposition(*report))); break;
      case Check::Lipman: out.push_back(from_outcome(check_lipman_inheritance(*report))); break;
      case Check::Corollary: out.push_back(from_outcome(check_min_mult_corollary(*report))); break;
      case Check::Ulrich: break;
    }
  }
  return out;
}

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::Equivalence: return "equivalence";
    case Check::Chain: return "chain";
    case Check::Ffg: return "ffg";
    case Check::Lipman: return "lipman";
    case Check::Corollary: return "corollary";
    case Check::Ulrich: return "ulrich";
  }
  return "?";
}

std::vector<Check> all_checks() { return {std::begin(kAll), std::end(kAll)}; }

std::vector<Check> parse_checks(std::string_view list) {
  std::vector<Check> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    const std::string_view name = list.substr(start, end - start);
    const auto it = std::find_if(std::begin(kAll), std::end(kAll),
                                 [&](Check c) { return name == to_string(c); });
    if (it == std::end(kAll)) {
      throw Error(ErrorKind::Parse, "unknown check '" + std::string(name) + "'");
    }
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    start = end + 1;
  }
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return t.ok(); });
}

VerifyReport verify_semigroups(std::span<const NumericalSemigroup> semigroups,
                               std::span<const Check> checks, bool parallel,
                               Int ulrich_cap) {
  std::vector<std::vector<Verdict>> verdicts(semigroups.size());
  const auto n = static_cast<std::ptrdiff_t>(semigroups.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      verdicts[k] = run_one(semigroups[k], checks, ulrich_cap);
    }
  } else {
    for (std::size_t k = 0; k < semigroups.size(); ++k) {
      verdicts[k] = run_one(semigroups[k], checks, ulrich_cap);
    }
  }

  VerifyReport report;
  report.semigroups = n;
  for (Check c : checks) {
    CheckTally t;
    t.check = c;
    report.tallies.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < semigroups.size(); ++k) {
    for (std::size_t j = 0; j < checks.size(); ++j) {
      CheckTally& t = report.tallies[j];
      const Verdict& v = verdicts[k][j];
      switch (v.status) {
        case Status::Pass: ++t.passed; break;
        case Status::Vacuous: ++t.vacuous; break;
        case Status::Skipped: ++t.skipped; break;
        case Status::Fail:
          ++t.failed;
          t.failures.push_back(semigroups[k].to_string() + ": " + v.detail);
          break;
      }
    }
  }
  return report;
}

}  // namespace nsg
