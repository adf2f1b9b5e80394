#include "nsg/report_json.hpp"

#include <iomanip>
#include <sstream>

namespace nsg {

using nlohmann::json;

json to_json(const RelativeIdeal& e) {
  json window = json::array();
  for (auto bit : e.window()) window.push_back(bit ? 1 : 0);
  return json{{"offset", e.offset()}, {"window", window}, {"tail_from", e.tail_from()}};
}

json to_json(const ClassificationReport& r) {
  const NumericalSemigroup& h = *r.semigroup;
  json j;
  j["generators"] = h.min_generators();
  j["invariants"] = {
      {"frobenius", r.frobenius},
      {"genus", r.genus},
      {"multiplicity", r.multiplicity},
      {"embedding_dimension", r.embedding_dimension},
      {"type", r.type},
      {"canonical_reduction_number", r.canonical_reduction_number},
      {"quasi_frobenius", h.quasi_frobenius()},
  };
  j["classes"] = {
      {"gorenstein", r.is_gorenstein},
      {"almost_gorenstein", r.is_almost_gorenstein},
      {"nearly_gorenstein", r.is_nearly_gorenstein},
      {"far_flung_gorenstein", r.is_far_flung},
      {"mcc", r.has_mcc},
  };
  j["witnesses"] = {
      {"canonical", to_json(r.canonical)},
      {"blowup_conductor", to_json(r.blowup_conductor)},
      {"trace", to_json(r.trace)},
      {"conductor", to_json(r.conductor)},
      {"maximal_ideal", to_json(r.maximal)},
      {"blowup_generators", r.blowup.min_generators()},
      {"power_witness_n", r.power_witness ? json(*r.power_witness) : json(nullptr)},
  };
  j["votes"] = {
      {"pf", r.votes.pf},
      {"blowup", r.votes.blowup},
      {"conductor", r.votes.conductor},
      {"power", r.votes.power},
  };
  return j;
}

json to_json(const CensusRow& row) {
  return json{{"genus", row.genus},
              {"total", row.total},
              {"gorenstein", row.gorenstein},
              {"almost_gorenstein", row.almost},
              {"nearly_gorenstein", row.nearly},
              {"far_flung_gorenstein", row.far_flung},
              {"mcc", row.mcc},
              {"mcc_not_far_flung", row.mcc_not_far_flung},
              {"violations", row.violations},
              {"violation_details", row.violation_details}};
}

json to_json(const std::vector<CensusRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

json to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& t : report.tallies) {
    checks.push_back({{"check", to_string(t.check)},
                      {"pass", t.ok()},
                      {"passed", t.passed},
                      {"failed", t.failed},
                      {"vacuous", t.vacuous},
                      {"skipped", t.skipped},
                      {"failures", t.failures}});
  }
  return json{{"semigroups", report.semigroups}, {"ok", report.ok()}, {"checks", checks}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_report(const ClassificationReport& r) {
  const NumericalSemigroup& h = *r.semigroup;
  std::ostringstream os;
  os << "semigroup: " << h.to_string() << '\n';
  os << "frobenius: " << r.frobenius << "  genus: " << r.genus
     << "  multiplicity: " << r.multiplicity
     << "  embedding dimension: " << r.embedding_dimension << "  type: " << r.type << '\n';
  os << "quasi-frobenius: {";
  const auto qf = h.quasi_frobenius();
  for (std::size_t i = 0; i < qf.size(); ++i) os << (i ? "," : "") << qf[i];
  os << "}\n";
  os << "canonical reduction number: " << r.canonical_reduction_number << '\n';
  os << "gorenstein: " << yes_no(r.is_gorenstein) << '\n';
  os << "almost gorenstein: " << yes_no(r.is_almost_gorenstein) << '\n';
  os << "nearly gorenstein: " << yes_no(r.is_nearly_gorenstein) << '\n';
  os << "far-flung gorenstein: " << yes_no(r.is_far_flung) << '\n';
  os << "mcc: " << yes_no(r.has_mcc) << '\n';
  os << "K     = " << format_ideal(r.canonical) << '\n';
  os << "b(K)  = " << format_ideal(r.blowup_conductor) << '\n';
  os << "tr(K) = " << format_ideal(r.trace) << '\n';
  os << "C     = " << format_ideal(r.conductor) << '\n';
  os << "M     = " << format_ideal(r.maximal) << '\n';
  os << "B(K)  = " << r.blowup.to_string() << '\n';
  os << "least n with nK ~ C: ";
  if (r.power_witness) {
    os << *r.power_witness;
  } else {
    os << "none";
  }
  os << '\n';
  os << "votes: pf=" << yes_no(r.votes.pf) << " blowup=" << yes_no(r.votes.blowup)
     << " conductor=" << yes_no(r.votes.conductor) << " power=" << yes_no(r.votes.power)
     << '\n';
  return os.str();
}

std::string format_census(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << std::setw(6) << "genus" << std::setw(10) << "total" << std::setw(12) << "gorenstein"
     << std::setw(8) << "almost" << std::setw(8) << "nearly" << std::setw(11) << "far_flung"
     << std::setw(8) << "mcc" << std::setw(10) << "mcc_only" << std::setw(12) << "violations"
     << '\n';
  for (const auto& r : rows) {
    os << std::setw(6) << r.genus << std::setw(10) << r.total << std::setw(12) << r.gorenstein
       << std::setw(8) << r.almost << std::setw(8) << r.nearly << std::setw(11) << r.far_flung
       << std::setw(8) << r.mcc << std::setw(10) << r.mcc_not_far_flung << std::setw(12)
       << r.violations << '\n';
  }
  for (const auto& r : rows) {
    for (const auto& d : r.violation_details) os << "violation: " << d << '\n';
  }
  return os.str();
}

std::string format_verify(const VerifyReport& report) {
  std::ostringstream os;
  os << "semigroups checked: " << report.semigroups << '\n';
  for (const auto& t : report.tallies) {
    os << to_string(t.check) << ": " << (t.ok() ? "pass" : "FAIL") << " (" << t.passed
       << " passed, " << t.failed << " failed, " << t.vacuous << " vacuous, " << t.skipped
       << " skipped)\n";
    for (const auto& f : t.failures) os << "  " << f << '\n';
  }
  return os.str();
}

}  // namespace nsg
