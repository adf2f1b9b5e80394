#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/classify.hpp"
#include "nsg/enumeration.hpp"
#include "nsg/ideal.hpp"
#include "nsg/verify.hpp"

namespace nsg {

// Ideals serialize as {"offset": mu, "window": [bits], "tail_from": c}.
nlohmann::json to_json(const RelativeIdeal& e);
/// Top-level keys: generators, invariants, classes, witnesses, votes.
nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const CensusRow& row);
nlohmann::json to_json(const std::vector<CensusRow>& rows);
nlohmann::json to_json(const VerifyReport& report);

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const nlohmann::json& j);

/// Human-readable renderings used by the CLI.
std::string format_report(const ClassificationReport& r);
std::string format_census(const std::vector<CensusRow>& rows);
std::string format_verify(const VerifyReport& report);

}  // namespace nsg
