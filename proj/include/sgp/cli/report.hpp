#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgp/families.hpp"

namespace sgp::cli {

using Json = nlohmann::ordered_json;

/// Machine-readable result of one CLI invocation. Field order is fixed, so
/// identical inputs serialize identically apart from timing_ms.
struct ReportDocument {
  static constexpr int kSchemaVersion = 1;

  std::string command;
  Json params = Json::object();
  Json values = Json::object();
  std::vector<families::CheckResult> checks;
  std::int64_t timing_ms = 0;

  bool passed() const;
  Json to_json() const;
  static ReportDocument from_json(const Json& j);
  std::string to_text() const;
  /// name,pass,witness,detail
  std::string checks_csv() const;
};

}  // namespace sgp::cli
