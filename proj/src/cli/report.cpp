#include "sgp/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace sgp::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].dump();
    return out;
  }
  return v.dump();
}

}  // namespace

bool ReportDocument::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

Json ReportDocument::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["values"] = values;
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    if (!c.witness.empty()) item["witness"] = c.witness;
    if (!c.detail.empty()) item["detail"] = c.detail;
    j["checks"].push_back(std::move(item));
  }
  j["timing_ms"] = timing_ms;
  j["schema_version"] = kSchemaVersion;
  return j;
}

ReportDocument ReportDocument::from_json(const Json& j) {
  ReportDocument doc;
  doc.command = j.at("command").get<std::string>();
  doc.params = j.value("params", Json::object());
  doc.values = j.value("values", Json::object());
  for (const auto& item : j.at("checks")) {
    doc.checks.push_back({item.at("name").get<std::string>(), item.at("pass").get<bool>(),
                          item.value("witness", std::string{}), item.value("detail", std::string{})});
  }
  doc.timing_ms = j.at("timing_ms").get<std::int64_t>();
  return doc;
}

std::string ReportDocument::to_text() const {
  std::ostringstream os;
  os << command << '\n';
  for (const auto& [key, v] : params.items()) os << "  " << key << " = " << scalar_text(v) << '\n';
  for (const auto& [key, v] : values.items()) os << key << ": " << scalar_text(v) << '\n';
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    if (!c.witness.empty()) os << ": " << c.witness;
    os << '\n';
  }
  if (!checks.empty()) os << (passed() ? "all checks passed" : "some checks FAILED") << '\n';
  os << "time: " << timing_ms << " ms\n";
  return os.str();
}

std::string ReportDocument::checks_csv() const {
  std::ostringstream os;
  os << "name,pass,witness,detail\n";
  for (const auto& c : checks) {
    os << csv_field(c.name) << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.witness) << ','
       << csv_field(c.detail) << '\n';
  }
  return os.str();
}

}  // namespace sgp::cli
