#pragma once

#include <optional>
#include <string>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "tanglekit/bigint.hpp"

namespace tanglekit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json assertions = Json::array();

  void check(const std::string& name, bool passed, const std::string& detail = {});
  [[nodiscard]] bool passed() const;
  [[nodiscard]] Json to_json(std::optional<double> wall_ms) const;
};

Json error_json(const std::string& command, const std::string& type, const std::string& message);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json big(const BigInt& v);

/// Indented key/value rendering of a report.
std::string render_text(const Json& j);

}  // namespace tanglekit::cli
