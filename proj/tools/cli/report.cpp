#include "report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tanglekit::cli {

void Report::check(const std::string& name, bool passed, const std::string& detail) {
  Json a = {{"name", name}, {"passed", passed}};
  if (!detail.empty()) a["detail"] = detail;
  assertions.push_back(std::move(a));
}

bool Report::passed() const {
  for (const auto& a : assertions) {
    if (!a["passed"].get<bool>()) return false;
  }
  return true;
}

Json Report::to_json(std::optional<double> wall_ms) const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["assertions"] = assertions;
  j["passed"] = passed();
  if (wall_ms) j["wall_time_ms"] = *wall_ms;
  return j;
}

Json error_json(const std::string& command, const std::string& type, const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["error"] = {{"type", type}, {"message", message}};
  return j;
}

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value) || (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar))) {
        out << pad << key << ": ";
        if (value.is_array()) {
          out << '[';
          bool first = true;
          for (const auto& v : value) {
            out << (first ? "" : ", ") << scalar(v);
            first = false;
          }
          out << "]\n";
        } else {
          out << scalar(value) << '\n';
        }
      } else {
        out << pad << key << ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out << pad << "- " << scalar(v) << '\n';
      } else {
        out << pad << "-\n";
        render(v, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace tanglekit::cli
