#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "report.hpp"
#include "tanglekit/errors.hpp"

namespace {

std::string error_type(const std::exception& e) {
  using namespace tanglekit;
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const MalformedDiagram*>(&e)) return "MalformedDiagram";
  if (dynamic_cast<const InvalidModulus*>(&e)) return "InvalidModulus";
  if (dynamic_cast<const NotAGroup*>(&e)) return "NotAGroup";
  if (dynamic_cast<const InvalidMoveSite*>(&e)) return "InvalidMoveSite";
  if (dynamic_cast<const UnsupportedStrandCount*>(&e)) return "UnsupportedStrandCount";
  if (dynamic_cast<const TooLarge*>(&e)) return "TooLarge";
  if (dynamic_cast<const EnumerationFailure*>(&e)) return "EnumerationFailure";
  if (dynamic_cast<const CorpusError*>(&e)) return "CorpusError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "InternalError";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tanglekit::cli;
  CLI::App app{"Link invariants for move-equivalence questions: colorings, Kei, 3-braid quotients, tangles, Jones."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--timing", timing, "include wall time in the report");

  Runner selected;
  add_commands(app, selected);
  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (const auto* sub = &app; !sub->get_subcommands().empty();) {
    sub = sub->get_subcommands().front();
    command += (command.empty() ? "" : " ") + sub->get_name();
  }

  auto emit = [&](const Json& j) {
    if (format == "text") {
      std::cout << render_text(j);
    } else {
      std::cout << j.dump(2) << '\n';
    }
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    const Report report = selected();
    std::optional<double> ms;
    if (timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report.to_json(ms));
    return report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    emit(error_json(command, error_type(e), e.what()));
    return 2;
  }
}
