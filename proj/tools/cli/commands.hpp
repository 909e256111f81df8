#pragma once

#include <functional>
#include <string>

#include "CLI11.hpp"
#include "report.hpp"

namespace tanglekit::cli {

using Runner = std::function<Report()>;

/// Registers every subcommand; the parsed leaf stores its runner in `selected`.
void add_commands(CLI::App& app, Runner& selected);

}  // namespace tanglekit::cli
