#pragma once

#include <string>
#include <string_view>

#include "report.hpp"
#include "tanglekit/link_diagram.hpp"

namespace tanglekit::cli {

struct NamedDiagram {
  std::string name;
  LinkDiagram diagram;
};

/// Accepts, in order: a builtin corpus name or alias ("4_1", "trefoil"),
/// `U<m>` for the m-component unlink, `braid:<strands>:<word>`, a path to a
/// PD file, or inline PD text ("X 1 4 2 5 / X 3 6 4 1 / ...").
NamedDiagram resolve_diagram(std::string_view input);

/// {name, crossings, arcs, components}.
Json diagram_summary(const NamedDiagram& d);

/// Reads a whole file; CorpusError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace tanglekit::cli
