#include "diagram_input.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tanglekit/braid_word.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NamedDiagram resolve_diagram(std::string_view input) {
  if (auto e = find_builtin(input)) return {e->name, e->diagram};
  if (input.size() >= 2 && input[0] == 'U') {
    int m = 0;
    const auto [ptr, ec] = std::from_chars(input.data() + 1, input.data() + input.size(), m);
    if (ec == std::errc() && ptr == input.data() + input.size() && m >= 1) {
      return {std::string(input), LinkDiagram::unlink(m)};
    }
  }
  if (input.rfind("braid:", 0) == 0) {
    const auto rest = input.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("braid input is braid:<strands>:<word>");
    int strands = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + colon, strands);
    if (ec != std::errc() || ptr != rest.data() + colon) throw ParseError("bad strand count in '" + std::string(input) + "'");
    return {std::string(input), braid_closure(parse_braid(rest.substr(colon + 1), strands))};
  }
  const std::string path(input);
  std::error_code ec;
  if (std::filesystem::is_regular_file(path, ec)) return {path, parse_pd(read_file(path))};
  return {"inline", parse_pd(input)};
}

Json diagram_summary(const NamedDiagram& d) {
  return {{"name", d.name},
          {"crossings", d.diagram.crossing_count()},
          {"arcs", d.diagram.arc_count()},
          {"components", d.diagram.component_count()}};
}

}  // namespace tanglekit::cli
