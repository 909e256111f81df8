#include "tanglekit/link_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "tanglekit/errors.hpp"
#include "tanglekit/union_find.hpp"

namespace tanglekit {

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int split_circles)
    : crossings_(std::move(crossings)), split_circles_(split_circles) {
  if (split_circles_ < 0) throw MalformedDiagram("negative split circle count");
  std::map<int, int> occurrences;
  for (const auto& x : crossings_) {
    for (int e : x.edges) ++occurrences[e];
  }
  std::map<int, int> dense;
  for (const auto& [label, count] : occurrences) {
    if (count != 2) {
      throw MalformedDiagram("arc " + std::to_string(label) + " appears " +
                             std::to_string(count) + " times (expected 2)");
    }
    dense.emplace(label, static_cast<int>(dense.size()));
  }
  for (auto& x : crossings_) {
    for (int& e : x.edges) e = dense.at(e);
  }
}

int LinkDiagram::component_count() const {
  UnionFind uf(edge_count());
  for (const auto& x : crossings_) {
    uf.unite(x.edges[0], x.edges[2]);
    uf.unite(x.edges[1], x.edges[3]);
  }
  int classes = 0;
  uf.dense_classes(&classes);
  return classes + split_circles_;
}

std::vector<int> LinkDiagram::edge_to_arc() const {
  UnionFind uf(edge_count());
  for (const auto& x : crossings_) uf.unite(x.edges[1], x.edges[3]);
  return uf.dense_classes();
}

int LinkDiagram::arc_count() const {
  UnionFind uf(edge_count());
  for (const auto& x : crossings_) uf.unite(x.edges[1], x.edges[3]);
  int classes = 0;
  uf.dense_classes(&classes);
  return classes;
}

LinkDiagram LinkDiagram::mirror() const {
  std::vector<Crossing> out;
  out.reserve(crossings_.size());
  for (const auto& x : crossings_) {
    const auto& e = x.edges;
    out.push_back(Crossing{{e[1], e[2], e[3], e[0]}});
  }
  return LinkDiagram(std::move(out), split_circles_);
}

LinkDiagram LinkDiagram::canonical() const {
  LinkDiagram out = *this;
  for (auto& x : out.crossings_) {
    const auto& e = x.edges;
    std::array<int, 4> rotated{e[2], e[3], e[0], e[1]};
    x.edges = std::min(x.edges, rotated);
  }
  std::sort(out.crossings_.begin(), out.crossings_.end(),
            [](const Crossing& a, const Crossing& b) { return a.edges < b.edges; });
  return out;
}

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

LinkDiagram parse_pd(std::string_view text) {
  std::vector<Crossing> crossings;
  int circles = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("\n/;", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view record = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = record.find('#'); hash != std::string_view::npos) {
      record = record.substr(0, hash);
    }
    auto tokens = split_ws(record);
    if (tokens.empty()) continue;
    const std::string_view kind = tokens.front();
    if (kind == "X" || kind == "x") {
      if (tokens.size() != 5) {
        throw ParseError("crossing record needs 4 labels: '" + std::string(record) + "'");
      }
      Crossing x;
      for (int i = 0; i < 4; ++i) x.edges[i] = parse_int(tokens[i + 1]);
      crossings.push_back(x);
    } else if (kind == "O" || kind == "o") {
      if (tokens.size() != 2) {
        throw ParseError("circle record needs one count: '" + std::string(record) + "'");
      }
      int k = parse_int(tokens[1]);
      if (k < 0) throw ParseError("negative circle count");
      circles += k;
    } else {
      throw ParseError("unknown PD record '" + std::string(kind) + "'");
    }
  }
  return LinkDiagram(std::move(crossings), circles);
}

std::string serialize_pd(const LinkDiagram& diagram) {
  std::ostringstream out;
  for (const auto& x : diagram.crossings()) {
    out << "X " << x.edges[0] + 1 << ' ' << x.edges[1] + 1 << ' ' << x.edges[2] + 1 << ' '
        << x.edges[3] + 1 << '\n';
  }
  if (diagram.split_circles() > 0) out << "O " << diagram.split_circles() << '\n';
  return out.str();
}

int OrientedDiagram::writhe() const {
  int w = 0;
  for (int s : signs) w += s;
  return w;
}

OrientedDiagram orient(const LinkDiagram& diagram, std::span<const bool> reverse) {
  const auto crossings = diagram.crossings();
  const int n = diagram.crossing_count();
  // Two occurrences (crossing, position) per edge label.
  std::vector<std::array<std::pair<int, int>, 2>> occ(diagram.edge_count());
  std::vector<int> filled(diagram.edge_count(), 0);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      int e = crossings[c].edges[p];
      occ[e][filled[e]++] = {c, p};
    }
  }

  OrientedDiagram out;
  out.edge_component.assign(diagram.edge_count(), -1);
  out.entry.assign(n, {-1, -1});
  std::vector<int> strand_component(2 * static_cast<std::size_t>(n), -1);

  auto trace = [&](int c0, int p0, int comp) {
    int c = c0;
    int p = p0;
    do {
      strand_component[2 * c + (p % 2)] = comp;
      out.entry[c][p % 2] = p;
      const int exit = (p + 2) % 4;
      const int e = crossings[c].edges[exit];
      out.edge_component[e] = comp;
      auto [ca, pa] = occ[e][0];
      auto next = (ca == c && pa == exit) ? occ[e][1] : occ[e][0];
      c = next.first;
      p = next.second;
    } while (c != c0 || p != p0);
  };

  for (int c = 0; c < n; ++c) {
    for (int kind = 0; kind < 2; ++kind) {
      if (strand_component[2 * c + kind] >= 0) continue;
      const int comp = out.components++;
      trace(c, kind, comp);
      // Respect the PD convention: the first under-passage enters at position 0.
      for (int c2 = 0; c2 < n; ++c2) {
        if (strand_component[2 * c2] != comp) continue;
        if (out.entry[c2][0] != 0) trace(c2, 0, comp);
        break;
      }
    }
  }

  for (int comp = 0; comp < out.components && comp < static_cast<int>(reverse.size()); ++comp) {
    if (!reverse[comp]) continue;
    for (int c = 0; c < n; ++c) {
      for (int kind = 0; kind < 2; ++kind) {
        if (strand_component[2 * c + kind] == comp) out.entry[c][kind] = (out.entry[c][kind] + 2) % 4;
      }
    }
  }

  out.signs.resize(n);
  for (int c = 0; c < n; ++c) {
    const int u = out.entry[c][0];
    const int o = out.entry[c][1];
    out.signs[c] = ((o - u + 4) % 4 == 3) ? +1 : -1;
  }
  return out;
}

}  // namespace tanglekit
