#include "tanglekit/corpus.hpp"

#include <fstream>
#include <sstream>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

// PD codes follow the KnotInfo / Knot Atlas tables (counterclockwise from the
// incoming under-edge). 9^2_40 is L9a32 with the orientation whose braid form
// is (s1^-1 s2^2)^3.
constexpr std::string_view kBuiltinCorpus = R"(name: unknot
det: 1
O 1

name: hopf
det: 2
X 4 1 3 2
X 2 3 1 4

name: 3_1
det: 3
X 1 4 2 5
X 3 6 4 1
X 5 2 6 3

name: 4_1
det: 5
X 4 2 5 1
X 8 6 1 5
X 6 3 7 4
X 2 7 3 8

name: 8_18
det: 45
X 6 2 7 1
X 8 3 9 4
X 16 11 1 12
X 2 14 3 13
X 4 15 5 16
X 10 6 11 5
X 12 7 13 8
X 14 10 15 9

name: 9_40
det: 75
X 1 15 2 14
X 3 12 4 13
X 5 11 6 10
X 7 3 8 2
X 9 18 10 1
X 11 17 12 16
X 13 9 14 8
X 15 6 16 7
X 17 5 18 4

name: 9_49
det: 25
X 1 15 2 14
X 4 12 5 11
X 6 16 7 15
X 7 3 8 2
X 10 18 11 17
X 12 4 13 3
X 13 9 14 8
X 16 6 17 5
X 18 10 1 9

name: 9^2_40
det: 50
X 16 2 17 1
X 12 4 13 3
X 18 11 7 12
X 10 15 11 16
X 14 7 15 8
X 8 6 9 5
X 2 18 3 17
X 4 14 5 13
X 6 10 1 9
)";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void finish(std::vector<CorpusEntry>& out, std::string& name, std::string& body,
            std::optional<long long>& det) {
  if (name.empty()) return;
  try {
    out.push_back(CorpusEntry{name, parse_pd(body), det});
  } catch (const MalformedDiagram& e) {
    throw MalformedDiagram("corpus record '" + name + "': " + e.what());
  } catch (const ParseError& e) {
    throw ParseError("corpus record '" + name + "': " + e.what());
  }
  name.clear();
  body.clear();
  det.reset();
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::string name;
  std::string body;
  std::optional<long long> det;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = trim(raw);
    if (line.starts_with("name:")) {
      finish(out, name, body, det);
      name = std::string(trim(line.substr(5)));
      if (name.empty()) throw ParseError("corpus record with empty name");
    } else if (line.starts_with("det:")) {
      if (name.empty()) throw ParseError("det line outside a corpus record");
      try {
        det = std::stoll(std::string(trim(line.substr(4))));
      } catch (const std::exception&) {
        throw ParseError("corpus record '" + name + "': bad determinant");
      }
    } else if (!line.empty()) {
      if (name.empty()) throw ParseError("PD line outside a corpus record");
      body.append(line).push_back('\n');
    }
  }
  finish(out, name, body, det);
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

std::string_view builtin_corpus_text() { return kBuiltinCorpus; }

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = parse_corpus(kBuiltinCorpus);
  return corpus;
}

std::optional<CorpusEntry> find_builtin(std::string_view name) {
  if (name == "trefoil") name = "3_1";
  if (name == "figure-eight" || name == "figure8") name = "4_1";
  if (name == "9_2_40") name = "9^2_40";
  for (const auto& entry : builtin_corpus()) {
    if (entry.name == name) return entry;
  }
  return std::nullopt;
}

}  // namespace tanglekit
