#include "tanglekit/kei.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tanglekit/errors.hpp"

namespace tanglekit {

GroupTable cyclic_group(int n) {
  GroupTable g;
  g.order = n;
  g.mult.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mult[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return g;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  GroupTable out;
  out.order = g.order * h.order;
  out.mult.resize(static_cast<std::size_t>(out.order) * out.order);
  for (int a = 0; a < out.order; ++a) {
    for (int b = 0; b < out.order; ++b) {
      const int first = g.op(a / h.order, b / h.order);
      const int second = h.op(a % h.order, b % h.order);
      out.mult[static_cast<std::size_t>(a) * out.order + b] = first * h.order + second;
    }
  }
  return out;
}

FiniteKei::FiniteKei(int size, std::vector<int> table) : size_(size), table_(std::move(table)) {
  if (size_ < 0 || table_.size() != static_cast<std::size_t>(size_) * size_) {
    throw Error("Kei table must have size*size entries");
  }
  for (int v : table_) {
    if (v < 0 || v >= size_) throw Error("Kei table entry " + std::to_string(v) + " out of range");
  }
}

FiniteKei FiniteKei::trivial(int size) {
  std::vector<int> t(static_cast<std::size_t>(size) * size);
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) t[static_cast<std::size_t>(a) * size + b] = a;
  }
  return FiniteKei(size, std::move(t));
}

FiniteKei dihedral_kei(int n) {
  if (n < 1) throw Error("dihedral Kei needs n >= 1");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i) * n + j] = ((2 * j - i) % n + n) % n;
  }
  return FiniteKei(n, std::move(t));
}

FiniteKei core_kei(const GroupTable& g) {
  const int n = g.order;
  if (n < 1 || g.mult.size() != static_cast<std::size_t>(n) * n) throw NotAGroup("table has the wrong shape");
  for (int v : g.mult) {
    if (v < 0 || v >= n) throw NotAGroup("table entry out of range");
  }
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.op(c, a) == a && g.op(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) throw NotAGroup("no identity element");
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.op(a, b) == e && g.op(b, a) == e) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) throw NotAGroup("operation is not associative");
      }
    }
  }
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = g.op(g.op(b, inv[a]), b);
  }
  return FiniteKei(n, std::move(t));
}

FiniteKei direct_product(const FiniteKei& k1, const FiniteKei& k2) {
  const int m = k2.size();
  const int n = k1.size() * m;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t[static_cast<std::size_t>(a) * n + b] = k1.op(a / m, b / m) * m + k2.op(a % m, b % m);
    }
  }
  return FiniteKei(n, std::move(t));
}

std::vector<AxiomViolation> check_axioms(const FiniteKei& k) {
  std::vector<AxiomViolation> out;
  const int n = k.size();
  for (int a = 0; a < n; ++a) {
    if (k.op(a, a) != a) out.push_back({1, a, 0, 0});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (k.op(k.op(a, b), b) != a) out.push_back({2, a, b, 0});
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (k.op(k.op(a, b), c) != k.op(k.op(a, c), k.op(b, c))) out.push_back({3, a, b, c});
      }
    }
  }
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer applied to the combined state
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash_sorted(std::vector<std::uint64_t>& values) {
  std::sort(values.begin(), values.end());
  std::uint64_t h = values.size();
  for (auto v : values) h = mix(h, v);
  return h;
}

std::size_t distinct(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

/// Color refinement: start from fixed-point counts and refine by the colors
/// of products until the partition stops splitting.
std::vector<std::uint64_t> refined_colors(const FiniteKei& k) {
  const int n = k.size();
  std::vector<std::uint64_t> color(n);
  for (int x = 0; x < n; ++x) {
    std::uint64_t fixed_by = 0;
    std::uint64_t fixes = 0;
    for (int y = 0; y < n; ++y) {
      fixed_by += k.op(y, x) == y;
      fixes += k.op(x, y) == x;
    }
    color[x] = mix(mix(1, fixed_by), fixes);
  }
  std::size_t classes = distinct(color);
  std::vector<std::uint64_t> row(n);
  std::vector<std::uint64_t> col(n);
  for (int round = 0; round <= n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        row[y] = mix(color[k.op(x, y)], color[y]);
        col[y] = mix(color[k.op(y, x)], color[y]);
      }
      next[x] = mix(mix(color[x], hash_sorted(row)), hash_sorted(col));
    }
    const std::size_t next_classes = distinct(next);
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

struct IsoSearch {
  const FiniteKei& k1;
  const FiniteKei& k2;
  std::vector<std::uint64_t> c1;
  std::vector<std::uint64_t> c2;
  std::vector<int> gens;

  struct State {
    std::vector<int> f;
    std::vector<int> finv;
    std::vector<int> domain;
    std::size_t processed = 0;
  };

  bool assign(State& s, int x, int y) const {
    if (s.f[x] >= 0) return s.f[x] == y;
    if (s.finv[y] >= 0 || c1[x] != c2[y]) return false;
    s.f[x] = y;
    s.finv[y] = x;
    s.domain.push_back(x);
    return true;
  }

  bool close(State& s) const {
    while (s.processed < s.domain.size()) {
      const int x = s.domain[s.processed];
      for (std::size_t j = 0; j <= s.processed; ++j) {
        const int y = s.domain[j];
        if (!assign(s, k1.op(x, y), k2.op(s.f[x], s.f[y]))) return false;
        if (!assign(s, k1.op(y, x), k2.op(s.f[y], s.f[x]))) return false;
      }
      ++s.processed;
    }
    return true;
  }

  bool search(State& s, std::size_t i) const {
    if (i == gens.size()) return static_cast<int>(s.domain.size()) == k1.size();
    const int g = gens[i];
    if (s.f[g] >= 0) return search(s, i + 1);
    for (int cand = 0; cand < k2.size(); ++cand) {
      if (s.finv[cand] >= 0 || c2[cand] != c1[g]) continue;
      State t = s;
      if (assign(t, g, cand) && close(t) && search(t, i + 1)) {
        s = std::move(t);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::uint64_t invariant_hash(const FiniteKei& k) {
  auto colors = refined_colors(k);
  return mix(static_cast<std::uint64_t>(k.size()), hash_sorted(colors));
}

std::vector<int> subkei_closure(const FiniteKei& k, const std::vector<int>& seeds) {
  std::vector<char> in(static_cast<std::size_t>(k.size()), 0);
  std::vector<int> out;
  for (int s : seeds) {
    if (!in[s]) {
      in[s] = 1;
      out.push_back(s);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int z : {k.op(out[i], out[j]), k.op(out[j], out[i])}) {
        if (!in[z]) {
          in[z] = 1;
          out.push_back(z);
        }
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> kei_isomorphic(const FiniteKei& k1, const FiniteKei& k2) {
  if (k1.size() != k2.size()) return std::nullopt;
  const int n = k1.size();
  IsoSearch search{k1, k2, refined_colors(k1), refined_colors(k2), {}};
  {
    auto a = search.c1;
    auto b = search.c2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Greedy generating set, preferring elements from small color classes.
  std::vector<int> order(n);
  for (int x = 0; x < n; ++x) order[x] = x;
  auto class_size = [&](int x) { return std::count(search.c1.begin(), search.c1.end(), search.c1[x]); };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return class_size(x) < class_size(y); });
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int x : order) {
    if (covered[x]) continue;
    search.gens.push_back(x);
    for (int z : subkei_closure(k1, search.gens)) covered[z] = 1;
  }

  IsoSearch::State state;
  state.f.assign(n, -1);
  state.finv.assign(n, -1);
  if (!search.search(state, 0)) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (state.f[k1.op(a, b)] != k2.op(state.f[a], state.f[b])) return std::nullopt;
    }
  }
  return state.f;
}

FiniteKei parse_kei_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad Kei table entry '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("empty Kei table");
  const int n = values.front();
  if (n < 0 || values.size() != 1 + static_cast<std::size_t>(n) * n) {
    throw ParseError("Kei table of size " + std::to_string(n) + " needs " + std::to_string(n * n) + " entries");
  }
  try {
    return FiniteKei(n, std::vector<int>(values.begin() + 1, values.end()));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_kei_table(const FiniteKei& k) {
  std::ostringstream out;
  out << k.size() << '\n';
  for (int a = 0; a < k.size(); ++a) {
    for (int b = 0; b < k.size(); ++b) out << (b > 0 ? " " : "") << k.op(a, b);
    out << '\n';
  }
  return out.str();
}

std::string generator_name(int index, int generator_count) {
  if (generator_count <= 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index);
}

LeftNormedWord parse_word(std::string_view text, int generator_count) {
  LeftNormedWord w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view name = text.substr(pos, end - pos);
    while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.remove_prefix(1);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    int index = -1;
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z' && generator_count <= 26) {
      index = name[0] - 'a';
    } else if (name.size() > 1 && name[0] == 'x') {
      auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (ec != std::errc() || ptr != name.data() + name.size()) index = -1;
    }
    if (index < 0 || index >= generator_count) {
      throw ParseError("unknown generator '" + std::string(name) + "'");
    }
    w.letters.push_back(index);
    pos = end + 1;
  }
  return w;
}

std::string format_word(const LeftNormedWord& w, int generator_count) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += '*';
    out += generator_name(w.letters[i], generator_count);
  }
  return out;
}

int evaluate(const FiniteKei& k, const LeftNormedWord& w, const std::vector<int>& images) {
  if (w.letters.empty()) throw Error("empty word");
  int v = images.at(w.letters.front());
  for (std::size_t i = 1; i < w.letters.size(); ++i) v = k.op(v, images.at(w.letters[i]));
  return v;
}

long long phi_eval(const LeftNormedWord& w) {
  if (w.letters.empty()) throw Error("empty word");
  long long v = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    const int y = w.letters[i];
    if (y != 0 && y != 1) throw Error("phi is defined on words over {a, b}");
    v = i == 0 ? y : 2LL * y - v;
  }
  return v;
}

}  // namespace tanglekit
