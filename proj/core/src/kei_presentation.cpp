#include "tanglekit/kei_presentation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "tanglekit/coset_table.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit {

void KeiPresentation::validate() const {
  if (generator_count < 0) throw Error("negative generator count");
  for (const auto& rel : relations) {
    for (const auto* w : {&rel.lhs, &rel.rhs}) {
      if (w->letters.empty()) throw Error("empty word in relation");
      for (int g : w->letters) {
        if (g < 0 || g >= generator_count) throw Error("relation mentions a missing generator");
      }
    }
  }
  if (burnside_exponent && *burnside_exponent < 2) throw Error("Burnside exponent must be at least 2");
}

KeiRelation r_n_relation(int n) {
  if (n < 2) throw Error("r_n needs n >= 2");
  KeiRelation rel;
  rel.lhs.letters = {0};
  const int first = n % 2 == 1 ? 1 : 0;
  for (int i = 0; i < n; ++i) rel.rhs.letters.push_back(i % 2 == 0 ? first : 1 - first);
  return rel;
}

KeiPresentation free_burnside_presentation(int m, int n) {
  KeiPresentation p;
  p.generator_count = m;
  if (n > 0) p.burnside_exponent = n;
  return p;
}

KeiPresentation fundamental_kei(const LinkDiagram& d) {
  KeiPresentation p;
  const auto arc = d.edge_to_arc();
  p.generator_count = d.arc_count() + d.split_circles();
  for (const auto& x : d.crossings()) {
    KeiRelation rel;
    rel.lhs.letters = {arc[x.edges[2]]};
    rel.rhs.letters = {arc[x.edges[0]], arc[x.edges[1]]};
    p.relations.push_back(std::move(rel));
  }
  return p;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

KeiPresentation parse_presentation(std::string_view text) {
  KeiPresentation p;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("gens")) {
      p.generator_count = parse_count(line.substr(4), "generator count");
      if (p.generator_count < 0) throw ParseError("negative generator count");
      have_gens = true;
    } else if (line.starts_with("rel")) {
      if (!have_gens) throw ParseError("`rel` before `gens`");
      const std::string_view body = line.substr(3);
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError("relation without '='");
      p.relations.push_back(KeiRelation{parse_word(body.substr(0, eq), p.generator_count),
                                        parse_word(body.substr(eq + 1), p.generator_count)});
    } else if (line.starts_with("burnside")) {
      const int n = parse_count(line.substr(8), "Burnside exponent");
      if (n < 2) throw ParseError("Burnside exponent must be at least 2");
      p.burnside_exponent = n;
    } else {
      throw ParseError("unknown presentation line '" + std::string(line) + "'");
    }
  }
  if (!have_gens) throw ParseError("presentation has no `gens` line");
  return p;
}

std::string serialize_presentation(const KeiPresentation& p) {
  std::ostringstream out;
  out << "gens " << p.generator_count << '\n';
  for (const auto& rel : p.relations) {
    out << "rel " << format_word(rel.lhs, p.generator_count) << " = "
        << format_word(rel.rhs, p.generator_count) << '\n';
  }
  if (p.burnside_exponent) out << "burnside " << *p.burnside_exponent << '\n';
  return out.str();
}

std::string GroupPresentation::to_string() const {
  std::ostringstream out;
  out << "generators:";
  for (int g = 1; g <= generator_count; ++g) out << " y" << g;
  out << "\nrelators:\n";
  for (const auto& r : relators) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i > 0 ? "*" : "") << 'y' << std::abs(r[i]) << (r[i] < 0 ? "^-1" : "");
    }
    out << '\n';
  }
  return out.str();
}

GroupPresentation core_group_presentation(const LinkDiagram& d) {
  GroupPresentation g;
  const auto arc = d.edge_to_arc();
  g.generator_count = d.arc_count() + d.split_circles();
  for (const auto& x : d.crossings()) {
    const int i = arc[x.edges[0]] + 1;
    const int j = arc[x.edges[1]] + 1;
    const int k = arc[x.edges[2]] + 1;
    g.relators.push_back({i, -j, i, -k});
  }
  return g;
}

std::vector<std::pair<int, int>> burnside_violations(const FiniteKei& k, int n) {
  const auto rel = r_n_relation(n);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < k.size(); ++u) {
    for (int w = 0; w < k.size(); ++w) {
      if (evaluate(k, rel.rhs, {u, w}) != u) out.emplace_back(u, w);
    }
  }
  return out;
}

std::size_t cap_from_environment(std::size_t fallback) {
  const char* value = std::getenv("TANGLEKIT_CAP");
  if (value == nullptr) return fallback;
  std::size_t cap = 0;
  const std::string_view s(value);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc() || ptr != s.data() + s.size() || cap == 0) return fallback;
  return cap;
}

namespace {

// Rows are elements, columns are generators acting by right multiplication.
// Every column is an involution, so each column is its own inverse.
class KeiEnumerator {
 public:
  KeiEnumerator(const KeiPresentation& p, const EnumerationOptions& options)
      : p_(p),
        options_(options),
        m_(p.generator_count),
        table_(p.generator_count, identity_columns(p.generator_count), options.cap) {}

  EnumerationResult run() {
    EnumerationResult result;
    result.cap = options_.cap;
    try {
      for (int g = 0; g < m_; ++g) table_.add_row();
      for (int g = 0; g < m_; ++g) table_.scan_and_fill(g, std::span<const int>(&g, 1), g);
      build_relators();
      for (;;) {
        const std::size_t merges_before = table_.merges();
        const std::size_t rows_before = table_.allocated();
        pass();
        const bool consistent = check_operators();
        if (consistent && table_.merges() == merges_before && table_.allocated() == rows_before) break;
      }
    } catch (const CapReached&) {
      result.deductions = table_.merges();
      result.peak_rows = peak_;
      return result;
    }
    result.deductions = table_.merges();
    result.peak_rows = peak_;
    finish(result);
    return result;
  }

 private:
  static std::vector<int> identity_columns(int m) {
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) inv[c] = c;
    return inv;
  }

  // Column word of the right multiplication by `w`: for w = g h1 ... hk this
  // is hk ... h1 g h1 ... hk.
  static std::vector<int> operator_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    out.insert(out.end(), w.begin() + 1, w.end());
    return out;
  }

  // Generator word (root first) of the path through which `row` was defined.
  std::vector<int> path_word(int row) const {
    std::vector<int> w;
    while (table_.parent(row) >= 0) {
      w.push_back(table_.parent_column(row));
      row = table_.parent(row);
    }
    w.push_back(row);
    std::reverse(w.begin(), w.end());
    return w;
  }

  const std::vector<int>& row_operator(int row) {
    if (op_cache_.size() <= static_cast<std::size_t>(row)) op_cache_.resize(table_.allocated());
    auto& cached = op_cache_[row];
    if (cached.empty()) cached = operator_word(path_word(row));
    return cached;
  }

  void build_relators() {
    for (const auto& rel : p_.relations) {
      auto r = operator_word(rel.lhs.letters);
      auto rhs = operator_word(rel.rhs.letters);
      r.insert(r.end(), rhs.begin(), rhs.end());
      relators_.push_back(std::move(r));
    }
    if (!p_.burnside_exponent) return;
    const int n = *p_.burnside_exponent;
    burnside_ = r_n_relation(n);
    // r_n(u, w) gives R_u = R_{rhs}, which rearranges to (R_u R_w)^n = 1.
    // Impose it for operators of short elements, one path-length level at a
    // time while the letter budget lasts. Generator-pair mode only knows r_n
    // between generators, so it stops at level 0.
    const int max_depth = options_.burnside_scope == BurnsideScope::AllPairs ? options_.operator_depth : 0;
    std::vector<std::vector<int>> ops;
    std::vector<std::vector<int>> frontier;
    for (int g = 0; g < m_; ++g) frontier.push_back({g});
    std::size_t budget = options_.operator_relator_budget;
    for (int depth = 0; depth <= max_depth && !frontier.empty(); ++depth) {
      const std::size_t old_ops = ops.size();
      std::vector<std::vector<int>> next;
      for (const auto& w : frontier) {
        ops.push_back(operator_word(w));
        for (int h = 0; h < m_; ++h) {
          if (h == w.back()) continue;
          auto longer = w;
          longer.push_back(h);
          next.push_back(std::move(longer));
        }
      }
      frontier = std::move(next);
      std::vector<std::vector<int>> level;
      std::size_t letters = 0;
      for (std::size_t j = old_ops; j < ops.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          auto r = power_relator(ops[i], ops[j], n);
          if (r.empty()) continue;
          letters += r.size();
          level.push_back(std::move(r));
        }
      }
      if (depth > 0 && letters > budget) break;
      budget -= std::min(budget, letters);
      for (auto& r : level) relators_.push_back(std::move(r));
    }
  }

  // Cyclically reduced (u w)^n over involutive letters.
  static std::vector<int> power_relator(const std::vector<int>& u, const std::vector<int>& w, int n) {
    std::vector<int> base = u;
    base.insert(base.end(), w.begin(), w.end());
    std::vector<int> r;
    for (int k = 0; k < n; ++k) {
      for (int c : base) {
        if (!r.empty() && r.back() == c) {
          r.pop_back();
        } else {
          r.push_back(c);
        }
      }
    }
    std::size_t lo = 0;
    std::size_t hi = r.size();
    while (hi - lo >= 2 && r[lo] == r[hi - 1]) {
      ++lo;
      --hi;
    }
    return {r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi)};
  }

  int trace_word_defining(const std::vector<int>& letters) {
    int row = table_.find(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) {
      int next = table_.get(row, letters[i]);
      if (next == CosetTable::kUndefined) next = table_.define(row, letters[i]);
      row = table_.find(next);
    }
    return row;
  }

  // r_n(u, w) as u = x1 . op(x2) ... op(xn) with x_i in {u, w}.
  void impose_burnside(int u, int w) {
    const auto& rhs = burnside_->rhs.letters;
    std::vector<int> word;
    for (std::size_t i = 1; i < rhs.size(); ++i) {
      const auto& op = row_operator(rhs[i] == 0 ? u : w);
      word.insert(word.end(), op.begin(), op.end());
    }
    const int start = rhs.front() == 0 ? u : w;
    table_.scan_and_fill(start, word, u);
  }

  void pass() {
    for (const auto& rel : p_.relations) {
      const int x = trace_word_defining(rel.lhs.letters);
      const int y = trace_word_defining(rel.rhs.letters);
      if (table_.find(x) != table_.find(y)) table_.coincidence(x, y);
    }
    if (burnside_ && options_.burnside_scope == BurnsideScope::GeneratorPairsOnly) {
      for (int g = 0; g < m_; ++g) {
        for (int h = 0; h < m_; ++h) impose_burnside(g, h);
      }
    }
    for (std::size_t z = 0; z < table_.allocated(); ++z) {
      const int row = static_cast<int>(z);
      if (!table_.alive(row)) continue;
      for (const auto& r : relators_) {
        table_.scan_and_fill(row, r, row);
        if (!table_.alive(row)) break;
      }
      if (!table_.alive(row)) continue;
      table_.scan_and_fill(row, row_operator(row), row);
      if (burnside_ && options_.burnside_scope == BurnsideScope::AllPairs) {
        for (int g = 0; g < m_ && table_.alive(row); ++g) {
          impose_burnside(g, row);
          if (table_.alive(row)) impose_burnside(row, g);
        }
      }
      if (!table_.alive(row)) continue;
      for (int c = 0; c < m_; ++c) {
        if (table_.get(row, c) == CosetTable::kUndefined) table_.define(row, c);
      }
      peak_ = std::max(peak_, table_.live_count());
    }
  }

  // Right multiplication by an element must not depend on the path used to
  // reach it: along every table edge x -h-> y, R_y = R_h R_x R_h, and
  // R_g equals column g. Mismatches are merged. Returns true when no
  // mismatch was found.
  bool check_operators() {
    if (!table_.complete()) return false;
    std::vector<int> roots(static_cast<std::size_t>(m_));
    for (int g = 0; g < m_; ++g) roots[g] = table_.find(g);
    const auto index = table_.bfs_order(roots);
    std::vector<int> rows;
    for (std::size_t r = 0; r < index.size(); ++r) {
      if (index[r] >= 0) rows.push_back(static_cast<int>(r));
    }
    std::sort(rows.begin(), rows.end(), [&](int a, int b) { return index[a] < index[b]; });
    const std::size_t n = rows.size();

    // perm[i][t] = image of row rows[t] under R_{rows[i]}, in BFS indices.
    std::vector<int> perm(n * n, -1);
    std::vector<int> tree_parent(n, -1);
    std::vector<int> tree_column(n, -1);
    auto col = [&](std::size_t t, int c) { return index[table_.get(rows[t], c)]; };
    std::vector<std::pair<int, int>> pending;

    std::size_t root_count = 0;
    for (int g = 0; g < m_; ++g) root_count = std::max(root_count, static_cast<std::size_t>(index[roots[g]]) + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (int c = 0; c < m_; ++c) {
        const int child = col(i, c);
        if (static_cast<std::size_t>(child) >= root_count && tree_parent[child] < 0) {
          tree_parent[child] = static_cast<int>(i);
          tree_column[child] = c;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      int* out = &perm[i * n];
      if (tree_parent[i] < 0) {
        // A root: some generator g with find(g) == rows[i].
        int g = 0;
        while (roots[g] != rows[i]) ++g;
        for (std::size_t t = 0; t < n; ++t) out[t] = col(t, g);
      } else {
        const int* parent = &perm[static_cast<std::size_t>(tree_parent[i]) * n];
        const int h = tree_column[i];
        for (std::size_t t = 0; t < n; ++t) out[t] = col(static_cast<std::size_t>(parent[col(t, h)]), h);
      }
    }

    auto compare = [&](const int* expected, const int* actual) {
      for (std::size_t t = 0; t < n; ++t) {
        if (expected[t] != actual[t]) pending.emplace_back(rows[expected[t]], rows[actual[t]]);
      }
    };
    std::vector<int> conj(n);
    for (int g = 0; g < m_; ++g) {
      const int r = index[roots[g]];
      for (std::size_t t = 0; t < n; ++t) conj[t] = col(t, g);
      compare(conj.data(), &perm[static_cast<std::size_t>(r) * n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int* px = &perm[i * n];
      for (int h = 0; h < m_; ++h) {
        const int y = col(i, h);
        if (tree_parent[y] == static_cast<int>(i) && tree_column[y] == h) continue;
        for (std::size_t t = 0; t < n; ++t) conj[t] = col(static_cast<std::size_t>(px[col(t, h)]), h);
        compare(conj.data(), &perm[static_cast<std::size_t>(y) * n]);
      }
    }
    for (auto [a, b] : pending) table_.coincidence(a, b);
    if (pending.empty()) {
      rows_ = std::move(rows);
      index_ = index;
      perm_ = std::move(perm);
    }
    return pending.empty();
  }

  void finish(EnumerationResult& result) {
    const std::size_t n = rows_.size();
    std::vector<int> table(n * n);
    // a*b = a . R_b
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = perm_[b * n + a];
    }
    result.kei = FiniteKei(static_cast<int>(n), std::move(table));
    for (int g = 0; g < m_; ++g) result.generator_images.push_back(index_[table_.find(g)]);
    result.completed = true;

    const auto& k = result.kei;
    if (!check_axioms(k).empty()) throw EnumerationFailure("enumerated table violates the Kei axioms");
    for (const auto& rel : p_.relations) {
      if (evaluate(k, rel.lhs, result.generator_images) != evaluate(k, rel.rhs, result.generator_images)) {
        throw EnumerationFailure("enumerated table violates a relation");
      }
    }
    if (p_.burnside_exponent && options_.burnside_scope == BurnsideScope::AllPairs &&
        !burnside_violations(k, *p_.burnside_exponent).empty()) {
      throw EnumerationFailure("enumerated table violates the Burnside relation");
    }
  }

  const KeiPresentation& p_;
  EnumerationOptions options_;
  int m_;
  CosetTable table_;
  std::vector<std::vector<int>> relators_;
  std::optional<KeiRelation> burnside_;
  std::vector<std::vector<int>> op_cache_;
  std::size_t peak_ = 0;
  std::vector<int> rows_;
  std::vector<int> index_;
  std::vector<int> perm_;
};

}  // namespace

EnumerationResult enumerate(const KeiPresentation& p, const EnumerationOptions& options) {
  p.validate();
  if (options.cap == 0) throw Error("enumeration cap must be positive");
  KeiEnumerator e(p, options);
  return e.run();
}

EnumerationResult burnside_kei(const LinkDiagram& d, int n, const EnumerationOptions& options) {
  if (n < 2) throw InvalidModulus("Burnside exponent must be at least 2");
  auto p = fundamental_kei(d);
  p.burnside_exponent = n;
  return enumerate(p, options);
}

}  // namespace tanglekit
