#include "tanglekit/tangle.hpp"

#include <boost/integer/common_factor.hpp>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "tanglekit/errors.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/union_find.hpp"

namespace tanglekit {

// ---------------------------------------------------------------- fractions

std::string RationalTangle::to_string() const {
  if (q == 0) return "inf";
  if (q == 1) return std::to_string(p);
  return std::to_string(p) + "/" + std::to_string(q);
}

namespace {

RationalTangle normalized(long long p, long long q) {
  if (p == 0 && q == 0) throw Error("0/0 is not a tangle fraction");
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  const long long g = boost::integer::gcd(std::llabs(p), q);
  RationalTangle t;
  t.p = p / g;
  t.q = q / g;
  return t;
}

}  // namespace

RationalTangle fraction_of_twists(const std::vector<long long>& tw) {
  if (tw.empty()) return rational_tangle(0, 1);
  long long p = 1;
  long long q = 0;
  for (long long a : tw) {
    const long long next = a * p + q;
    q = p;
    p = next;
  }
  RationalTangle t = normalized(p, q);
  t.twist_word = tw;
  return t;
}

std::vector<long long> twists_for(long long p, long long q) {
  if (p == 0 && q == 0) throw Error("0/0 is not a tangle fraction");
  if (q == 0) return {0, 0};
  if (p == 0) return {};
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const bool negative = p < 0;
  p = std::llabs(p);
  std::vector<long long> out;
  while (q != 0) {
    const long long a = p / q;
    out.push_back(a);
    const long long r = p - a * q;
    p = q;
    q = r;
  }
  std::reverse(out.begin(), out.end());
  if (negative) {
    for (auto& a : out) a = -a;
  }
  return out;
}

RationalTangle rational_tangle(long long p, long long q) {
  RationalTangle t = normalized(p, q);
  t.twist_word = twists_for(t.p, t.q);
  return t;
}

RationalTangle rotate(const RationalTangle& t) { return rational_tangle(-t.q, t.p); }

// ---------------------------------------------------------------- expressions

struct TangleExpr::Node {
  Kind kind = Kind::Zero;
  std::vector<long long> twists;
  int i = 0;
  int j = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

TangleExpr TangleExpr::zero() { return TangleExpr(std::make_shared<const Node>(Node{Kind::Zero, {}, 0, 0, {}, {}})); }

TangleExpr TangleExpr::infinity() {
  return TangleExpr(std::make_shared<const Node>(Node{Kind::Infinity, {}, 0, 0, {}, {}}));
}

TangleExpr TangleExpr::crossing(int sign) {
  if (sign != 1 && sign != -1) throw Error("crossing sign must be +1 or -1");
  return TangleExpr(
      std::make_shared<const Node>(Node{sign > 0 ? Kind::Positive : Kind::Negative, {}, 0, 0, {}, {}}));
}

TangleExpr TangleExpr::twist(std::vector<long long> tw) {
  return TangleExpr(std::make_shared<const Node>(Node{Kind::Twist, std::move(tw), 0, 0, {}, {}}));
}

TangleExpr TangleExpr::comp(int i, int j, TangleExpr a, TangleExpr b) {
  auto mod2 = [](int x) { return ((x % 2) + 2) % 2; };
  return TangleExpr(std::make_shared<const Node>(
      Node{Kind::Comp, {}, mod2(i), mod2(j), std::move(a.node_), std::move(b.node_)}));
}

TangleExpr::Kind TangleExpr::kind() const { return node_->kind; }
const std::vector<long long>& TangleExpr::twists() const { return node_->twists; }
int TangleExpr::rot_left() const { return node_->i; }
int TangleExpr::rot_right() const { return node_->j; }

TangleExpr TangleExpr::left() const {
  if (node_->kind != Kind::Comp) throw Error("leaf has no children");
  return TangleExpr(node_->a);
}

TangleExpr TangleExpr::right() const {
  if (node_->kind != Kind::Comp) throw Error("leaf has no children");
  return TangleExpr(node_->b);
}

long long TangleExpr::crossing_count() const {
  switch (kind()) {
    case Kind::Zero:
    case Kind::Infinity:
      return 0;
    case Kind::Positive:
    case Kind::Negative:
      return 1;
    case Kind::Twist: {
      long long n = 0;
      for (long long a : twists()) n += std::llabs(a);
      return n;
    }
    case Kind::Comp:
      return left().crossing_count() + right().crossing_count();
  }
  return 0;
}

int TangleExpr::depth() const {
  if (kind() != Kind::Comp) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

std::optional<RationalTangle> TangleExpr::fraction() const {
  switch (kind()) {
    case Kind::Zero:
      return rational_tangle(0, 1);
    case Kind::Infinity:
      return rational_tangle(1, 0);
    case Kind::Positive:
      return rational_tangle(1, 1);
    case Kind::Negative:
      return rational_tangle(-1, 1);
    case Kind::Twist:
      return fraction_of_twists(twists());
    case Kind::Comp: {
      auto fa = left().fraction();
      auto fb = right().fraction();
      if (!fa || !fb) return std::nullopt;
      if (rot_left() == 1) fa = rotate(*fa);
      if (rot_right() == 1) fb = rotate(*fb);
      if (fa->q != 1 && fb->q != 1) return std::nullopt;
      return rational_tangle(fa->p * fb->q + fb->p * fa->q, fa->q * fb->q);
    }
  }
  return std::nullopt;
}

bool operator==(const TangleExpr& a, const TangleExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TangleExpr::Kind::Twist:
      return a.twists() == b.twists();
    case TangleExpr::Kind::Comp:
      return a.rot_left() == b.rot_left() && a.rot_right() == b.rot_right() && a.left() == b.left() &&
             a.right() == b.right();
    default:
      return true;
  }
}

// ---------------------------------------------------------------- text form

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::string_view next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return {};
    if (text_[pos_] == '(' || text_[pos_] == ')') return text_.substr(pos_++, 1);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::string_view peek() {
    const std::size_t saved = pos_;
    auto t = next();
    pos_ = saved;
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

long long to_integer(std::string_view tok) {
  long long v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size()) {
    throw ParseError("expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

TangleExpr parse_expr(Lexer& lex) {
  const auto tok = lex.next();
  if (tok.empty()) throw ParseError("unexpected end of tangle expression");
  if (tok == "t0") return TangleExpr::zero();
  if (tok == "tinf") return TangleExpr::infinity();
  if (tok == "x+") return TangleExpr::crossing(1);
  if (tok == "x-") return TangleExpr::crossing(-1);
  if (tok != "(") throw ParseError("unexpected token '" + std::string(tok) + "'");
  const auto head = lex.next();
  if (head == "tw") {
    std::vector<long long> tw;
    while (lex.peek() != ")") {
      const auto t = lex.next();
      if (t.empty()) throw ParseError("unterminated (tw ...)");
      tw.push_back(to_integer(t));
    }
    lex.next();
    return TangleExpr::twist(std::move(tw));
  }
  if (head == "comp") {
    const long long i = to_integer(lex.next());
    const long long j = to_integer(lex.next());
    if (i < 0 || j < 0) throw ParseError("rotation exponents must be non-negative");
    auto a = parse_expr(lex);
    auto b = parse_expr(lex);
    if (lex.next() != ")") throw ParseError("expected ')' after (comp i j A B");
    return TangleExpr::comp(static_cast<int>(i % 2), static_cast<int>(j % 2), std::move(a), std::move(b));
  }
  throw ParseError("unknown tangle form '(" + std::string(head) + "'");
}

void serialize(const TangleExpr& t, std::ostringstream& out) {
  switch (t.kind()) {
    case TangleExpr::Kind::Zero:
      out << "t0";
      return;
    case TangleExpr::Kind::Infinity:
      out << "tinf";
      return;
    case TangleExpr::Kind::Positive:
      out << "x+";
      return;
    case TangleExpr::Kind::Negative:
      out << "x-";
      return;
    case TangleExpr::Kind::Twist:
      out << "(tw";
      for (long long a : t.twists()) out << ' ' << a;
      out << ')';
      return;
    case TangleExpr::Kind::Comp:
      out << "(comp " << t.rot_left() << ' ' << t.rot_right() << ' ';
      serialize(t.left(), out);
      out << ' ';
      serialize(t.right(), out);
      out << ')';
      return;
  }
}

void collect_zero_sites(const TangleExpr& t, std::string& path, std::vector<std::string>& out) {
  if (t.kind() == TangleExpr::Kind::Zero) {
    out.push_back(path);
    return;
  }
  if (t.kind() != TangleExpr::Kind::Comp) return;
  path.push_back('0');
  collect_zero_sites(t.left(), path, out);
  path.back() = '1';
  collect_zero_sites(t.right(), path, out);
  path.pop_back();
}

TangleExpr replace_at(const TangleExpr& t, std::string_view site, std::size_t depth, const TangleExpr& leaf,
                      std::string_view full) {
  if (depth == site.size()) {
    if (t.kind() != TangleExpr::Kind::Zero) {
      throw InvalidMoveSite("site '" + std::string(full) + "' is not a 0-tangle leaf");
    }
    return leaf;
  }
  if (t.kind() != TangleExpr::Kind::Comp) {
    throw InvalidMoveSite("site '" + std::string(full) + "' runs past a leaf");
  }
  const char c = site[depth];
  if (c == '0') return TangleExpr::comp(t.rot_left(), t.rot_right(), replace_at(t.left(), site, depth + 1, leaf, full), t.right());
  if (c == '1') return TangleExpr::comp(t.rot_left(), t.rot_right(), t.left(), replace_at(t.right(), site, depth + 1, leaf, full));
  throw InvalidMoveSite("site paths use only '0' and '1', got '" + std::string(full) + "'");
}

}  // namespace

TangleExpr parse_tangle(std::string_view text) {
  Lexer lex(text);
  auto t = parse_expr(lex);
  if (!lex.next().empty()) throw ParseError("trailing input after tangle expression");
  return t;
}

std::string serialize_tangle(const TangleExpr& t) {
  std::ostringstream out;
  serialize(t, out);
  return out.str();
}

std::vector<std::string> zero_sites(const TangleExpr& t) {
  std::vector<std::string> out;
  std::string path;
  collect_zero_sites(t, path, out);
  return out;
}

TangleExpr apply_rational_move(const TangleExpr& t, std::string_view site, long long n, long long q, int sign) {
  if (sign != 1 && sign != -1) throw Error("move sign must be +1 or -1");
  if (q == 0 && n == 0) throw Error("0/0 is not a tangle fraction");
  const auto leaf = TangleExpr::twist(twists_for(sign * n, q));
  return replace_at(t, site, 0, leaf, site);
}

// ---------------------------------------------------------------- diagrams

namespace {

using D = TangleDiagram;

D zero_diagram() { return D{{}, {0, 0, 1, 1}, 0, 2}; }
D infinity_diagram() { return D{{}, {0, 1, 0, 1}, 0, 2}; }

D crossing_diagram(int sign) {
  // x+ is (NW, SW, SE, NE); x- is its mirror.
  D d{{Crossing{{0, 1, 2, 3}}}, {0, 3, 1, 2}, 0, 4};
  if (sign < 0) d.crossings[0].edges = {1, 2, 3, 0};
  return d;
}

D rotated(D d) {
  const auto old = d.boundary;
  d.boundary[D::NW] = old[D::NE];
  d.boundary[D::SW] = old[D::NW];
  d.boundary[D::SE] = old[D::SW];
  d.boundary[D::NE] = old[D::SE];
  return d;
}

D mirrored(D d) {
  for (auto& c : d.crossings) c.edges = {c.edges[1], c.edges[2], c.edges[3], c.edges[0]};
  return d;
}

// Relabels after identifying label classes; labels left with no occurrence
// are closed crossing-free circles.
D relabel(const std::vector<Crossing>& crossings, const std::array<int, 4>* boundary, UnionFind& uf, int circles) {
  const int n = uf.size();
  std::vector<int> occurrences(n, 0);
  for (const auto& c : crossings) {
    for (int e : c.edges) ++occurrences[uf.find(e)];
  }
  if (boundary != nullptr) {
    for (int e : *boundary) ++occurrences[uf.find(e)];
  }
  std::vector<int> id(n, -1);
  int next = 0;
  D out;
  for (int x = 0; x < n; ++x) {
    const int r = uf.find(x);
    if (id[r] >= 0 || r != x) continue;
    if (occurrences[r] == 0) {
      ++circles;
      continue;
    }
    id[r] = next++;
  }
  for (const auto& c : crossings) {
    Crossing k;
    for (int p = 0; p < 4; ++p) k.edges[p] = id[uf.find(c.edges[p])];
    out.crossings.push_back(k);
  }
  if (boundary != nullptr) {
    for (int p = 0; p < 4; ++p) out.boundary[p] = id[uf.find((*boundary)[p])];
  }
  out.circles = circles;
  out.label_count = next;
  return out;
}

D composed(const D& a, const D& b) {
  const int offset = a.label_count;
  UnionFind uf(a.label_count + b.label_count);
  std::vector<Crossing> crossings = a.crossings;
  for (auto c : b.crossings) {
    for (int& e : c.edges) e += offset;
    crossings.push_back(c);
  }
  uf.unite(a.boundary[D::NE], b.boundary[D::NW] + offset);
  uf.unite(a.boundary[D::SE], b.boundary[D::SW] + offset);
  const std::array<int, 4> boundary{a.boundary[D::NW], b.boundary[D::NE] + offset, a.boundary[D::SW],
                                    b.boundary[D::SE] + offset};
  return relabel(crossings, &boundary, uf, a.circles + b.circles);
}

D integer_diagram(long long k) {
  D d = zero_diagram();
  const D x = crossing_diagram(k > 0 ? 1 : -1);
  for (long long i = 0; i < std::llabs(k); ++i) d = composed(d, x);
  return d;
}

D twist_diagram(const std::vector<long long>& tw) {
  if (tw.empty()) return zero_diagram();
  D d = integer_diagram(tw[0]);
  for (std::size_t i = 1; i < tw.size(); ++i) d = composed(mirrored(rotated(d)), integer_diagram(tw[i]));
  return d;
}

D build(const TangleExpr& t) {
  switch (t.kind()) {
    case TangleExpr::Kind::Zero:
      return zero_diagram();
    case TangleExpr::Kind::Infinity:
      return infinity_diagram();
    case TangleExpr::Kind::Positive:
      return crossing_diagram(1);
    case TangleExpr::Kind::Negative:
      return crossing_diagram(-1);
    case TangleExpr::Kind::Twist:
      return twist_diagram(t.twists());
    case TangleExpr::Kind::Comp: {
      D a = build(t.left());
      D b = build(t.right());
      if (t.rot_left() == 1) a = rotated(std::move(a));
      if (t.rot_right() == 1) b = rotated(std::move(b));
      return composed(a, b);
    }
  }
  return zero_diagram();
}

}  // namespace

TangleDiagram tangle_diagram(const TangleExpr& t) { return build(t); }

std::string to_string(ClosureKind k) { return k == ClosureKind::Numerator ? "numerator" : "denominator"; }

ClosureKind parse_closure_kind(std::string_view text) {
  if (text == "num" || text == "numerator" || text == "N") return ClosureKind::Numerator;
  if (text == "den" || text == "denominator" || text == "D") return ClosureKind::Denominator;
  throw ParseError("closure kind must be num or den, got '" + std::string(text) + "'");
}

LinkDiagram closure_diagram(const TangleExpr& t, ClosureKind kind) {
  const D d = build(t);
  UnionFind uf(d.label_count);
  if (kind == ClosureKind::Numerator) {
    uf.unite(d.boundary[D::NW], d.boundary[D::NE]);
    uf.unite(d.boundary[D::SW], d.boundary[D::SE]);
  } else {
    uf.unite(d.boundary[D::NW], d.boundary[D::SW]);
    uf.unite(d.boundary[D::NE], d.boundary[D::SE]);
  }
  const D closed = relabel(d.crossings, nullptr, uf, d.circles);
  return LinkDiagram(closed.crossings, closed.circles);
}

EmbeddingVerdict embedding_obstruction(const TangleExpr& t, const LinkDiagram& target, long long n) {
  if (n < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(n));
  const D d = build(t);

  // Over-strand arcs: positions 1 and 3 of a crossing lie on one arc.
  UnionFind arcs(d.label_count);
  for (const auto& c : d.crossings) arcs.unite(c.edges[1], c.edges[3]);
  std::vector<char> on_boundary(d.label_count, 0);
  for (int e : d.boundary) on_boundary[arcs.find(e)] = 1;
  std::vector<int> column(d.label_count, -1);
  int cols = 0;
  for (int e = 0; e < d.label_count; ++e) {
    const int r = arcs.find(e);
    if (!on_boundary[r] && column[r] < 0) column[r] = cols++;
  }
  cols += d.circles;

  // Boundary arcs are colored 0, so their columns drop out.
  IntMatrix m;
  for (const auto& c : d.crossings) {
    std::vector<BigInt> row(static_cast<std::size_t>(cols), 0);
    const int coeff[4] = {1, -2, 1, 0};
    for (int p = 0; p < 3; ++p) {
      const int col = column[arcs.find(c.edges[p])];
      if (col >= 0) row[col] += coeff[p];
    }
    m.push_back(std::move(row));
  }

  EmbeddingVerdict v;
  v.n = n;
  v.interior_colorings = kernel_mod_n(m, cols, n).order();
  v.target_colorings = col_group(target, n).order();
  v.obstructed = BigInt(n) * v.interior_colorings > v.target_colorings;
  return v;
}

}  // namespace tanglekit
