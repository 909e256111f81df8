#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tanglekit/bigint.hpp"
#include "tanglekit/link_diagram.hpp"

namespace tanglekit {

/// Rational 2-tangle p/q in lowest terms with q >= 0; infinity is 1/0.
struct RationalTangle {
  long long p = 0;
  long long q = 1;
  /// Twist sequence a_1..a_k with a_k + 1/(a_{k-1} + ... + 1/a_1) = p/q.
  std::vector<long long> twist_word;

  [[nodiscard]] bool is_infinity() const { return q == 0; }
  /// "5/2", "-3", "inf".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const RationalTangle& a, const RationalTangle& b) { return a.p == b.p && a.q == b.q; }
};

/// Continued-fraction value of a twist word; the empty word is the 0-tangle.
RationalTangle fraction_of_twists(const std::vector<long long>& tw);

/// Reduced p/q together with a twist word realizing it. Throws Error on 0/0.
RationalTangle rational_tangle(long long p, long long q);

/// Twist word for p/q (not necessarily reduced); the empty word for 0.
std::vector<long long> twists_for(long long p, long long q);

/// p/q -> -q/p.
RationalTangle rotate(const RationalTangle& t);

/// Algebraic 2-tangle expression tree. Nodes are immutable and shared.
class TangleExpr {
 public:
  enum class Kind { Zero, Infinity, Positive, Negative, Twist, Comp };

  static TangleExpr zero();
  static TangleExpr infinity();
  static TangleExpr crossing(int sign);
  static TangleExpr twist(std::vector<long long> tw);
  /// r^i(a) * r^j(b); exponents are reduced mod 2.
  static TangleExpr comp(int i, int j, TangleExpr a, TangleExpr b);

  [[nodiscard]] Kind kind() const;
  [[nodiscard]] const std::vector<long long>& twists() const;
  [[nodiscard]] int rot_left() const;
  [[nodiscard]] int rot_right() const;
  [[nodiscard]] TangleExpr left() const;
  [[nodiscard]] TangleExpr right() const;

  /// Number of crossings of the realized diagram.
  [[nodiscard]] long long crossing_count() const;
  [[nodiscard]] int depth() const;

  /// Fraction when the tree is a rational tangle built from leaves by
  /// adding integer tangles; nullopt otherwise.
  [[nodiscard]] std::optional<RationalTangle> fraction() const;

  friend bool operator==(const TangleExpr& a, const TangleExpr& b);

 private:
  struct Node;
  explicit TangleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: `t0`, `tinf`, `x+`, `x-`, `(tw a1 a2 ...)`, `(comp i j A B)`.
/// Throws ParseError.
TangleExpr parse_tangle(std::string_view text);
std::string serialize_tangle(const TangleExpr& t);

/// Paths ('0' = left, '1' = right) of all 0-tangle leaves.
std::vector<std::string> zero_sites(const TangleExpr& t);

/// Replaces the 0-tangle leaf at `site` by the twist realization of
/// sign * n/q. Throws InvalidMoveSite when `site` is not a 0-tangle leaf.
TangleExpr apply_rational_move(const TangleExpr& t, std::string_view site, long long n, long long q, int sign);

/// Planar diagram of a tangle: crossings over edge labels, with the labels of
/// the four boundary edges and the number of closed crossing-free circles.
/// A crossing-free strand between two boundary points is a label that
/// appears on the boundary twice.
struct TangleDiagram {
  enum Boundary { NW = 0, NE = 1, SW = 2, SE = 3 };

  std::vector<Crossing> crossings;
  std::array<int, 4> boundary{};
  int circles = 0;
  int label_count = 0;
};

TangleDiagram tangle_diagram(const TangleExpr& t);

enum class ClosureKind { Numerator, Denominator };

std::string to_string(ClosureKind k);
/// "num" / "numerator" / "den" / "denominator". Throws ParseError.
ClosureKind parse_closure_kind(std::string_view text);

/// Numerator joins NW-NE and SW-SE; denominator joins NW-SW and NE-SE.
LinkDiagram closure_diagram(const TangleExpr& t, ClosureKind kind);

struct EmbeddingVerdict {
  bool obstructed = false;
  long long n = 0;
  /// Fox n-colorings of the tangle vanishing on its boundary arcs.
  BigInt interior_colorings;
  /// |Col_n(target)|.
  BigInt target_colorings;
};

/// A tangle T inside a link L gives n * |{colorings of T vanishing on the
/// boundary}| distinct colorings of L. Obstructed when that exceeds
/// |Col_n(target)|. Throws InvalidModulus when n < 2.
EmbeddingVerdict embedding_obstruction(const TangleExpr& t, const LinkDiagram& target, long long n);

}  // namespace tanglekit
