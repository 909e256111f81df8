#include "tanglekit/jones.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "tanglekit/errors.hpp"

namespace tanglekit {

namespace {

// Open edge labels of a partial smoothing, stored as sorted (a, b) pairs with
// a < b, where a and b are the two loose ends of one strand.
using Frontier = std::vector<std::pair<int, int>>;

struct PartialState {
  std::unordered_map<int, int> partner;
  int loops = 0;

  // Joins the current occurrences of labels x and y.
  void join(int x, int y) {
    const bool x_open = partner.count(x) > 0;
    const bool y_open = partner.count(y) > 0;
    if (x_open && y_open) {
      const int ex = partner[x];
      const int ey = partner[y];
      partner.erase(x);
      partner.erase(y);
      if (ex == y) {
        ++loops;
      } else {
        partner[ex] = ey;
        partner[ey] = ex;
      }
    } else if (x_open || y_open) {
      const int open = x_open ? x : y;
      const int fresh = x_open ? y : x;
      const int end = partner[open];
      partner.erase(open);
      partner[end] = fresh;
      partner[fresh] = end;
    } else if (x == y) {
      ++loops;
    } else {
      partner[x] = y;
      partner[y] = x;
    }
  }
};

Frontier freeze(const std::unordered_map<int, int>& partner) {
  Frontier f;
  for (const auto& [a, b] : partner) {
    if (a < b) f.emplace_back(a, b);
  }
  std::sort(f.begin(), f.end());
  return f;
}

// Greedy order: next crossing shares the most labels with those already used.
std::vector<int> crossing_order(const LinkDiagram& d) {
  const auto cs = d.crossings();
  const int n = d.crossing_count();
  std::vector<char> used(n, 0);
  std::vector<int> touched(d.edge_count(), 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_score = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      int score = 0;
      for (int e : cs[i].edges) score += touched[e] == 1 ? 1 : 0;
      if (score > best_score) {
        best = i;
        best_score = score;
      }
    }
    used[best] = 1;
    order.push_back(best);
    for (int e : cs[best].edges) ++touched[e];
  }
  return order;
}

LaurentPoly delta() { return -LaurentPoly::power(2) - LaurentPoly::power(-2); }

}  // namespace

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  if (d.crossing_count() > kBracketCrossingCap) {
    throw TooLarge("bracket is limited to " + std::to_string(kBracketCrossingCap) + " crossings, got " +
                   std::to_string(d.crossing_count()));
  }
  if (d.crossing_count() == 0 && d.split_circles() == 0) throw Error("bracket of the empty diagram");

  const LaurentPoly a = LaurentPoly::power(1);
  const LaurentPoly a_inv = LaurentPoly::power(-1);
  const LaurentPoly dl = delta();

  // Partial smoothings merged by frontier; the polynomial carries the closed
  // loops and the A-weights.
  std::map<Frontier, LaurentPoly> states;
  states[{}] = LaurentPoly(1);
  for (int ci : crossing_order(d)) {
    const auto& e = d.crossings()[ci].edges;
    std::map<Frontier, LaurentPoly> next;
    for (const auto& [frontier, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        PartialState st;
        for (const auto& [x, y] : frontier) {
          st.partner[x] = y;
          st.partner[y] = x;
        }
        if (smoothing == 0) {
          st.join(e[0], e[1]);
          st.join(e[2], e[3]);
        } else {
          st.join(e[0], e[3]);
          st.join(e[1], e[2]);
        }
        LaurentPoly term = poly * (smoothing == 0 ? a : a_inv);
        for (int i = 0; i < st.loops; ++i) term *= dl;
        next[freeze(st.partner)] += term;
      }
    }
    states.clear();
    for (auto& [f, p] : next) {
      if (!p.is_zero()) states.emplace(f, std::move(p));
    }
  }

  LaurentPoly total;
  for (const auto& [frontier, poly] : states) {
    if (!frontier.empty()) throw MalformedDiagram("bracket state did not close up");
    total += poly;
  }
  for (int i = 0; i < d.split_circles(); ++i) total *= dl;
  return total.divide_exact(dl);
}

LaurentPoly jones(const LinkDiagram& d, std::span<const bool> reverse) {
  const LaurentPoly bracket = kauffman_bracket(d);
  const int w = d.crossing_count() == 0 ? 0 : orient(d, reverse).writhe();
  LaurentPoly v = bracket * LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  // A^k = s^{-k/2}.
  return v.divide_exponents(2).scale_exponents(-1);
}

std::string format_in_t(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int e = it->first;
    BigInt c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c << '*';
    out << 't';
    if (e % 2 == 0) {
      if (e != 2) out << '^' << e / 2;
    } else {
      out << "^(" << e << "/2)";
    }
  }
  return out.str();
}

std::string to_string(FiveMoveVerdict v) {
  return v == FiveMoveVerdict::NotFiveMoveTrivializable ? "not-5-move-trivializable" : "inconclusive";
}

Jones5Result jones_at_fifth_root(const LinkDiagram& d) {
  Jones5Result r;
  r.polynomial = jones(d);
  r.value = eval_at_fifth_root(r.polynomial);
  r.verdict = r.value.is_zero() ? FiveMoveVerdict::NotFiveMoveTrivializable : FiveMoveVerdict::Inconclusive;
  return r;
}

FiveMoveVerdict five_move_obstruction(const LinkDiagram& d) { return jones_at_fifth_root(d).verdict; }

}  // namespace tanglekit
