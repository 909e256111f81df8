#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "tanglekit/braid_engine.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/jones.hpp"
#include "tanglekit/kei.hpp"
#include "tanglekit/kei_presentation.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/verify.hpp"

using namespace tanglekit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

LinkDiagram entry(const char* name) { return find_builtin(name)->diagram; }

std::size_t kei_size(const KeiPresentation& p) {
  const auto r = enumerate(p);
  return r.completed ? static_cast<std::size_t>(r.kei.size()) : 0;
}

Outcome coxeter_quotient_census() {
  Outcome o;
  const auto& g = coxeter_quotient();
  const auto census = conjugacy_census(g);
  o.require(g.order() == 600, "order " + std::to_string(g.order()));
  o.require(census.class_count == 45, "classes " + std::to_string(census.class_count));
  const int short_classes = census.classes_with_length_at_most(8);
  o.require(short_classes >= 36, "short classes " + std::to_string(short_classes));
  if (o.ok) o.detail = "order 600, 45 classes, " + std::to_string(short_classes) + " with length <= 8";
  return o;
}

Outcome identity_report() {
  Outcome o;
  const auto report = verify_five_move_identities();
  bool has_thirty = false;
  const BraidWord thirty = parse_braid("1 2", 3).pow(30);
  for (const auto& s : report.steps) {
    o.require(s.passed, "step " + s.label);
    if (s.lhs == thirty && s.rhs.empty()) has_thirty = true;
  }
  o.require(has_thirty, "missing (s1 s2)^30 step");
  if (o.ok) o.detail = std::to_string(report.steps.size()) + " steps";
  return o;
}

Outcome kei_cardinalities() {
  Outcome o;
  auto expect = [&](int m, int n, std::size_t size) {
    const auto got = kei_size(free_burnside_presentation(m, n));
    o.require(got == size, "|Q(" + std::to_string(m) + "," + std::to_string(n) + ")| = " + std::to_string(got));
  };
  expect(2, 3, 3);
  expect(3, 3, 9);
  for (int n = 2; n <= 9; ++n) {
    const auto r = enumerate(free_burnside_presentation(2, n));
    o.require(r.completed && kei_isomorphic(r.kei, dihedral_kei(n)).has_value(),
              "Q(2," + std::to_string(n) + ") not dihedral");
  }
  for (int m = 1; m <= 6; ++m) expect(m, 2, static_cast<std::size_t>(m));
  for (int n = 2; n <= 9; ++n) expect(1, n, 1);
  for (auto [m, n, size] : {std::tuple{4, 3, 81}, std::tuple{3, 4, 96}}) {
    const auto start = Clock::now();
    expect(m, n, static_cast<std::size_t>(size));
    const double t = seconds_since(start);
    o.require(t < 60.0, "Q(" + std::to_string(m) + "," + std::to_string(n) + ") took " + std::to_string(t) + " s");
  }
  if (o.ok) o.detail = "Q(4,3) = 81, Q(3,4) = 96";
  return o;
}

Outcome exceptional_knots() {
  Outcome o;
  const auto a = burnside_kei(entry("9_40"), 5);
  const auto b = burnside_kei(entry("9_49"), 5);
  o.require(a.completed && a.kei.size() == 25, "BQ5(9_40) size");
  o.require(b.completed && b.kei.size() == 25, "BQ5(9_49) size");
  if (!o.ok) return o;
  const auto z55 = core_kei(direct_product(cyclic_group(5), cyclic_group(5)));
  o.require(kei_isomorphic(a.kei, b.kei).has_value(), "BQ5(9_40) and BQ5(9_49) differ");
  o.require(kei_isomorphic(a.kei, z55).has_value(), "BQ5(9_40) is not core(Z5 + Z5)");
  if (o.ok) o.detail = "both 25 elements, core(Z5 + Z5)";
  return o;
}

Outcome fundamental_kei_sizes() {
  Outcome o;
  const auto n52 = closure_diagram(TangleExpr::twist({2, 2}), ClosureKind::Numerator);
  const std::vector<std::pair<std::string, LinkDiagram>> cases = {
      {"trefoil", entry("3_1")}, {"figure-eight", entry("4_1")}, {"N(5/2)", n52}};
  const std::size_t expected[] = {3, 5, 5};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto got = kei_size(fundamental_kei(cases[i].second));
    o.require(got == expected[i], cases[i].first + " gave " + std::to_string(got));
  }
  if (o.ok) o.detail = "3, 5, 5";
  return o;
}

Outcome coloring_groups() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    for (int m = 1; m <= 4; ++m) {
      o.require(col_group(LinkDiagram::unlink(m), n) == AbelianGroup::elementary(n, m),
                "Col_" + std::to_string(n) + "(U_" + std::to_string(m) + ")");
    }
  }
  o.require(col_group(entry("4_1"), 5) == AbelianGroup::elementary(5, 2), "Col_5(4_1)");
  o.require(col_group(entry("3_1"), 5) == AbelianGroup::elementary(5, 1), "Col_5(3_1)");
  int compared = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.diagram.arc_count() > 7) continue;
    for (int n = 2; n <= 7; ++n) {
      const BigInt snf = col_group(e.diagram, n).order();
      o.require(snf == BigInt(oracle::coloring_count(e.diagram, n)), e.name + " n=" + std::to_string(n));
      ++compared;
    }
  }
  if (o.ok) o.detail = std::to_string(compared) + " SNF/brute-force comparisons";
  return o;
}

Outcome jones_obstruction() {
  Outcome o;
  o.require(eval_at_fifth_root(jones(entry("4_1"))).is_zero(), "V(4_1) nonzero");
  const LaurentPoly factor = -LaurentPoly::power(1) - LaurentPoly::power(-1);
  for (int n = 1; n <= 5; ++n) {
    const auto v = jones(LinkDiagram::unlink(n));
    o.require(v == factor.pow(static_cast<unsigned>(n - 1)), "V(U_" + std::to_string(n) + ")");
    o.require(!eval_at_fifth_root(v).is_zero(), "V(U_" + std::to_string(n) + ") vanishes");
  }
  if (o.ok) o.detail = "V(4_1) = 0 exactly";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::vector<CheckResult> results;
  results.push_back(check_tangle_moves(kDefaultSeed, 200, 5, 2));
  for (int n : {3, 4, 5}) results.push_back(check_coloring_power_moves(kDefaultSeed, 200, n));
  results.push_back(check_jones_power_moves(kDefaultSeed, 200));
  results.push_back(check_bq3_power_moves(kDefaultSeed, 200, kDefaultKeiCap));
  for (const auto& r : results) o.require(r.passed, r.name + ": " + r.detail);
  if (o.ok) o.detail = std::to_string(results.size()) + " suites x 200 instances";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "coxeter-quotient", 5, coxeter_quotient_census},
      {2, "five-move-identities", 1, identity_report},
      {3, "kei-cardinalities", 120, kei_cardinalities},
      {4, "exceptional-knots-bq5", 120, exceptional_knots},
      {5, "fundamental-kei-sizes", 10, fundamental_kei_sizes},
      {6, "coloring-groups", 5, coloring_groups},
      {7, "jones-obstruction", 1, jones_obstruction},
      {8, "move-invariance-suites", 120, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double t = seconds_since(start);
    const bool in_time = t < c.budget_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s  %d %-24s %8.3f s (budget %g s)  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, t, c.budget_s,
                o.detail.c_str(), in_time ? "" : "  [over budget]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
