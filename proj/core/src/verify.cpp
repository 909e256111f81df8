#include "tanglekit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "tanglekit/braid_engine.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/jones.hpp"
#include "tanglekit/kei.hpp"

namespace tanglekit {

namespace {

using Task = std::function<std::vector<CheckResult>()>;

std::vector<CheckResult> run_pool(const std::vector<Task>& tasks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::vector<CheckResult>> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> merged;
  for (auto& r : out) merged.insert(merged.end(), r.begin(), r.end());
  return merged;
}

// Wraps a check so that a library exception becomes a failed result.
Task guarded(std::string family, std::string name, std::function<CheckResult()> body) {
  return [family = std::move(family), name = std::move(name), body = std::move(body)] {
    CheckResult r;
    try {
      r = body();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.family = family;
    r.name = name;
    return std::vector<CheckResult>{r};
  };
}

CheckResult result(bool passed, std::string detail = {}) { return {{}, {}, passed, std::move(detail)}; }

template <typename T>
std::string show(const T& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

const LinkDiagram& builtin(std::string_view name) {
  static const auto& corpus = builtin_corpus();
  for (const auto& e : corpus) {
    if (e.name == name) return e.diagram;
  }
  throw CorpusError("builtin corpus has no entry '" + std::string(name) + "'");
}

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---------------------------------------------------------------- families

void coloring_family(const std::vector<CorpusEntry>& corpus, const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string f = "coloring";
  tasks.push_back(guarded(f, "Col_n(U_m) = Z_n^m for n <= 7, m <= 4", [] {
    for (int n = 2; n <= 7; ++n) {
      for (int m = 1; m <= 4; ++m) {
        const auto g = col_group(LinkDiagram::unlink(m), n);
        if (!(g == AbelianGroup::elementary(n, m))) {
          return result(false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + g.to_string());
        }
      }
    }
    return result(true);
  }));
  tasks.push_back(guarded(f, "Col_5(4_1) = Z5 + Z5", [] {
    const auto g = col_group(builtin("4_1"), 5);
    return result(g == AbelianGroup::elementary(5, 2), g.to_string());
  }));
  tasks.push_back(guarded(f, "Col_5(3_1) = Z5", [] {
    const auto g = col_group(builtin("3_1"), 5);
    return result(g == AbelianGroup::elementary(5, 1), g.to_string());
  }));
  for (const auto& entry : corpus) {
    if (entry.diagram.arc_count() + entry.diagram.split_circles() > 7) continue;
    tasks.push_back(guarded(f, entry.name + ": Smith form agrees with brute force", [d = entry.diagram] {
      for (int n = 2; n <= 5; ++n) {
        const BigInt snf = col_group(d, n).order();
        const auto brute = brute_force_coloring_count(d, n);
        if (snf != brute) return result(false, "n=" + std::to_string(n) + ": " + show(snf) + " vs " + show(brute));
      }
      return result(true);
    }));
  }
  for (int n : {3, 4, 5}) {
    tasks.push_back(guarded(f, "Col_" + std::to_string(n) + " unchanged by sigma^" + std::to_string(n) + " insertion",
                            [o, n] { return check_coloring_power_moves(o.seed, o.instances, n); }));
  }
}

void kei_family(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string f = "kei";
  EnumerationOptions eo;
  eo.cap = o.cap;
  auto size_check = [&](int m, int n, int expected) {
    tasks.push_back(guarded(f, "|Q(" + std::to_string(m) + "," + std::to_string(n) + ")| = " + std::to_string(expected),
                            [eo, m, n, expected] {
                              const auto r = enumerate(free_burnside_presentation(m, n), eo);
                              if (!r.completed) return result(false, "cap reached");
                              return result(r.kei.size() == expected, "size " + std::to_string(r.kei.size()));
                            }));
  };
  size_check(2, 3, 3);
  size_check(3, 3, 9);
  size_check(4, 3, 81);
  size_check(3, 4, 96);
  tasks.push_back(guarded(f, "Q(2,n) is the dihedral Kei of order n for n <= 9", [eo] {
    for (int n = 2; n <= 9; ++n) {
      const auto r = enumerate(free_burnside_presentation(2, n), eo);
      if (!r.completed || !kei_isomorphic(r.kei, dihedral_kei(n))) {
        return result(false, "n=" + std::to_string(n));
      }
    }
    return result(true);
  }));
  tasks.push_back(guarded(f, "|Q(m,2)| = m for m <= 6", [eo] {
    for (int m = 1; m <= 6; ++m) {
      const auto r = enumerate(free_burnside_presentation(m, 2), eo);
      if (!r.completed || r.kei.size() != m) return result(false, "m=" + std::to_string(m));
    }
    return result(true);
  }));
  tasks.push_back(guarded(f, "|Q(1,n)| = 1", [eo] {
    for (int n = 2; n <= 9; ++n) {
      const auto r = enumerate(free_burnside_presentation(1, n), eo);
      if (!r.completed || r.kei.size() != 1) return result(false, "n=" + std::to_string(n));
    }
    return result(true);
  }));
  auto fundamental = [&](std::string name, LinkDiagram d, int expected) {
    tasks.push_back(guarded(f, "fundamental Kei of " + name + " has " + std::to_string(expected) + " elements",
                            [eo, d = std::move(d), expected] {
                              const auto r = enumerate(fundamental_kei(d), eo);
                              if (!r.completed) return result(false, "cap reached");
                              return result(r.kei.size() == expected, "size " + std::to_string(r.kei.size()));
                            }));
  };
  fundamental("3_1", builtin("3_1"), 3);
  fundamental("4_1", builtin("4_1"), 5);
  fundamental("N(5/2)", closure_diagram(TangleExpr::twist({2, 2}), ClosureKind::Numerator), 5);
  tasks.push_back(guarded(f, "BQ_5(9_40) = BQ_5(9_49) = core(Z5 + Z5)", [eo] {
    const auto a = burnside_kei(builtin("9_40"), 5, eo);
    const auto b = burnside_kei(builtin("9_49"), 5, eo);
    if (!a.completed || !b.completed) return result(false, "cap reached");
    const auto core = core_kei(direct_product(cyclic_group(5), cyclic_group(5)));
    const bool ok = a.kei.size() == 25 && b.kei.size() == 25 && kei_isomorphic(a.kei, b.kei).has_value() &&
                    kei_isomorphic(a.kei, core).has_value();
    return result(ok, "sizes " + std::to_string(a.kei.size()) + ", " + std::to_string(b.kei.size()));
  }));
  tasks.push_back(guarded(f, "BQ_3 unchanged by sigma^3 insertion",
                          [o] { return check_bq3_power_moves(o.seed, o.instances, o.cap); }));
}

void braid_family(std::vector<Task>& tasks) {
  const std::string f = "braid";
  tasks.push_back(guarded(f, "B_3/(sigma_1^5) has 600 elements and 45 classes", [] {
    const auto& g = coxeter_quotient();
    const auto census = conjugacy_census(g);
    const int shortish = census.classes_with_length_at_most(8);
    return result(g.order() == 600 && census.class_count == 45 && shortish >= 36,
                  "order " + std::to_string(g.order()) + ", classes " + std::to_string(census.class_count) +
                      ", length <= 8: " + std::to_string(shortish));
  }));
  tasks.push_back(guarded(f, "full-twist powers (s1 s2)^6k, k < 5, are distinct", [] {
    const auto& g = coxeter_quotient();
    std::vector<int> images;
    for (int k = 0; k < 5; ++k) images.push_back(g.image(parse_braid("1 2", 3).pow(6 * k)));
    std::sort(images.begin(), images.end());
    return result(std::adjacent_find(images.begin(), images.end()) == images.end());
  }));
  tasks.push_back(guarded(f, "5-move reduction identities", [] {
    const auto report = verify_five_move_identities();
    std::string failed;
    for (const auto& s : report.steps) {
      if (!s.passed) failed += (failed.empty() ? "" : ", ") + s.label;
    }
    return result(report.all_passed(), failed.empty() ? std::to_string(report.steps.size()) + " steps" : failed);
  }));
}

void tangle_family(const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string f = "tangle";
  tasks.push_back(guarded(f, "twist fractions", [] {
    const bool ok = fraction_of_twists({}) == rational_tangle(0, 1) &&
                    fraction_of_twists({2, 2}) == rational_tangle(5, 2) &&
                    fraction_of_twists({7}) == rational_tangle(7, 1) && rotate(rational_tangle(0, 1)).is_infinity() &&
                    rotate(rational_tangle(5, 2)) == rational_tangle(-2, 5);
    return result(ok);
  }));
  tasks.push_back(guarded(f, "rotation is an involution on fractions", [o] {
    auto rng = rng_for(o.seed, 11);
    for (int i = 0; i < o.instances; ++i) {
      const auto t = rational_tangle(uniform(rng, -40, 40), uniform(rng, 1, 40));
      if (!(rotate(rotate(t)) == t)) return result(false, t.to_string());
      if (!(fraction_of_twists(t.twist_word) == t)) return result(false, "twist word of " + t.to_string());
    }
    return result(true);
  }));
  tasks.push_back(guarded(f, "closures of the 0-tangle", [] {
    const auto num = closure_diagram(TangleExpr::zero(), ClosureKind::Numerator);
    const auto den = closure_diagram(TangleExpr::zero(), ClosureKind::Denominator);
    return result(num.component_count() == 2 && den.component_count() == 1);
  }));
  tasks.push_back(guarded(f, "|Col_5(N(5/2))| = 25, |Col_3(N(3))| = 9", [] {
    const auto a = col_group(closure_diagram(TangleExpr::twist({2, 2}), ClosureKind::Numerator), 5).order();
    const auto b = col_group(closure_diagram(TangleExpr::twist({3}), ClosureKind::Numerator), 3).order();
    return result(a == 25 && b == 9, show(a) + ", " + show(b));
  }));
  tasks.push_back(guarded(f, "embedding obstruction examples", [] {
    const auto split = parse_tangle("(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))");
    const bool ok = embedding_obstruction(split, builtin("unknot"), 5).obstructed &&
                    !embedding_obstruction(TangleExpr::zero(), builtin("unknot"), 5).obstructed &&
                    !embedding_obstruction(TangleExpr::twist({2, 2}), builtin("4_1"), 5).obstructed;
    return result(ok);
  }));
  tasks.push_back(guarded(f, "Col_5 unchanged by 5/2-moves", [o] { return check_tangle_moves(o.seed, o.instances, 5, 2); }));
  for (int n : {3, 4, 5}) {
    tasks.push_back(guarded(f, "Col_" + std::to_string(n) + " unchanged by " + std::to_string(n) + "/1-moves",
                            [o, n] { return check_tangle_moves(o.seed, o.instances, n, 1); }));
  }
  tasks.push_back(guarded(f, "Col_5 of rational closures depends on 5 | p",
                          [o] { return check_fraction_functoriality(o.seed, o.instances, 5); }));
}

void jones_family(const std::vector<CorpusEntry>& corpus, const VerifyOptions& o, std::vector<Task>& tasks) {
  const std::string f = "jones";
  tasks.push_back(guarded(f, "V(unknot) = 1", [] { return result(jones(builtin("unknot")) == LaurentPoly(1)); }));
  tasks.push_back(guarded(f, "V(U_n) = (-s - 1/s)^(n-1), nonzero at the root, n <= 5", [] {
    const LaurentPoly base = -LaurentPoly::power(1) - LaurentPoly::power(-1);
    for (int n = 1; n <= 5; ++n) {
      const auto v = jones(LinkDiagram::unlink(n));
      if (!(v == base.pow(static_cast<unsigned>(n - 1))) || eval_at_fifth_root(v).is_zero()) {
        return result(false, "n=" + std::to_string(n));
      }
    }
    return result(true);
  }));
  tasks.push_back(guarded(f, "V(4_1) vanishes at t = e^(i pi/5)", [] {
    const auto r = jones_at_fifth_root(builtin("4_1"));
    bool conjugates = true;
    for (int k : {3, 7, 9, 11, 13, 17, 19}) conjugates = conjugates && r.value.galois_conjugate(k).is_zero();
    return result(r.value.is_zero() && conjugates && r.verdict == FiveMoveVerdict::NotFiveMoveTrivializable,
                  format_in_t(r.polynomial));
  }));
  tasks.push_back(guarded(f, "3_1 is inconclusive", [] {
    return result(five_move_obstruction(builtin("3_1")) == FiveMoveVerdict::Inconclusive);
  }));
  for (const auto& entry : corpus) {
    if (entry.diagram.crossing_count() > kBracketCrossingCap) continue;
    tasks.push_back(guarded(f, entry.name + ": mirror inverts A, orientation-stable for knots", [d = entry.diagram] {
      if (!(kauffman_bracket(d.mirror()) == kauffman_bracket(d).scale_exponents(-1))) {
        return result(false, "mirror");
      }
      if (d.component_count() == 1 && d.crossing_count() > 0) {
        const bool rev[1] = {true};
        if (!(jones(d) == jones(d, rev))) return result(false, "orientation");
      }
      return result(true);
    }));
  }
  tasks.push_back(guarded(f, "fifth-root zero-ness unchanged by sigma^5 insertion",
                          [o] { return check_jones_power_moves(o.seed, o.instances); }));
}

void corpus_family(const std::vector<CorpusEntry>& corpus, std::vector<Task>& tasks) {
  const std::string f = "corpus";
  for (const auto& entry : corpus) {
    if (!entry.determinant) continue;
    tasks.push_back(guarded(f, entry.name + ": determinant " + std::to_string(*entry.determinant),
                            [d = entry.diagram, expected = *entry.determinant] {
                              const auto got = determinant(d);
                              return result(got == expected, "computed " + show(got));
                            }));
  }
}

}  // namespace

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> families = {"coloring", "kei", "braid", "tangle", "jones", "corpus"};
  return families;
}

std::vector<CheckResult> run_verification(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  const auto& all = verify_families();
  for (const auto& name : options.families) {
    if (std::find(all.begin(), all.end(), name) == all.end()) throw Error("unknown check family '" + name + "'");
  }
  auto selected = [&](const std::string& name) {
    return options.families.empty() ||
           std::find(options.families.begin(), options.families.end(), name) != options.families.end();
  };
  std::vector<Task> tasks;
  if (selected("coloring")) coloring_family(corpus, options, tasks);
  if (selected("kei")) kei_family(options, tasks);
  if (selected("braid")) braid_family(tasks);
  if (selected("tangle")) tangle_family(options, tasks);
  if (selected("jones")) jones_family(corpus, options, tasks);
  if (selected("corpus")) corpus_family(corpus, tasks);
  return run_pool(tasks, options.threads);
}

// ---------------------------------------------------------------- suites

BraidWord random_braid(std::mt19937_64& rng, int strands, int max_length) {
  const int length = uniform(rng, 1, max_length);
  std::vector<int> letters;
  for (int i = 0; i < length; ++i) {
    const int g = uniform(rng, 1, strands - 1);
    letters.push_back(uniform(rng, 0, 1) == 0 ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord insert_random_power(std::mt19937_64& rng, const BraidWord& w, int exponent) {
  const int g = uniform(rng, 1, w.strands() - 1);
  const auto at = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.length())));
  return w.spliced(at, BraidWord(w.strands(), {g}).pow(exponent));
}

TangleExpr random_tangle(std::mt19937_64& rng, int max_depth) {
  if (max_depth == 0 || uniform(rng, 0, 9) < 3) {
    switch (uniform(rng, 0, 6)) {
      case 0:
      case 1:
      case 2:
        return TangleExpr::zero();
      case 3:
        return TangleExpr::infinity();
      case 4:
        return TangleExpr::crossing(1);
      case 5:
        return TangleExpr::crossing(-1);
      default: {
        std::vector<long long> tw(static_cast<std::size_t>(uniform(rng, 1, 2)));
        for (auto& a : tw) a = uniform(rng, -2, 2);
        return TangleExpr::twist(std::move(tw));
      }
    }
  }
  const int i = uniform(rng, 0, 1);
  const int j = uniform(rng, 0, 1);
  auto a = random_tangle(rng, max_depth - 1);
  auto b = random_tangle(rng, max_depth - 1);
  return TangleExpr::comp(i, j, std::move(a), std::move(b));
}

std::uint64_t brute_force_coloring_count(const LinkDiagram& d, int n) {
  if (n < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(n));
  const auto m = coloring_matrix(d);
  double total = 1;
  for (int c = 0; c < m.cols; ++c) total *= n;
  if (total > 5e7) throw TooLarge("too many assignments for exhaustive coloring search");
  std::vector<int> x(static_cast<std::size_t>(m.cols), 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& row : m.entries) {
      long long s = 0;
      for (int c = 0; c < m.cols; ++c) s += static_cast<long long>(row[c]) * x[c];
      if (s % n != 0) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    int c = 0;
    while (c < m.cols && ++x[c] == n) x[c++] = 0;
    if (c == m.cols) break;
  }
  return count;
}

CheckResult check_coloring_power_moves(std::uint64_t seed, int instances, int n) {
  auto rng = rng_for(seed, 100 + static_cast<std::uint64_t>(n));
  for (int i = 0; i < instances; ++i) {
    const auto w = random_braid(rng, 3, 10);
    const int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    const auto moved = insert_random_power(rng, w, sign * n);
    const auto before = col_group(braid_closure(w), n);
    const auto after = col_group(braid_closure(moved), n);
    if (!(before == after)) {
      return result(false, w.to_string() + " -> " + moved.to_string() + ": " + before.to_string() + " vs " +
                               after.to_string());
    }
  }
  return result(true, std::to_string(instances) + " instances");
}

CheckResult check_tangle_moves(std::uint64_t seed, int instances, long long n, long long q) {
  auto rng = rng_for(seed, 200 + static_cast<std::uint64_t>(n * 16 + q));
  int moves = 0;
  for (int i = 0; i < instances; ++i) {
    const auto t = random_tangle(rng, 4);
    for (const auto& site : zero_sites(t)) {
      for (int sign : {1, -1}) {
        const auto moved = apply_rational_move(t, site, n, q, sign);
        for (auto kind : {ClosureKind::Numerator, ClosureKind::Denominator}) {
          const auto before = col_group(closure_diagram(t, kind), n);
          const auto after = col_group(closure_diagram(moved, kind), n);
          if (!(before == after)) {
            return result(false, serialize_tangle(t) + " at '" + site + "' -> " + serialize_tangle(moved) + " (" +
                                     to_string(kind) + "): " + before.to_string() + " vs " + after.to_string());
          }
        }
        ++moves;
      }
    }
  }
  return result(true, std::to_string(instances) + " instances, " + std::to_string(moves) + " moves");
}

CheckResult check_fraction_functoriality(std::uint64_t seed, int instances, int n) {
  auto rng = rng_for(seed, 300 + static_cast<std::uint64_t>(n));
  for (int i = 0; i < instances; ++i) {
    std::vector<long long> tw(static_cast<std::size_t>(uniform(rng, 1, 5)));
    for (auto& a : tw) a = uniform(rng, -4, 4);
    const auto fr = fraction_of_twists(tw);
    if (fr.is_infinity()) continue;
    const auto order = col_group(closure_diagram(TangleExpr::twist(tw), ClosureKind::Numerator), n).order();
    const bool nonconstant = order > n;
    const bool predicted = boost::integer::gcd(BigInt(fr.p), BigInt(n)) > 1;
    if (nonconstant != predicted) {
      return result(false, "twist word of " + fr.to_string() + ": |Col| = " + show(order));
    }
  }
  return result(true, std::to_string(instances) + " instances");
}

CheckResult check_jones_power_moves(std::uint64_t seed, int instances) {
  auto rng = rng_for(seed, 400);
  for (int i = 0; i < instances; ++i) {
    const auto w = random_braid(rng, uniform(rng, 2, 4), 8);
    const int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    const auto moved = insert_random_power(rng, w, sign * 5);
    const bool before = eval_at_fifth_root(jones(braid_closure(w))).is_zero();
    const bool after = eval_at_fifth_root(jones(braid_closure(moved))).is_zero();
    if (before != after) return result(false, w.to_string() + " -> " + moved.to_string());
  }
  return result(true, std::to_string(instances) + " instances");
}

CheckResult check_bq3_power_moves(std::uint64_t seed, int instances, std::size_t cap) {
  auto rng = rng_for(seed, 500);
  EnumerationOptions eo;
  eo.cap = cap;
  int skipped = 0;
  for (int i = 0; i < instances; ++i) {
    const auto w = random_braid(rng, uniform(rng, 2, 4), 6);
    const int sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
    const auto moved = insert_random_power(rng, w, sign * 3);
    const auto a = burnside_kei(braid_closure(w), 3, eo);
    const auto b = burnside_kei(braid_closure(moved), 3, eo);
    if (!a.completed || !b.completed) {
      ++skipped;
      continue;
    }
    if (!kei_isomorphic(a.kei, b.kei)) {
      return result(false, w.to_string() + " -> " + moved.to_string() + ": sizes " + std::to_string(a.kei.size()) +
                               ", " + std::to_string(b.kei.size()));
    }
  }
  return result(true, std::to_string(instances) + " instances, " + std::to_string(skipped) + " over cap");
}

}  // namespace tanglekit
