#include "commands.hpp"

#include <memory>
#include <optional>
#include <sstream>

#include "diagram_input.hpp"
#include "tanglekit/braid_engine.hpp"
#include "tanglekit/corpus.hpp"
#include "tanglekit/errors.hpp"
#include "tanglekit/fox_coloring.hpp"
#include "tanglekit/jones.hpp"
#include "tanglekit/kei.hpp"
#include "tanglekit/kei_presentation.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/verify.hpp"

namespace tanglekit::cli {

namespace {

Json group_json(const AbelianGroup& g) {
  Json orders = Json::array();
  for (const auto& o : g.cyclic_orders) orders.push_back(big(o));
  return orders;
}

Json kei_table_json(const FiniteKei& k) {
  Json rows = Json::array();
  for (int a = 0; a < k.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < k.size(); ++b) row.push_back(k.op(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json enumeration_json(const EnumerationResult& r, bool with_table) {
  Json j;
  j["completed"] = r.completed;
  j["cap"] = r.cap;
  j["peak_rows"] = r.peak_rows;
  j["deductions"] = r.deductions;
  if (r.completed) {
    j["size"] = r.kei.size();
    j["generator_images"] = r.generator_images;
    if (with_table) j["table"] = kei_table_json(r.kei);
  }
  return j;
}

Json word_json(const std::vector<int>& letters) { return letters; }

std::vector<CorpusEntry> corpus_from(const std::string& path) {
  return path.empty() ? builtin_corpus() : load_corpus_file(path);
}

// ---------------------------------------------------------------- color

void add_color(CLI::App& app, Runner& selected) {
  auto* sub = app.add_subcommand("color", "Fox n-coloring group of a diagram");
  auto diagram = std::make_shared<std::string>();
  auto n = std::make_shared<long long>(5);
  sub->add_option("diagram", *diagram, "corpus name, U<m>, braid:<s>:<word>, PD file or inline PD")->required();
  sub->add_option("--n", *n, "modulus")->capture_default_str();
  sub->callback([&selected, diagram, n] {
    selected = [diagram, n] {
      Report r;
      r.command = "color";
      const auto d = resolve_diagram(*diagram);
      r.inputs = {{"diagram", diagram_summary(d)}, {"n", *n}};
      const auto g = col_group(d.diagram, *n);
      r.results = {{"group", group_json(g)},
                   {"group_text", g.to_string()},
                   {"order", big(g.order())},
                   {"nontrivial", has_nontrivial_colorings(d.diagram, *n)}};
      return r;
    };
  });
}

// ---------------------------------------------------------------- kei

void add_kei(CLI::App& app, Runner& selected) {
  auto* kei = app.add_subcommand("kei", "finite Kei tables and presentations");
  kei->require_subcommand(1);

  auto* check = kei->add_subcommand("check", "check the Kei axioms of a table file");
  auto file = std::make_shared<std::string>();
  check->add_option("file", *file, "table file")->required();
  check->callback([&selected, file] {
    selected = [file] {
      Report r;
      r.command = "kei check";
      r.inputs = {{"file", *file}};
      const auto k = parse_kei_table(read_file(*file));
      const auto violations = check_axioms(k);
      Json first = Json::array();
      for (std::size_t i = 0; i < violations.size() && i < 10; ++i) {
        const auto& v = violations[i];
        first.push_back({{"axiom", v.axiom}, {"a", v.a}, {"b", v.b}, {"c", v.c}});
      }
      r.results = {{"size", k.size()}, {"violation_count", violations.size()}, {"violations", first}};
      r.check("Kei axioms hold", violations.empty());
      return r;
    };
  });

  auto* iso = kei->add_subcommand("iso", "decide isomorphism of two table files");
  auto f1 = std::make_shared<std::string>();
  auto f2 = std::make_shared<std::string>();
  iso->add_option("first", *f1)->required();
  iso->add_option("second", *f2)->required();
  iso->callback([&selected, f1, f2] {
    selected = [f1, f2] {
      Report r;
      r.command = "kei iso";
      r.inputs = {{"first", *f1}, {"second", *f2}};
      const auto a = parse_kei_table(read_file(*f1));
      const auto b = parse_kei_table(read_file(*f2));
      const auto map = kei_isomorphic(a, b);
      r.results = {{"isomorphic", map.has_value()}};
      if (map) r.results["map"] = *map;
      return r;
    };
  });

  auto* en = kei->add_subcommand("enum", "enumerate a presented Kei");
  auto pfile = std::make_shared<std::string>();
  auto cap = std::make_shared<std::size_t>(cap_from_environment());
  auto pairs_only = std::make_shared<bool>(false);
  auto table = std::make_shared<bool>(false);
  en->add_option("file", *pfile, "presentation file")->required();
  en->add_option("--cap", *cap, "element cap (default TANGLEKIT_CAP or 20000)");
  en->add_flag("--generator-pairs-only", *pairs_only, "impose r_n only between generators");
  en->add_flag("--table", *table, "include the operation table");
  en->callback([&selected, pfile, cap, pairs_only, table] {
    selected = [pfile, cap, pairs_only, table] {
      Report r;
      r.command = "kei enum";
      const auto p = parse_presentation(read_file(*pfile));
      EnumerationOptions o;
      o.cap = *cap;
      o.burnside_scope = *pairs_only ? BurnsideScope::GeneratorPairsOnly : BurnsideScope::AllPairs;
      r.inputs = {{"file", *pfile},
                  {"generators", p.generator_count},
                  {"relations", p.relations.size()},
                  {"burnside", p.burnside_exponent ? Json(*p.burnside_exponent) : Json(nullptr)},
                  {"burnside_scope", *pairs_only ? "generator-pairs" : "all-pairs"},
                  {"cap", *cap}};
      const auto res = enumerate(p, o);
      r.results = enumeration_json(res, *table);
      r.check("enumeration completed", res.completed);
      return r;
    };
  });

  auto* bq = kei->add_subcommand("burnside", "Burnside Kei BQ_n of a diagram");
  auto diagram = std::make_shared<std::string>();
  auto n = std::make_shared<int>(5);
  auto bcap = std::make_shared<std::size_t>(cap_from_environment());
  auto exp = std::make_shared<bool>(false);
  auto btable = std::make_shared<bool>(false);
  bq->add_option("diagram", *diagram)->required();
  bq->add_option("--n", *n)->capture_default_str();
  bq->add_option("--cap", *bcap, "element cap (default TANGLEKIT_CAP or 20000)");
  bq->add_flag("--export", *exp, "include the Kei and core group presentations");
  bq->add_flag("--table", *btable, "include the operation table");
  bq->callback([&selected, diagram, n, bcap, exp, btable] {
    selected = [diagram, n, bcap, exp, btable] {
      Report r;
      r.command = "kei burnside";
      const auto d = resolve_diagram(*diagram);
      r.inputs = {{"diagram", diagram_summary(d)}, {"n", *n}, {"cap", *bcap}};
      EnumerationOptions o;
      o.cap = *bcap;
      const auto res = burnside_kei(d.diagram, *n, o);
      r.results = enumeration_json(res, *btable);
      if (*exp) {
        auto p = fundamental_kei(d.diagram);
        p.burnside_exponent = *n;
        r.results["presentation"] = serialize_presentation(p);
        r.results["core_group"] = core_group_presentation(d.diagram).to_string();
      }
      r.check("enumeration completed", res.completed);
      return r;
    };
  });
}

// ---------------------------------------------------------------- braid

void add_braid(CLI::App& app, Runner& selected) {
  auto* braid = app.add_subcommand("braid", "3-braids and the quotient B_3/(sigma_1^k)");
  braid->require_subcommand(1);

  auto* image = braid->add_subcommand("image", "Burau matrix and quotient image of a 3-braid");
  auto word = std::make_shared<std::string>();
  image->add_option("word", *word, "signed letters, e.g. \"1 1 2 -1\"")->required();
  image->callback([&selected, word] {
    selected = [word] {
      Report r;
      r.command = "braid image";
      const auto w = parse_braid(*word, 3);
      r.inputs = {{"word", w.to_string()}};
      const auto m = burau_image(w);
      const auto& g = coxeter_quotient();
      const int x = g.image(w);
      const auto census = conjugacy_census(g);
      Json entries = Json::array();
      for (const auto& e : m.e) entries.push_back(e.to_string("t"));
      r.results = {{"burau", entries},
                   {"quotient_element", x},
                   {"quotient_word", word_json(g.word(x))},
                   {"element_order", g.element_order(x)},
                   {"conjugacy_class", census.class_of[x]}};
      return r;
    };
  });

  auto* order = braid->add_subcommand("quotient-order", "order of B_3/(sigma_1^k)");
  auto k = std::make_shared<int>(5);
  order->add_option("--k", *k, "power of sigma_1")->capture_default_str();
  order->callback([&selected, k] {
    selected = [k] {
      Report r;
      r.command = "braid quotient-order";
      r.inputs = {{"k", *k}};
      const auto g = b3_power_quotient(*k);
      r.results = {{"order", g.order()}};
      if (*k == 5) r.check("order is 600", g.order() == 600);
      return r;
    };
  });

  auto* census = braid->add_subcommand("census", "conjugacy classes of B_3/(sigma_1^5)");
  census->callback([&selected] {
    selected = [] {
      Report r;
      r.command = "braid census";
      const auto& g = coxeter_quotient();
      const auto c = conjugacy_census(g);
      Json classes = Json::array();
      for (int i = 0; i < c.class_count; ++i) {
        classes.push_back(
            {{"size", c.class_size[i]}, {"min_length", c.min_length[i]}, {"representative", word_json(c.representative[i])}});
      }
      const int short_classes = c.classes_with_length_at_most(8);
      r.results = {{"order", g.order()},
                   {"class_count", c.class_count},
                   {"classes_with_length_at_most_8", short_classes},
                   {"classes", classes}};
      r.check("order is 600", g.order() == 600);
      r.check("45 conjugacy classes", c.class_count == 45);
      r.check("at least 36 classes of length <= 8", short_classes >= 36);
      return r;
    };
  });

  auto* prop = braid->add_subcommand("verify-prop27", "check the 5-move reduction identities for 3-braids");
  prop->callback([&selected] {
    selected = [] {
      Report r;
      r.command = "braid verify-prop27";
      const auto report = verify_five_move_identities();
      Json steps = Json::array();
      for (const auto& s : report.steps) {
        Json step = {{"label", s.label},
                     {"kind", to_string(s.kind)},
                     {"lhs", s.lhs.to_string()},
                     {"rhs", s.rhs.to_string()},
                     {"passed", s.passed}};
        if (!s.detail.empty()) step["detail"] = s.detail;
        steps.push_back(std::move(step));
        r.check(s.label, s.passed);
      }
      r.results = {{"steps", steps}};
      return r;
    };
  });
}

// ---------------------------------------------------------------- tangle

Json closure_json(const LinkDiagram& d) {
  Json lines = Json::array();
  std::istringstream in(serialize_pd(d));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(line);
  }
  return {{"crossings", d.crossing_count()},
          {"arcs", d.arc_count()},
          {"components", d.component_count()},
          {"pd", lines}};
}

void add_tangle(CLI::App& app, Runner& selected) {
  auto* tangle = app.add_subcommand("tangle", "algebraic tangle expressions");
  tangle->require_subcommand(1);

  auto* closure = tangle->add_subcommand("closure", "PD diagram of a closure");
  auto expr = std::make_shared<std::string>();
  auto kind = std::make_shared<std::string>("num");
  closure->add_option("expr", *expr, "e.g. \"(comp 0 1 (tw 2 2) x+)\"")->required();
  closure->add_option("--kind", *kind, "num or den")->capture_default_str();
  closure->callback([&selected, expr, kind] {
    selected = [expr, kind] {
      Report r;
      r.command = "tangle closure";
      const auto t = parse_tangle(*expr);
      const auto k = parse_closure_kind(*kind);
      r.inputs = {{"expr", serialize_tangle(t)}, {"kind", to_string(k)}};
      const auto f = t.fraction();
      r.results = closure_json(closure_diagram(t, k));
      r.results["fraction"] = f ? Json(f->to_string()) : Json(nullptr);
      return r;
    };
  });

  auto* move = tangle->add_subcommand("move", "rational n/q-move at a 0-tangle leaf");
  auto mexpr = std::make_shared<std::string>();
  auto site = std::make_shared<std::string>();
  auto n = std::make_shared<long long>(5);
  auto q = std::make_shared<long long>(2);
  auto sign = std::make_shared<int>(1);
  move->add_option("expr", *mexpr)->required();
  move->add_option("--site", *site, "leaf path of 0/1 characters (empty for the root)");
  move->add_option("--n", *n)->capture_default_str();
  move->add_option("--q", *q)->capture_default_str();
  move->add_option("--sign", *sign, "+1 or -1")->capture_default_str();
  move->callback([&selected, mexpr, site, n, q, sign] {
    selected = [mexpr, site, n, q, sign] {
      Report r;
      r.command = "tangle move";
      const auto t = parse_tangle(*mexpr);
      r.inputs = {{"expr", serialize_tangle(t)}, {"site", *site}, {"n", *n}, {"q", *q}, {"sign", *sign}};
      const auto moved = apply_rational_move(t, *site, *n, *q, *sign);
      r.results = {{"expr", serialize_tangle(moved)}, {"zero_sites", zero_sites(moved)}};
      return r;
    };
  });

  auto* obstruct = tangle->add_subcommand("obstruct", "coloring obstruction to embedding a tangle in a link");
  auto oexpr = std::make_shared<std::string>();
  auto target = std::make_shared<std::string>();
  auto on = std::make_shared<long long>(5);
  obstruct->add_option("expr", *oexpr)->required();
  obstruct->add_option("target", *target, "target diagram")->required();
  obstruct->add_option("--n", *on)->capture_default_str();
  obstruct->callback([&selected, oexpr, target, on] {
    selected = [oexpr, target, on] {
      Report r;
      r.command = "tangle obstruct";
      const auto t = parse_tangle(*oexpr);
      const auto d = resolve_diagram(*target);
      r.inputs = {{"expr", serialize_tangle(t)}, {"target", diagram_summary(d)}, {"n", *on}};
      const auto v = embedding_obstruction(t, d.diagram, *on);
      r.results = {{"verdict", v.obstructed ? "obstructed" : "inconclusive"},
                   {"interior_colorings", big(v.interior_colorings)},
                   {"target_colorings", big(v.target_colorings)}};
      return r;
    };
  });
}

// ---------------------------------------------------------------- jones

void add_jones(CLI::App& app, Runner& selected) {
  auto* j = app.add_subcommand("jones", "Jones polynomial");
  auto diagram = std::make_shared<std::string>();
  j->add_option("diagram", *diagram)->required();
  j->callback([&selected, diagram] {
    selected = [diagram] {
      Report r;
      r.command = "jones";
      const auto d = resolve_diagram(*diagram);
      r.inputs = {{"diagram", diagram_summary(d)}};
      const auto v = jones(d.diagram);
      r.results = {{"polynomial", format_in_t(v)},
                   {"polynomial_in_s", v.to_string("s")},
                   {"bracket", kauffman_bracket(d.diagram).to_string("A")}};
      return r;
    };
  });

  auto* j5 = app.add_subcommand("jones5", "Jones polynomial at t = e^(i pi/5) and the 5-move verdict");
  auto diagram5 = std::make_shared<std::string>();
  j5->add_option("diagram", *diagram5)->required();
  j5->callback([&selected, diagram5] {
    selected = [diagram5] {
      Report r;
      r.command = "jones5";
      const auto d = resolve_diagram(*diagram5);
      r.inputs = {{"diagram", diagram_summary(d)}};
      const auto res = jones_at_fifth_root(d.diagram);
      Json coords = Json::array();
      for (const auto& c : res.value.coordinates()) coords.push_back(big(c));
      r.results = {{"polynomial", format_in_t(res.polynomial)},
                   {"value_coordinates", coords},
                   {"is_zero", res.value.is_zero()},
                   {"verdict", to_string(res.verdict)}};
      return r;
    };
  });
}

// ---------------------------------------------------------------- corpus

void add_corpus(CLI::App& app, Runner& selected) {
  auto* corpus = app.add_subcommand("corpus", "embedded or external diagram corpus");
  corpus->require_subcommand(1);

  auto* verify = corpus->add_subcommand("verify", "run the verification suite");
  auto file = std::make_shared<std::string>();
  auto only = std::make_shared<std::vector<std::string>>();
  auto seed = std::make_shared<std::uint64_t>(kDefaultSeed);
  auto instances = std::make_shared<int>(kDefaultInstances);
  auto threads = std::make_shared<unsigned>(0);
  auto cap = std::make_shared<std::size_t>(cap_from_environment());
  verify->add_option("--corpus", *file, "corpus file (default: embedded corpus)");
  verify->add_option("--only", *only, "check families to run")
      ->check(CLI::IsMember(verify_families()))
      ->delimiter(',');
  verify->add_option("--seed", *seed)->capture_default_str();
  verify->add_option("--instances", *instances, "instances per property suite")->capture_default_str();
  verify->add_option("--threads", *threads, "worker threads (0 = hardware)");
  verify->add_option("--cap", *cap, "Kei enumeration cap (default TANGLEKIT_CAP or 20000)");
  verify->callback([&selected, file, only, seed, instances, threads, cap] {
    selected = [file, only, seed, instances, threads, cap] {
      Report r;
      r.command = "corpus verify";
      r.inputs = {{"corpus", file->empty() ? "embedded" : *file},
                  {"only", *only},
                  {"seed", *seed},
                  {"instances", *instances},
                  {"cap", *cap}};
      const auto entries = corpus_from(*file);
      VerifyOptions o;
      o.families = *only;
      o.seed = *seed;
      o.instances = *instances;
      o.threads = *threads;
      o.cap = *cap;
      const auto checks = run_verification(entries, o);
      Json families = Json::object();
      for (const auto& c : checks) {
        auto& fam = families[c.family];
        if (fam.is_null()) fam = {{"passed", 0}, {"failed", 0}};
        fam[c.passed ? "passed" : "failed"] = fam[c.passed ? "passed" : "failed"].get<int>() + 1;
        r.check(c.family + ": " + c.name, c.passed, c.detail);
      }
      r.results = {{"entries", entries.size()}, {"checks", checks.size()}, {"families", families}};
      return r;
    };
  });

  auto* list = corpus->add_subcommand("list", "list corpus entries");
  auto lfile = std::make_shared<std::string>();
  list->add_option("--corpus", *lfile, "corpus file (default: embedded corpus)");
  list->callback([&selected, lfile] {
    selected = [lfile] {
      Report r;
      r.command = "corpus list";
      r.inputs = {{"corpus", lfile->empty() ? "embedded" : *lfile}};
      Json entries = Json::array();
      for (const auto& e : corpus_from(*lfile)) {
        Json j = diagram_summary({e.name, e.diagram});
        j["determinant"] = e.determinant ? Json(*e.determinant) : Json(nullptr);
        entries.push_back(std::move(j));
      }
      r.results = {{"entries", entries}};
      return r;
    };
  });
}

// ---------------------------------------------------------------- invariants

void add_invariants(CLI::App& app, Runner& selected) {
  auto* inv = app.add_subcommand("invariants", "bundle of invariants of one diagram");
  auto diagram = std::make_shared<std::string>();
  auto cap = std::make_shared<std::size_t>(cap_from_environment());
  inv->add_option("diagram", *diagram)->required();
  inv->add_option("--cap", *cap, "Kei enumeration cap (default TANGLEKIT_CAP or 20000)");
  inv->callback([&selected, diagram, cap] {
    selected = [diagram, cap] {
      Report r;
      r.command = "invariants";
      const auto d = resolve_diagram(*diagram);
      r.inputs = {{"diagram", diagram_summary(d)}, {"cap", *cap}};
      const auto c3 = col_group(d.diagram, 3);
      const auto c5 = col_group(d.diagram, 5);
      EnumerationOptions o;
      o.cap = *cap;
      const auto bq = burnside_kei(d.diagram, 5, o);
      r.results["components"] = d.diagram.component_count();
      r.results["col3"] = {{"group", group_json(c3)}, {"nontrivial", has_nontrivial_colorings(d.diagram, 3)}};
      r.results["col5"] = {{"group", group_json(c5)}, {"nontrivial", has_nontrivial_colorings(d.diagram, 5)}};
      r.results["bq5"] = {{"completed", bq.completed}, {"size", bq.completed ? Json(bq.kei.size()) : Json(nullptr)}};
      if (d.diagram.crossing_count() <= kBracketCrossingCap) {
        const auto j5 = jones_at_fifth_root(d.diagram);
        r.results["jones5"] = {{"is_zero", j5.value.is_zero()}, {"verdict", to_string(j5.verdict)}};
      } else {
        r.results["jones5"] = nullptr;
      }
      return r;
    };
  });
}

}  // namespace

void add_commands(CLI::App& app, Runner& selected) {
  add_color(app, selected);
  add_kei(app, selected);
  add_braid(app, selected);
  add_tangle(app, selected);
  add_jones(app, selected);
  add_corpus(app, selected);
  add_invariants(app, selected);
}

}  // namespace tanglekit::cli
