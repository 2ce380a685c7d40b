#include <doctest.h>

#include <random>

#include "deon/scenario.hpp"
#include "deon/search.hpp"
#include "deon/tableau.hpp"
#include "support/oracles.hpp"

using namespace deon;

namespace {

std::vector<Formula> fs(std::initializer_list<const char*> texts) {
  std::vector<Formula> out;
  for (const char* t : texts) out.push_back(parse(t));
  return out;
}

void check_model(const TableauResult& r, const std::vector<Formula>& globals, const std::vector<Formula>& locals) {
  REQUIRE(r.model);
  const KripkeModel& m = *r.model;
  CHECK(m.well_formed());
  CHECK(is_serial(m));
  for (const auto& g : globals) {
    for (World w = 0; w < m.world_count; ++w) CHECK(testing::naive_eval_sdl(m, w, g));
  }
  for (const auto& l : locals) CHECK(testing::naive_eval_sdl(m, m.current_world, l));
}

}  // namespace

TEST_CASE("propositional clash") {
  auto r = tableau_decide({}, fs({"p & ~p"}), std::nullopt);
  CHECK(r.status == TableauStatus::Unsatisfiable);
  REQUIRE(r.proof);
  CHECK(r.proof->replay());
}

TEST_CASE("D axiom instance closes through the serial successor") {
  auto r = tableau_decide({}, fs({"O{p} & O{~p}"}), std::nullopt);
  CHECK(r.status == TableauStatus::Unsatisfiable);
  REQUIRE(r.proof);
  CHECK(r.proof->replay());
  bool serial_step = false;
  for (const auto& s : r.proof->steps) serial_step |= s.rule == ClosedTableau::Rule::Successor && s.term == -1;
  CHECK(serial_step);
}

TEST_CASE("contrary-to-duty set is unsatisfiable in D") {
  Scenario s = gdpr_scenario();
  auto r = tableau_decide(s.norm_formulas(), s.fact_formulas(), std::nullopt);
  CHECK(r.status == TableauStatus::Unsatisfiable);
  REQUIRE(r.proof);
  CHECK(r.proof->replay());
  CHECK_FALSE(r.proof->render().empty());
}

TEST_CASE("entailment and non-entailment") {
  auto yes = tableau_decide(fs({"p -> O{q}"}), fs({"p"}), parse("O{q}"));
  CHECK(yes.status == TableauStatus::Entailed);
  REQUIRE(yes.proof);
  CHECK(yes.proof->replay());

  auto no = tableau_decide(fs({"O{p}"}), {}, parse("p"));
  CHECK(no.status == TableauStatus::NotEntailed);
  REQUIRE(no.model);
  CHECK(testing::naive_eval_sdl(*no.model, no.model->current_world, parse("O{p}")));
  CHECK_FALSE(testing::naive_eval_sdl(*no.model, no.model->current_world, parse("p")));

  // globals hold at successors too
  auto global = tableau_decide(fs({"q"}), {}, parse("O{q}"));
  CHECK(global.status == TableauStatus::Entailed);
  auto local = tableau_decide({}, fs({"q"}), parse("O{q}"));
  CHECK(local.status == TableauStatus::NotEntailed);
}

TEST_CASE("satisfiable labels yield verified models") {
  auto g = fs({"p -> O{~p}", "O{(q | p)}"});
  auto l = fs({"p", "~O{~q}"});
  auto r = tableau_decide(g, l, std::nullopt);
  REQUIRE(r.status == TableauStatus::Satisfiable);
  check_model(r, g, l);
}

TEST_CASE("dyadic input is rejected") {
  CHECK_THROWS_AS(tableau_decide({}, fs({"O{p | q}"}), std::nullopt), UnsupportedConstruct);
}

TEST_CASE("node budget gives an explicit limit") {
  TableauConfig tiny{1};
  auto r = tableau_decide(fs({"p | q", "O{(p | r)} | O{~p}"}), fs({"~O{p}", "~O{q}"}), std::nullopt, tiny);
  CHECK(r.status == TableauStatus::Limit);
}

TEST_CASE("tableau agrees with bounded search and with the model oracle") {
  std::mt19937 rng(2024);
  testing::FormulaGen gen{rng, {"p", "q"}};
  gen.equiv = false;
  auto models = testing::all_serial_models(1, {"p", "q"});
  auto two = testing::all_serial_models(2, {"p", "q"});
  models.insert(models.end(), two.begin(), two.end());
  SearchConfig cfg = SearchConfig::defaults(Logic::Sdl);
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> g, l;
    int ng = static_cast<int>(rng() % 3), nl = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < ng; ++k) g.push_back(gen(3));
    for (int k = 0; k < nl; ++k) l.push_back(gen(3));
    auto r = tableau_decide(g, l, std::nullopt);
    REQUIRE(r.status != TableauStatus::Limit);
    if (r.status == TableauStatus::Satisfiable) {
      check_model(r, g, l);
    } else {
      REQUIRE(r.proof);
      CHECK(r.proof->replay());
    }
    auto found = find_model(Logic::Sdl, g, l, cfg);
    if (found.status == SearchStatus::Found) CHECK(r.status == TableauStatus::Satisfiable);
    bool small = false;
    for (const auto& m : models) {
      bool ok = true;
      for (const auto& f : g) {
        for (World w = 0; w < m.world_count && ok; ++w) ok = testing::naive_eval_sdl(m, w, f);
      }
      for (const auto& f : l) ok = ok && testing::naive_eval_sdl(m, 0, f);
      if (ok) {
        small = true;
        break;
      }
    }
    if (small) CHECK(r.status == TableauStatus::Satisfiable);
  }
}

TEST_CASE("D schema on random formulas") {
  std::mt19937 rng(17);
  testing::FormulaGen gen{rng, {"p", "q", "r"}};
  for (int i = 0; i < 100; ++i) {
    Formula phi = gen(4);
    Formula d = Formula::impl(Formula::obl(phi), Formula::neg(Formula::obl(Formula::neg(phi))));
    auto r = tableau_decide({}, {}, d);
    REQUIRE_MESSAGE(r.status == TableauStatus::Entailed, print(d));
    REQUIRE(r.proof);
    CHECK(r.proof->replay());
  }
}

TEST_CASE("replay rejects a tampered proof") {
  auto r = tableau_decide({}, fs({"O{p} & O{~p}"}), std::nullopt);
  REQUIRE(r.proof);
  ClosedTableau bad = *r.proof;
  for (auto& s : bad.steps) {
    if (s.rule == ClosedTableau::Rule::Clash) s.label.clear();
  }
  CHECK_FALSE(bad.replay());
}
