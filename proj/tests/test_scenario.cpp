#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "deon/scenario.hpp"
#include "support/oracles.hpp"

using namespace deon;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("minimal scenario") {
  Scenario s = parse_scenario("norm n1: O{p}\nquery q: consistent?");
  CHECK(s.norms.size() == 1);
  CHECK(s.facts.empty());
  REQUIRE(s.queries.size() == 1);
  CHECK(s.queries[0].kind == QueryKind::Consistent);
  CHECK_FALSE(s.default_logic);
}

TEST_CASE("logic line, comments, blank lines") {
  Scenario s = parse_scenario("# header\n\nlogic ddl\nfact f: p # note\nquery g: entails? O{p | q}\n");
  CHECK(s.default_logic == Logic::Ddl);
  CHECK(s.facts[0].formula == parse("p"));
  CHECK(*s.queries[0].goal == parse("O{p | q}"));
}

TEST_CASE("errors") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_scenario(text);
    } catch (const ScenarioError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("norm n1: p\nnorm n2 p\nquery q: consistent?") == 2);
  CHECK(line_of("norm n: p\nnorm n: q\nquery q: consistent?") == 2);
  CHECK(line_of("norm n: p\n") != 0);
  CHECK(line_of("query q: consistent?\nquery q: consistent?") == 2);
  CHECK(line_of("logic sdl\nlogic ddl\nquery q: consistent?") == 2);
  CHECK(line_of("logic kd45\nquery q: consistent?") == 1);
  CHECK(line_of("norm n: p &\nquery q: consistent?") == 1);
  CHECK(line_of("query q: entails?\n") == 1);
  CHECK(line_of("query q: valid?\n") == 1);
  CHECK(line_of("rule r: p\nquery q: consistent?") == 1);
  CHECK(line_of("logic sdl\nquery q: consistent?\nnorm n: O{a | b}") == 3);
  // same id in different kinds is allowed
  CHECK(line_of("norm x: p\nfact x: p\nquery x: consistent?") == 0);
}

TEST_CASE("bundled contrary-to-duty scenario") {
  Scenario s = gdpr_scenario();
  CHECK(s.name == "gdpr_ctd");
  CHECK(s.norms.size() == 3);
  CHECK(s.facts.size() == 1);
  CHECK(s.queries.size() == 4);
  CHECK(s.atoms() == std::set<std::string>{"erase_data", "kill_boss", "process_data_lawfully"});
  CHECK(s.norms[0].formula == parse("O{process_data_lawfully}"));
  CHECK(s.norms[1].formula == parse("O{process_data_lawfully -> ~erase_data}"));
  CHECK(s.norms[2].formula == parse("~process_data_lawfully -> O{erase_data}"));
  CHECK(s.facts[0].formula == parse("~process_data_lawfully"));
  // kill_boss only in queries
  for (const auto& n : s.norms) CHECK_FALSE(atoms(n.formula).count("kill_boss"));
  CHECK(parse_scenario(print_scenario(s), s.name) == s);
}

TEST_CASE("bundled file equals the built-in scenario") {
  Scenario file = parse_scenario(slurp(std::string(DEON_CORPUS_DIR) + "/gdpr_ctd.deon"), "gdpr_ctd");
  CHECK(file == gdpr_scenario());
}

TEST_CASE("round trip on random scenarios") {
  std::mt19937 rng(21);
  testing::FormulaGen gen{rng, {"p", "q", "r"}, true};
  for (int i = 0; i < 300; ++i) {
    Scenario s;
    s.name = "s";
    if (i % 3 == 0) s.default_logic = Logic::Ddl;
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) s.norms.push_back({"n" + std::to_string(k), gen(4)});
    for (int k = 0; k < static_cast<int>(rng() % 3); ++k) s.facts.push_back({"f" + std::to_string(k), gen(4)});
    s.queries.push_back({"c", QueryKind::Consistent, std::nullopt});
    s.queries.push_back({"g", QueryKind::Entails, gen(3)});
    std::string text = print_scenario(s);
    REQUIRE_MESSAGE(parse_scenario(text, "s") == s, text);
  }
}

TEST_CASE("logic syntax check") {
  Scenario s = parse_scenario("norm n: O{a | b}\nquery q: consistent?");
  CHECK_NOTHROW(require_logic_syntax(s, Logic::Ddl));
  CHECK_THROWS_AS(require_logic_syntax(s, Logic::Sdl), UnsupportedConstruct);
}
