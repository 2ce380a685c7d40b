#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "deon/sdl.hpp"
#include "deon/thf.hpp"

using namespace deon;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in, path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario empty_scenario() {
  Scenario s;
  s.queries.push_back({"c", QueryKind::Consistent, std::nullopt});
  return s;
}

}  // namespace

TEST_CASE("empty SDL scenario is the fixed preamble") {
  ThfDocument d = export_thf(empty_scenario(), Logic::Sdl);
  CHECK(d.count(ThfRole::Axiom) == 1);
  CHECK(d.count(ThfRole::Conjecture) == 0);
  bool serial = false, rel = false;
  for (const auto& r : d.records) {
    CHECK(r.name.rfind("dl_", 0) == 0);
    serial |= r.name == "dl_serial";
    rel |= r.name == "dl_rel_type";
  }
  CHECK(serial);
  CHECK(rel);
  CHECK(d.records.front().name == "dl_world_type");
}

TEST_CASE("axiom count is norms + facts + frame conditions") {
  Scenario s = gdpr_scenario();
  CHECK(export_thf(s, Logic::Sdl).count(ThfRole::Axiom) == 3 + 1 + 1);
  CHECK(export_thf(s, Logic::Ddl).count(ThfRole::Axiom) == 3 + 1 + 5);
}

TEST_CASE("conjecture comes last") {
  Scenario s = gdpr_scenario();
  ThfDocument d = export_thf(s, Logic::Sdl, parse("O{kill_boss}"));
  CHECK(d.count(ThfRole::Conjecture) == 1);
  CHECK(d.records.back().role == ThfRole::Conjecture);
}

TEST_CASE("golden files") {
  Scenario s = gdpr_scenario();
  CHECK(export_thf(s, Logic::Ddl).text() == slurp(std::string(DEON_GOLDEN_DIR) + "/gdpr_ddl.p"));
  CHECK(export_thf(s, Logic::Sdl, parse("O{kill_boss}")).text() ==
        slurp(std::string(DEON_GOLDEN_DIR) + "/gdpr_sdl_q3.p"));
}

TEST_CASE("deterministic, LF only, one record per line") {
  Scenario s = gdpr_scenario();
  std::string a = export_thf(s, Logic::Ddl, parse("O{~erase_data}")).text();
  CHECK(a == export_thf(s, Logic::Ddl, parse("O{~erase_data}")).text());
  CHECK(a.find('\r') == std::string::npos);
  std::istringstream in(a);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(line.rfind("thf(", 0) == 0);
    CHECK(line.back() == '.');
  }
  CHECK(lines == export_thf(s, Logic::Ddl, parse("O{~erase_data}")).records.size());
}

TEST_CASE("name hygiene") {
  Scenario s = parse_scenario(
      "norm dl_obl: O{dl_world}\nnorm n2: a_b -> O{a_b}\nfact f: dl_world\nquery q: entails? O{x}\n");
  ThfDocument d = export_thf(s, Logic::Ddl, parse("O{x}"));
  std::set<std::string> names;
  for (const auto& r : d.records) CHECK(names.insert(r.name).second);
  std::map<std::string, int> declared;
  std::regex decl(R"(^([a-z_][a-zA-Z0-9_]*): )");
  for (const auto& r : d.records) {
    if (r.role != ThfRole::Type) continue;
    std::smatch m;
    REQUIRE(std::regex_search(r.body, m, decl));
    ++declared[m[1]];
  }
  for (const auto& [sym, n] : declared) CHECK_MESSAGE(n == 1, sym);
  for (const char* atom : {"dl_world", "a_b", "x"}) CHECK(declared.count(std::string("a_") + atom) == 1);
  // scenario atoms never land on preamble symbols
  for (const auto& [sym, n] : declared) CHECK((sym.rfind("dl_", 0) == 0 || sym.rfind("a_", 0) == 0));
}

TEST_CASE("dyadic obligation under SDL is rejected") {
  Scenario s = parse_scenario("norm n: O{p | q}\nquery q: consistent?");
  CHECK_THROWS_AS(export_thf(s, Logic::Sdl), UnsupportedConstruct);
  CHECK(thf_term(parse("O{p | q}"), Logic::Ddl) == "(dl_oblc @ a_p @ a_q)");
}
