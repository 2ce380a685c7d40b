#include "deon/scenario.hpp"

#include <algorithm>
#include <sstream>

#include "deon/sdl.hpp"

namespace deon {

namespace {

constexpr std::string_view kGdprText = R"(norm n1: O{process_data_lawfully}
norm n2: O{process_data_lawfully -> ~erase_data}
norm n3: ~process_data_lawfully -> O{erase_data}
fact f1: ~process_data_lawfully
query q0: consistent?
query q1: entails? O{erase_data}
query q2: entails? O{~erase_data}
query q3: entails? O{kill_boss}
)";

bool is_id_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_id_char(char c) { return is_id_start(c) || (c >= '0' && c <= '9'); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Cursor over one line; columns are 1-based.
struct LineCursor {
  std::string_view text;
  std::size_t line;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  std::size_t column() const { return pos + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw ScenarioError(line, column(), msg); }

  std::string_view word() {
    std::size_t start = pos;
    while (pos < text.size() && is_id_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  std::string identifier(const char* what) {
    skip_space();
    if (at_end() || !is_id_start(text[pos])) fail(std::string("expected ") + what);
    return std::string(word());
  }

  void expect(char c) {
    skip_space();
    if (at_end() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string_view rest() {
    skip_space();
    std::string_view r = text.substr(pos);
    while (!r.empty() && is_space(r.back())) r.remove_suffix(1);
    return r;
  }
};

Formula parse_formula_at(LineCursor& cur) {
  cur.skip_space();
  std::size_t offset = cur.pos;
  std::string_view src = cur.rest();
  if (src.empty()) cur.fail("expected formula");
  try {
    return parse(src);
  } catch (const SyntaxError& e) {
    std::string msg = e.what();
    if (auto colon = msg.find(": "); colon != std::string::npos) msg = msg.substr(colon + 2);
    throw ScenarioError(cur.line, offset + e.column(), "syntax error: " + msg);
  }
}

}  // namespace

ScenarioError::ScenarioError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

std::vector<Formula> Scenario::norm_formulas() const {
  std::vector<Formula> out;
  for (const auto& n : norms) out.push_back(n.formula);
  return out;
}

std::vector<Formula> Scenario::fact_formulas() const {
  std::vector<Formula> out;
  for (const auto& f : facts) out.push_back(f.formula);
  return out;
}

std::set<std::string> Scenario::atoms() const {
  std::set<std::string> out;
  auto add = [&](const Formula& f) {
    auto a = deon::atoms(f);
    out.insert(a.begin(), a.end());
  };
  for (const auto& n : norms) add(n.formula);
  for (const auto& f : facts) add(f.formula);
  for (const auto& q : queries) {
    if (q.goal) add(*q.goal);
  }
  return out;
}

const Query* Scenario::find_query(std::string_view id) const {
  auto it = std::find_if(queries.begin(), queries.end(), [&](const Query& q) { return q.id == id; });
  return it == queries.end() ? nullptr : &*it;
}

Scenario parse_scenario(std::string_view text, std::string name) {
  Scenario s;
  s.name = std::move(name);
  std::set<std::string> norm_ids, fact_ids, query_ids;
  std::vector<std::pair<std::size_t, Formula>> located;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineCursor cur{line, line_no};
    cur.skip_space();
    if (cur.at_end()) continue;
    std::size_t keyword_col = cur.column();
    std::string_view keyword = cur.word();

    if (keyword == "logic") {
      if (s.default_logic) throw ScenarioError(line_no, keyword_col, "duplicate logic line");
      cur.skip_space();
      std::string_view value = cur.word();
      auto logic = parse_logic(value);
      if (!logic) cur.fail("expected 'sdl' or 'ddl'");
      cur.skip_space();
      if (!cur.at_end()) cur.fail("unexpected text after logic name");
      s.default_logic = logic;
    } else if (keyword == "norm" || keyword == "fact") {
      cur.skip_space();
      std::size_t id_col = cur.column();
      std::string id = cur.identifier("identifier");
      cur.expect(':');
      auto& ids = keyword == "norm" ? norm_ids : fact_ids;
      if (!ids.insert(id).second) throw ScenarioError(line_no, id_col, "duplicate " + std::string(keyword) + " id '" + id + "'");
      Formula f = parse_formula_at(cur);
      located.emplace_back(line_no, f);
      (keyword == "norm" ? s.norms : s.facts).push_back({id, f});
    } else if (keyword == "query") {
      cur.skip_space();
      std::size_t id_col = cur.column();
      std::string id = cur.identifier("identifier");
      cur.expect(':');
      if (!query_ids.insert(id).second) throw ScenarioError(line_no, id_col, "duplicate query id '" + id + "'");
      cur.skip_space();
      std::string_view kind = cur.word();
      if (cur.at_end() || cur.text[cur.pos] != '?' || (kind != "consistent" && kind != "entails")) {
        cur.fail("expected 'consistent?' or 'entails?'");
      }
      ++cur.pos;
      if (kind == "consistent") {
        cur.skip_space();
        if (!cur.at_end()) cur.fail("unexpected text after 'consistent?'");
        s.queries.push_back({id, QueryKind::Consistent, std::nullopt});
      } else {
        Formula goal = parse_formula_at(cur);
        located.emplace_back(line_no, goal);
        s.queries.push_back({id, QueryKind::Entails, goal});
      }
    } else {
      throw ScenarioError(line_no, keyword_col, "expected 'logic', 'norm', 'fact' or 'query'");
    }
  }
  if (s.queries.empty()) throw ScenarioError(line_no, 1, "scenario has no queries");
  if (s.default_logic == Logic::Sdl) {
    for (const auto& [line, f] : located) {
      try {
        require_sdl_syntax(f);
      } catch (const UnsupportedConstruct& e) {
        throw ScenarioError(line, 1, e.what());
      }
    }
  }
  return s;
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream os;
  if (s.default_logic) os << "logic " << to_string(*s.default_logic) << '\n';
  for (const auto& n : s.norms) os << "norm " << n.id << ": " << print(n.formula) << '\n';
  for (const auto& f : s.facts) os << "fact " << f.id << ": " << print(f.formula) << '\n';
  for (const auto& q : s.queries) {
    os << "query " << q.id << ": ";
    if (q.kind == QueryKind::Consistent) {
      os << "consistent?";
    } else {
      os << "entails? " << print(*q.goal);
    }
    os << '\n';
  }
  return os.str();
}

void require_logic_syntax(const Scenario& s, Logic logic) {
  if (logic == Logic::Ddl) return;
  for (const auto& n : s.norms) require_sdl_syntax(n.formula);
  for (const auto& f : s.facts) require_sdl_syntax(f.formula);
  for (const auto& q : s.queries) {
    if (q.goal) require_sdl_syntax(*q.goal);
  }
}

Scenario gdpr_scenario() { return parse_scenario(kGdprText, "gdpr_ctd"); }

}  // namespace deon
