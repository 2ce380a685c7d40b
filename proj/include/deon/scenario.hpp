// Normative knowledge bases (.deon files).
//
// Line oriented; `#` starts a comment, blank lines are ignored:
//
//   logic sdl|ddl                       optional, at most once
//   norm <id>: <formula>                holds at every world
//   fact <id>: <formula>                holds at the current world
//   query <id>: consistent?
//   query <id>: entails? <formula>
//
// Ids match [A-Za-z_][A-Za-z0-9_]* and are unique per kind.

#ifndef DEON_SCENARIO_HPP_
#define DEON_SCENARIO_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "deon/formula.hpp"
#include "deon/logic.hpp"

namespace deon {

struct NamedFormula {
  std::string id;
  Formula formula;

  friend bool operator==(const NamedFormula&, const NamedFormula&) = default;
};

enum class QueryKind { Consistent, Entails };

struct Query {
  std::string id;
  QueryKind kind = QueryKind::Consistent;
  std::optional<Formula> goal;  // set iff kind == Entails

  friend bool operator==(const Query&, const Query&) = default;
};

struct Scenario {
  std::string name;
  std::optional<Logic> default_logic;
  std::vector<NamedFormula> norms;
  std::vector<NamedFormula> facts;
  std::vector<Query> queries;

  std::vector<Formula> norm_formulas() const;
  std::vector<Formula> fact_formulas() const;
  // Atoms of norms, facts and query goals.
  std::set<std::string> atoms() const;
  const Query* find_query(std::string_view id) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Scenario parse_scenario(std::string_view text, std::string name = "scenario");
std::string print_scenario(const Scenario& s);

// Throws UnsupportedConstruct if the scenario uses syntax `logic` lacks.
void require_logic_syntax(const Scenario& s, Logic logic);

// The contrary-to-duty data protection example shipped as corpus/gdpr_ctd.deon.
Scenario gdpr_scenario();

}  // namespace deon

#endif  // DEON_SCENARIO_HPP_
