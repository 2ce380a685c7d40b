// TPTP THF rendering of a scenario as a shallow semantical embedding:
// propositions become predicates over worlds, the connectives become
// lifted definitions, norms are wrapped in a validity predicate and facts
// are asserted at a designated current world.
//
// Preamble symbols start with `dl_`, scenario atoms become `a_<name>`,
// norms and facts become `norm_<id>` and `fact_<id>` records.

#ifndef DEON_THF_HPP_
#define DEON_THF_HPP_

#include <optional>
#include <string>
#include <vector>

#include "deon/formula.hpp"
#include "deon/logic.hpp"
#include "deon/scenario.hpp"

namespace deon {

enum class ThfRole { Type, Definition, Axiom, Conjecture };

std::string_view to_string(ThfRole r);

struct ThfRecord {
  std::string name;
  ThfRole role;
  std::string body;
};

struct ThfDocument {
  std::vector<ThfRecord> records;

  // One `thf(name, role, body).` line per record, LF terminated.
  std::string text() const;
  std::size_t count(ThfRole role) const;
};

// Throws UnsupportedConstruct for dyadic obligations under SDL.
ThfDocument export_thf(const Scenario& s, Logic logic, const std::optional<Formula>& goal = std::nullopt);

// Lifted THF term for f (type dl_world > $o).
std::string thf_term(const Formula& f, Logic logic);

}  // namespace deon

#endif  // DEON_THF_HPP_
