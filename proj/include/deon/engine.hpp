// Verdict pipeline. A query is answered by the cheapest stage that is
// conclusive:
//
//   1. propositional abstraction (obligation subterms become fresh atoms),
//      sound for entailment in both logics;
//   2. SDL: the D tableau, which decides either way;
//      DDL: bounded countermodel search, which can only refute.
//
// Bounded search that runs out of worlds yields Unknown, never Entailed.

#ifndef DEON_ENGINE_HPP_
#define DEON_ENGINE_HPP_

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deon/formula.hpp"
#include "deon/logic.hpp"
#include "deon/scenario.hpp"
#include "deon/search.hpp"
#include "deon/tableau.hpp"

namespace deon {

enum class VerdictKind { Consistent, Inconsistent, Entailed, NotEntailed, Unknown };
enum class Method { Abstraction, Tableau, Search, Inconsistency };

std::string_view to_string(VerdictKind k);
std::string_view to_string(Method m);

struct Certificate {
  Method method = Method::Search;
  // Method::Inconsistency: how the inconsistency itself was established.
  std::optional<Method> via;
  // Method::Abstraction (also via it): placeholder atom -> obligation subterm.
  std::vector<std::pair<std::string, Formula>> abstraction;
  std::optional<ClosedTableau> tableau;

  std::vector<std::string> lines() const;
};

struct Verdict {
  std::string query_id;
  VerdictKind kind = VerdictKind::Unknown;
  Certificate certificate;
  std::optional<Model> model;
  // Exhausted world bound (Unknown) or size of the model found.
  std::optional<std::size_t> bound;
  // Set when Unknown was caused by a resource limit.
  std::string limit;
  std::chrono::microseconds elapsed{0};
};

struct EngineConfig {
  SearchConfig search;
  TableauConfig tableau;

  static EngineConfig defaults(Logic logic);
};

// True iff globals and locals classically entail goal once every maximal
// obligation subterm is replaced by a fresh atom. False is inconclusive.
bool abstract_entails(std::span<const Formula> globals, std::span<const Formula> locals, const Formula& goal);
// False iff the abstraction of all statements is classically unsatisfiable.
bool abstract_consistent(std::span<const Formula> globals, std::span<const Formula> locals);

Verdict check_consistency(const Scenario& s, Logic logic, const EngineConfig& cfg);
// `consistency` may carry a previously computed check_consistency verdict.
Verdict decide_entailment(const Scenario& s, Logic logic, const Formula& goal, const EngineConfig& cfg,
                          const std::optional<Verdict>& consistency = std::nullopt);

Verdict run_query(const Scenario& s, const Query& q, Logic logic, const EngineConfig& cfg,
                  const std::optional<Verdict>& consistency = std::nullopt);
// One verdict per query, in input order. Entailment queries run
// concurrently after a single shared consistency check.
std::vector<Verdict> run_scenario(const Scenario& s, Logic logic, const EngineConfig& cfg);

}  // namespace deon

#endif  // DEON_ENGINE_HPP_
