// Bounded model finding: the semantics of either logic over exactly n
// worlds is compiled to CNF and handed to the DPLL solver, for
// n = 1, 2, ... up to a bound.

#ifndef DEON_SEARCH_HPP_
#define DEON_SEARCH_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "deon/ddl.hpp"
#include "deon/formula.hpp"
#include "deon/logic.hpp"
#include "deon/sat.hpp"
#include "deon/scenario.hpp"
#include "deon/sdl.hpp"

namespace deon {

using Model = std::variant<KripkeModel, CJModel>;

std::size_t world_count(const Model& m);

struct SearchConfig {
  std::size_t max_worlds = 3;
  std::size_t clause_budget = 4'000'000;
  // Zero means unbounded.
  std::uint64_t decision_budget = 0;
  // Orders the valuation vectors of worlds 1..n-1 lexicographically.
  bool symmetry_breaking = false;

  // 4 worlds for SDL, 3 for DDL.
  static SearchConfig defaults(Logic logic);
};

class ClauseBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Encoding {
  Logic logic = Logic::Sdl;
  std::size_t worlds = 0;
  Cnf cnf;
  // v[p][w]
  std::map<std::string, std::vector<int>> valuation_vars;
  // SDL: r[w][w']
  std::vector<std::vector<int>> relation_vars;
  // DDL: b[X][Y], indexed by subset bits
  std::vector<std::vector<int>> ob_vars;

  Model decode(const Assignment& a) const;
};

// Models of size n with globals true everywhere and locals (and the
// negation of `refuted_goal`, if given) true at world 0.
Encoding encode(Logic logic, std::size_t n, std::span<const Formula> globals, std::span<const Formula> locals,
                const std::optional<Formula>& refuted_goal = std::nullopt, std::size_t clause_budget = SIZE_MAX,
                bool symmetry_breaking = false);

// Direct re-check by evaluation: frame conditions, globals at every
// world, locals at world 0, and the goal false at world 0 if given.
bool verify_model(const Model& m, std::span<const Formula> globals, std::span<const Formula> locals,
                  const std::optional<Formula>& refuted_goal = std::nullopt);

enum class SearchStatus { Found, Exhausted, Limit };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Model> model;
  // Found: size of the model. Exhausted: the bound searched.
  std::size_t worlds = 0;
  std::string limit;
};

SearchResult find_model(Logic logic, std::span<const Formula> globals, std::span<const Formula> locals,
                        const SearchConfig& cfg);
SearchResult find_countermodel(Logic logic, std::span<const Formula> globals, std::span<const Formula> locals,
                               const Formula& goal, const SearchConfig& cfg);

SearchResult find_model(Logic logic, const Scenario& s, const SearchConfig& cfg);
SearchResult find_countermodel(Logic logic, const Scenario& s, const Formula& goal, const SearchConfig& cfg);

}  // namespace deon

#endif  // DEON_SEARCH_HPP_
