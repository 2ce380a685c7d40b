// Dyadic deontic logic in the Carmo-Jones style: finite neighborhood
// models whose `ob` function maps each context X (a set of worlds) to the
// family of sets obligatory in that context.
//
// The admissible `ob` functions are those satisfying, for all X, Y, Z:
//   C1  the empty set is never in ob(X)
//   C2  Y & X == Z & X  implies  (Y in ob(X) iff Z in ob(X))
//   C3  Y, Z in ob(X) and Y & Z & X nonempty  implies  Y & Z in ob(X)
//   C4  Y <= X, Y in ob(X), X <= Z  implies  (Z \ X) | Y in ob(Z)
//   C5  Y <= X, Z in ob(X), Y & Z nonempty  implies  Z in ob(Y)

#ifndef DEON_DDL_HPP_
#define DEON_DDL_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deon/formula.hpp"
#include "deon/sdl.hpp"
#include "deon/world_set.hpp"

namespace deon {

struct CJModel {
  static constexpr std::size_t kMaxWorlds = 10;

  std::size_t world_count = 1;
  // Row-major 2^n x 2^n table: entry (X, Y) is true iff Y is in ob(X).
  std::vector<bool> ob_table;
  // Atoms absent from the map are false everywhere.
  std::map<std::string, WorldSet> valuation;
  World current_world = 0;

  // Model over n worlds with ob(X) empty for every X.
  static CJModel with_worlds(std::size_t n);

  WorldSet universe() const { return WorldSet::all(world_count); }
  std::size_t subset_count() const { return std::size_t{1} << world_count; }

  bool ob(WorldSet context, WorldSet y) const;
  void set_ob(WorldSet context, WorldSet y, bool value = true);
  // Members of ob(context) in increasing bit order.
  std::vector<WorldSet> ob_family(WorldSet context) const;

  WorldSet atom_extension(const std::string& atom) const;
  bool well_formed() const;

  friend bool operator==(const CJModel&, const CJModel&) = default;
};

WorldSet extension_ddl(const CJModel& m, const Formula& f);
bool eval_ddl(const CJModel& m, World w, const Formula& f);

enum class ObCondition { C1 = 1, C2, C3, C4, C5 };

struct ObViolation {
  ObCondition condition;
  WorldSet x;
  WorldSet y;
  std::optional<WorldSet> z;

  std::string describe() const;
  friend bool operator==(const ObViolation&, const ObViolation&) = default;
};

class EnumerationBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumerates all subset pairs/triples. Empty result iff C1-C5 hold.
std::vector<ObViolation> check_ob_conditions(const CJModel& m, std::size_t enumeration_bound = 5);

// Least extension of the current table closed under C2-C5. The result
// also satisfies C1 whenever every seeded Y meets its context X.
void close_ob(CJModel& m);

}  // namespace deon

#endif  // DEON_DDL_HPP_
