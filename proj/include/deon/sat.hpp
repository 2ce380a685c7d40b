// CNF container and a deterministic DPLL solver.
//
// Branching picks the lowest-index unassigned variable, tries `true`
// first, propagates units to fixpoint with two watched literals per
// clause and backtracks chronologically. Identical input always yields
// the identical model.

#ifndef DEON_SAT_HPP_
#define DEON_SAT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace deon {

// Literals are DIMACS style: variable v is `v`, its negation `-v`.
using Lit = int;

class Cnf {
 public:
  Cnf() = default;
  explicit Cnf(int num_vars) : num_vars_(num_vars) {}

  int new_var() { return ++num_vars_; }
  int num_vars() const { return num_vars_; }

  // Throws std::out_of_range on a zero or out-of-range literal.
  void add_clause(std::vector<Lit> clause);
  void add_clause(std::initializer_list<Lit> clause) { add_clause(std::vector<Lit>(clause)); }

  const std::vector<std::vector<Lit>>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }

 private:
  int num_vars_ = 0;
  std::vector<std::vector<Lit>> clauses_;
};

enum class SatStatus { Sat, Unsat, Limit };

// Index 0 is unused; entry v holds the value of variable v.
using Assignment = std::vector<bool>;

class Solver {
 public:
  explicit Solver(const Cnf& cnf);

  // `decision_budget` of zero means unbounded.
  SatStatus solve(std::uint64_t decision_budget = 0);
  const Assignment& model() const { return model_; }
  std::uint64_t decisions() const { return decisions_; }

 private:
  enum : std::int8_t { kFalse = 0, kTrue = 1, kUnset = 2 };

  static std::size_t index(Lit l) { return 2 * static_cast<std::size_t>(l > 0 ? l : -l) + (l < 0); }
  std::int8_t value(Lit l) const;
  bool enqueue(Lit l);
  bool propagate();
  void undo_to(std::size_t trail_size);

  struct Level {
    std::size_t trail_pos;
    int var;
    bool flipped;
  };

  int num_vars_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<Lit> units_;
  bool trivially_unsat_ = false;

  std::vector<std::int8_t> assign_;
  std::vector<Lit> trail_;
  std::size_t qhead_ = 0;
  std::vector<Level> levels_;
  std::uint64_t decisions_ = 0;
  Assignment model_;
};

std::optional<Assignment> sat_solve(const Cnf& cnf);

// True iff `a` satisfies every clause.
bool satisfies(const Cnf& cnf, const Assignment& a);

}  // namespace deon

#endif  // DEON_SAT_HPP_
