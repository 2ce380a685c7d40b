// Labelled tableau for modal logic D with global assumptions.
//
// Each world carries a label: a set of negation-normal-form terms closed
// under conjunction splitting. Disjunctions branch, every diamond spawns a
// successor holding its body plus all box bodies and the global
// assumptions, and a world without diamonds gets one such successor
// anyway (seriality). A successor whose initial label already belongs to
// some world is linked to that world instead of being expanded again.
//
// Refutations are returned as a proof DAG that `replay` re-checks step by
// step without running the search.

#ifndef DEON_TABLEAU_HPP_
#define DEON_TABLEAU_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "deon/formula.hpp"
#include "deon/sdl.hpp"

namespace deon {

// Hash-consed store of NNF terms over Top, Bot, literals, And, Or, Box, Dia.
class ModalTerms {
 public:
  enum class Kind { Top, Bot, Pos, Neg, And, Or, Box, Dia };
  struct Term {
    Kind kind;
    int a;  // atom index for literals, otherwise first child
    int b;  // second child of And/Or
  };

  // NNF of f (positive) or of ~f (negative). Dyadic obligations throw
  // UnsupportedConstruct.
  int nnf(const Formula& f, bool positive = true);

  const Term& at(int id) const { return terms_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::string>& atom_names() const { return atom_names_; }
  int atom_index(const std::string& name);
  std::optional<int> find(Kind k, int a, int b) const;

  Formula to_formula(int id) const;

 private:
  int intern(Kind k, int a = -1, int b = -1);

  std::vector<Term> terms_;
  std::map<std::tuple<Kind, int, int>, int> index_;
  std::vector<std::string> atom_names_;
  std::map<std::string, int> atom_index_;
};

// Sorted, duplicate free list of term ids.
using Label = std::vector<int>;

// Adds both conjuncts of every conjunction until nothing changes.
Label alpha_closure(const ModalTerms& terms, Label label);

class ClosedTableau {
 public:
  enum class Rule { Clash, Branch, Successor };
  struct Step {
    Label label;
    Rule rule;
    // Clash: the closing term (Bot or a positive literal whose negation
    // is present). Branch: the disjunction. Successor: the diamond, or -1
    // for the seriality successor.
    int term;
    int left;   // Branch: left child; Successor: the refuted successor
    int right;  // Branch: right child
  };

  ModalTerms terms;
  Label globals;
  Label root;  // before closure
  std::vector<Step> steps;
  int root_step = -1;

  // Re-checks every step; children must precede parents.
  bool replay() const;
  std::vector<std::string> render() const;
};

enum class TableauStatus { Satisfiable, Unsatisfiable, Entailed, NotEntailed, Limit };

struct TableauConfig {
  std::size_t node_budget = 100000;
};

struct TableauResult {
  TableauStatus status;
  // Satisfiable / NotEntailed: model with current world 0.
  std::optional<KripkeModel> model;
  // Unsatisfiable / Entailed.
  std::optional<ClosedTableau> proof;
  std::size_t nodes = 0;
};

// Without a goal decides satisfiability of globals (every world) and
// locals (root). With a goal decides whether it holds at the root of
// every such model.
TableauResult tableau_decide(std::span<const Formula> globals, std::span<const Formula> locals,
                             const std::optional<Formula>& goal, const TableauConfig& cfg = {});

}  // namespace deon

#endif  // DEON_TABLEAU_HPP_
