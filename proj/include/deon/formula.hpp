// Deontic propositional formulas: syntax tree, parser and printer.
//
// Concrete grammar, lowest to highest binding:
//
//   formula := impl ( '<->' formula )?          right associative
//   impl    := disj ( '->' impl )?              right associative
//   disj    := conj ( '|' conj )*
//   conj    := unary ( '&' unary )*
//   unary   := '~' unary | primary
//   primary := atom | 'true' | 'false' | '(' formula ')'
//            | 'O' '{' formula '}' | 'O' '{' formula '|' formula '}'
//
// Inside `O{...}` the last `|` at nesting depth zero separates the body
// from the condition, so a disjunctive body or condition must be
// parenthesized. `#` starts a comment running to the end of the line.

#ifndef DEON_FORMULA_HPP_
#define DEON_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace deon {

enum class Op { Atom, Top, Bot, Not, And, Or, Impl, Equiv, Obl, OblCond };

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula equiv(Formula a, Formula b);
  static Formula obl(Formula body);
  static Formula obl(Formula body, Formula condition);

  Op op() const;
  // Only valid for Op::Atom.
  const std::string& name() const;
  std::size_t arity() const;
  const Formula& arg(std::size_t i) const;
  // Binary connectives.
  const Formula& lhs() const { return arg(0); }
  const Formula& rhs() const { return arg(1); }
  // Obl and OblCond.
  const Formula& body() const { return arg(0); }
  const Formula& condition() const { return arg(1); }

  bool is_obligation() const { return op() == Op::Obl || op() == Op::OblCond; }

  std::size_t depth() const;
  std::size_t size() const;
  std::size_t hash() const;

  // Total structural order; 0 iff structurally equal.
  int compare(const Formula& other) const;
  friend bool operator==(const Formula& a, const Formula& b) { return a.compare(b) == 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, std::vector<Formula> args);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
              const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

bool is_atom_name(std::string_view s);

Formula parse(std::string_view text);
std::string print(const Formula& f);

std::set<std::string> atoms(const Formula& f);
// Maximal subformulas headed by Obl/OblCond, left to right, without duplicates.
std::vector<Formula> obligation_subterms(const Formula& f);
bool contains_dyadic(const Formula& f);

}  // namespace deon

#endif  // DEON_FORMULA_HPP_
