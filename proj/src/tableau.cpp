#include "deon/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace deon {

int ModalTerms::intern(Kind k, int a, int b) {
  auto key = std::make_tuple(k, a, b);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  int id = static_cast<int>(terms_.size());
  terms_.push_back({k, a, b});
  index_.emplace(key, id);
  return id;
}

std::optional<int> ModalTerms::find(Kind k, int a, int b) const {
  if (auto it = index_.find(std::make_tuple(k, a, b)); it != index_.end()) return it->second;
  return std::nullopt;
}

int ModalTerms::atom_index(const std::string& name) {
  if (auto it = atom_index_.find(name); it != atom_index_.end()) return it->second;
  int idx = static_cast<int>(atom_names_.size());
  atom_names_.push_back(name);
  atom_index_.emplace(name, idx);
  return idx;
}

int ModalTerms::nnf(const Formula& f, bool positive) {
  switch (f.op()) {
    case Op::Atom: return intern(positive ? Kind::Pos : Kind::Neg, atom_index(f.name()));
    case Op::Top: return intern(positive ? Kind::Top : Kind::Bot);
    case Op::Bot: return intern(positive ? Kind::Bot : Kind::Top);
    case Op::Not: return nnf(f.arg(0), !positive);
    case Op::And: {
      int a = nnf(f.lhs(), positive), b = nnf(f.rhs(), positive);
      return intern(positive ? Kind::And : Kind::Or, a, b);
    }
    case Op::Or: {
      int a = nnf(f.lhs(), positive), b = nnf(f.rhs(), positive);
      return intern(positive ? Kind::Or : Kind::And, a, b);
    }
    case Op::Impl: {
      int a = nnf(f.lhs(), !positive), b = nnf(f.rhs(), positive);
      return intern(positive ? Kind::Or : Kind::And, a, b);
    }
    case Op::Equiv: {
      // a <-> b  ==  (~a | b) & (a | ~b);  ~(a <-> b)  ==  (a & ~b) | (~a & b)
      int pa = nnf(f.lhs(), true), na = nnf(f.lhs(), false);
      int pb = nnf(f.rhs(), true), nb = nnf(f.rhs(), false);
      if (positive) return intern(Kind::And, intern(Kind::Or, na, pb), intern(Kind::Or, pa, nb));
      return intern(Kind::Or, intern(Kind::And, pa, nb), intern(Kind::And, na, pb));
    }
    case Op::Obl: {
      int body = nnf(f.body(), positive);
      return intern(positive ? Kind::Box : Kind::Dia, body);
    }
    case Op::OblCond: throw UnsupportedConstruct(f);
  }
  return -1;
}

Formula ModalTerms::to_formula(int id) const {
  const Term& t = at(id);
  switch (t.kind) {
    case Kind::Top: return Formula::top();
    case Kind::Bot: return Formula::bot();
    case Kind::Pos: return Formula::atom(atom_names_[static_cast<std::size_t>(t.a)]);
    case Kind::Neg: return Formula::neg(Formula::atom(atom_names_[static_cast<std::size_t>(t.a)]));
    case Kind::And: return Formula::conj(to_formula(t.a), to_formula(t.b));
    case Kind::Or: return Formula::disj(to_formula(t.a), to_formula(t.b));
    case Kind::Box: return Formula::obl(to_formula(t.a));
    case Kind::Dia: return Formula::neg(Formula::obl(Formula::neg(to_formula(t.a))));
  }
  return Formula::top();
}

namespace {

void insert_sorted(Label& label, int id) {
  auto it = std::lower_bound(label.begin(), label.end(), id);
  if (it == label.end() || *it != id) label.insert(it, id);
}

bool has(const Label& label, int id) { return std::binary_search(label.begin(), label.end(), id); }

Label normalized(Label l) {
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  return l;
}

using Kind = ModalTerms::Kind;

// Clashing term in an alpha-closed label, if any.
std::optional<int> find_clash(const ModalTerms& terms, const Label& label) {
  for (int id : label) {
    const auto& t = terms.at(id);
    if (t.kind == Kind::Bot) return id;
    if (t.kind == Kind::Pos) {
      if (auto neg = terms.find(Kind::Neg, t.a, -1); neg && has(label, *neg)) return id;
    }
  }
  return std::nullopt;
}

// First disjunction with neither disjunct present.
std::optional<int> find_open_disjunction(const ModalTerms& terms, const Label& label) {
  for (int id : label) {
    const auto& t = terms.at(id);
    if (t.kind == Kind::Or && !has(label, t.a) && !has(label, t.b)) return id;
  }
  return std::nullopt;
}

// Initial label of the successor for `dia` (or the seriality successor
// when dia < 0).
Label successor_label(const ModalTerms& terms, const Label& label, int dia, const Label& globals) {
  Label out = globals;
  for (int id : label) {
    if (terms.at(id).kind == Kind::Box) out.push_back(terms.at(id).a);
  }
  if (dia >= 0) out.push_back(terms.at(dia).a);
  return alpha_closure(terms, normalized(std::move(out)));
}

std::vector<int> diamonds(const ModalTerms& terms, const Label& label) {
  std::vector<int> out;
  for (int id : label) {
    if (terms.at(id).kind == Kind::Dia) out.push_back(id);
  }
  return out;
}

}  // namespace

Label alpha_closure(const ModalTerms& terms, Label label) {
  label = normalized(std::move(label));
  std::vector<int> work(label.begin(), label.end());
  while (!work.empty()) {
    int id = work.back();
    work.pop_back();
    const auto& t = terms.at(id);
    if (t.kind != Kind::And) continue;
    for (int c : {t.a, t.b}) {
      if (!has(label, c)) {
        insert_sorted(label, c);
        work.push_back(c);
      }
    }
  }
  return label;
}

bool ClosedTableau::replay() const {
  if (root_step < 0 || static_cast<std::size_t>(root_step) >= steps.size()) return false;
  auto valid_child = [&](int child, std::size_t parent) { return child >= 0 && static_cast<std::size_t>(child) < parent; };
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    if (alpha_closure(terms, s.label) != s.label) return false;
    switch (s.rule) {
      case Rule::Clash: {
        if (!has(s.label, s.term)) return false;
        const auto& t = terms.at(s.term);
        if (t.kind == Kind::Bot) break;
        if (t.kind != Kind::Pos) return false;
        auto neg = terms.find(Kind::Neg, t.a, -1);
        if (!neg || !has(s.label, *neg)) return false;
        break;
      }
      case Rule::Branch: {
        if (!has(s.label, s.term) || terms.at(s.term).kind != Kind::Or) return false;
        if (!valid_child(s.left, i) || !valid_child(s.right, i)) return false;
        Label l = s.label, r = s.label;
        l.push_back(terms.at(s.term).a);
        r.push_back(terms.at(s.term).b);
        if (steps[static_cast<std::size_t>(s.left)].label != alpha_closure(terms, l)) return false;
        if (steps[static_cast<std::size_t>(s.right)].label != alpha_closure(terms, r)) return false;
        break;
      }
      case Rule::Successor: {
        if (s.term >= 0 && (!has(s.label, s.term) || terms.at(s.term).kind != Kind::Dia)) return false;
        if (!valid_child(s.left, i)) return false;
        if (steps[static_cast<std::size_t>(s.left)].label != successor_label(terms, s.label, s.term, globals)) return false;
        break;
      }
    }
  }
  Label start = globals;
  start.insert(start.end(), root.begin(), root.end());
  return steps[static_cast<std::size_t>(root_step)].label == alpha_closure(terms, normalized(start));
}

std::vector<std::string> ClosedTableau::render() const {
  auto term = [&](int id) { return print(terms.to_formula(id)); };
  std::vector<std::string> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const Step& s = steps[i];
    std::ostringstream os;
    os << "#" << i << " [";
    for (std::size_t k = 0; k < s.label.size(); ++k) os << (k ? ", " : "") << term(s.label[k]);
    os << "] ";
    switch (s.rule) {
      case Rule::Clash:
        if (terms.at(s.term).kind == Kind::Bot) {
          os << "closed by false";
        } else {
          os << "closed by " << term(s.term) << " / ~" << term(s.term);
        }
        break;
      case Rule::Branch:
        os << "split " << term(s.term) << " -> #" << s.left << ", #" << s.right;
        break;
      case Rule::Successor:
        if (s.term >= 0) {
          os << "successor for " << term(s.term) << " -> #" << s.left;
        } else {
          os << "serial successor -> #" << s.left;
        }
        break;
    }
    if (static_cast<int>(i) == root_step) os << " (root)";
    out.push_back(os.str());
  }
  return out;
}

namespace {

struct BudgetExceeded {};

class Prover {
 public:
  Prover(ModalTerms& terms, Label globals, std::size_t budget)
      : terms_(terms), globals_(std::move(globals)), budget_(budget) {}

  // Returns true and leaves the world in the model, or false with the
  // refutation step in `proof`.
  bool expand_world(const Label& initial, int& proof) {
    int id = static_cast<int>(worlds_.size());
    worlds_.push_back({initial, {}, {}});
    active_.emplace(initial, id);
    if (solve(id, initial, proof)) return true;
    worlds_.pop_back();
    active_.erase(initial);
    unsat_.emplace(initial, proof);
    return false;
  }

  KripkeModel model() const {
    KripkeModel m = KripkeModel::with_worlds(worlds_.size());
    for (const auto& name : terms_.atom_names()) m.valuation[name];
    for (std::size_t w = 0; w < worlds_.size(); ++w) {
      for (int s : worlds_[w].successors) m.add_edge(w, static_cast<World>(s));
      for (int id : worlds_[w].label) {
        const auto& t = terms_.at(id);
        if (t.kind == Kind::Pos) m.valuation[terms_.atom_names()[static_cast<std::size_t>(t.a)]].insert(w);
      }
    }
    return m;
  }

  std::vector<ClosedTableau::Step> take_steps() { return std::move(steps_); }
  std::size_t nodes() const { return nodes_; }

 private:
  struct WorldRec {
    Label initial;
    Label label;
    std::vector<int> successors;
  };

  int push_step(Label label, ClosedTableau::Rule rule, int term, int left = -1, int right = -1) {
    steps_.push_back({std::move(label), rule, term, left, right});
    return static_cast<int>(steps_.size()) - 1;
  }

  void rollback(std::size_t world_count) {
    while (worlds_.size() > world_count) {
      active_.erase(worlds_.back().initial);
      worlds_.pop_back();
    }
  }

  bool solve(int w, const Label& label, int& proof) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    if (auto clash = find_clash(terms_, label)) {
      proof = push_step(label, ClosedTableau::Rule::Clash, *clash);
      return false;
    }
    const std::size_t mark = worlds_.size();
    if (auto split = find_open_disjunction(terms_, label)) {
      const auto& t = terms_.at(*split);
      Label left = label, right = label;
      left.push_back(t.a);
      right.push_back(t.b);
      int lp = -1, rp = -1;
      if (solve(w, alpha_closure(terms_, left), lp)) return true;
      rollback(mark);
      if (solve(w, alpha_closure(terms_, right), rp)) return true;
      rollback(mark);
      proof = push_step(label, ClosedTableau::Rule::Branch, *split, lp, rp);
      return false;
    }

    std::vector<int> dias = diamonds(terms_, label);
    if (dias.empty()) dias.push_back(-1);
    std::vector<int> succ;
    for (int dia : dias) {
      Label init = successor_label(terms_, label, dia, globals_);
      if (auto it = unsat_.find(init); it != unsat_.end()) {
        rollback(mark);
        proof = push_step(label, ClosedTableau::Rule::Successor, dia, it->second);
        return false;
      }
      if (auto it = active_.find(init); it != active_.end()) {
        succ.push_back(it->second);
        continue;
      }
      int child = static_cast<int>(worlds_.size());
      int child_proof = -1;
      if (!expand_world(init, child_proof)) {
        rollback(mark);
        proof = push_step(label, ClosedTableau::Rule::Successor, dia, child_proof);
        return false;
      }
      succ.push_back(child);
    }
    worlds_[static_cast<std::size_t>(w)].label = label;
    worlds_[static_cast<std::size_t>(w)].successors = std::move(succ);
    return true;
  }

  ModalTerms& terms_;
  Label globals_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<WorldRec> worlds_;
  std::map<Label, int> active_;
  std::map<Label, int> unsat_;
  std::vector<ClosedTableau::Step> steps_;
};

}  // namespace

TableauResult tableau_decide(std::span<const Formula> globals, std::span<const Formula> locals,
                             const std::optional<Formula>& goal, const TableauConfig& cfg) {
  ClosedTableau cert;
  for (const auto& g : globals) require_sdl_syntax(g);
  for (const auto& l : locals) require_sdl_syntax(l);
  if (goal) require_sdl_syntax(*goal);

  for (const auto& g : globals) cert.globals.push_back(cert.terms.nnf(g));
  for (const auto& l : locals) cert.root.push_back(cert.terms.nnf(l));
  if (goal) cert.root.push_back(cert.terms.nnf(*goal, false));
  cert.globals = normalized(cert.globals);
  cert.root = normalized(cert.root);

  Label start = cert.globals;
  start.insert(start.end(), cert.root.begin(), cert.root.end());
  start = alpha_closure(cert.terms, normalized(start));

  Prover prover(cert.terms, cert.globals, cfg.node_budget);
  TableauResult result{TableauStatus::Limit, std::nullopt, std::nullopt, 0};
  try {
    int proof = -1;
    bool sat = prover.expand_world(start, proof);
    result.nodes = prover.nodes();
    if (sat) {
      result.status = goal ? TableauStatus::NotEntailed : TableauStatus::Satisfiable;
      result.model = prover.model();
    } else {
      result.status = goal ? TableauStatus::Entailed : TableauStatus::Unsatisfiable;
      cert.steps = prover.take_steps();
      cert.root_step = proof;
      result.proof = std::move(cert);
    }
  } catch (const BudgetExceeded&) {
    result.status = TableauStatus::Limit;
    result.nodes = prover.nodes();
  }
  return result;
}

}  // namespace deon
