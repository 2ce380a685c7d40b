#include "deon/sat.hpp"

#include <stdexcept>
#include <string>

namespace deon {

void Cnf::add_clause(std::vector<Lit> clause) {
  for (Lit l : clause) {
    int v = l > 0 ? l : -l;
    if (l == 0 || v > num_vars_) throw std::out_of_range("literal " + std::to_string(l) + " out of range");
  }
  clauses_.push_back(std::move(clause));
}

bool satisfies(const Cnf& cnf, const Assignment& a) {
  for (const auto& c : cnf.clauses()) {
    bool sat = false;
    for (Lit l : c) {
      int v = l > 0 ? l : -l;
      if (static_cast<std::size_t>(v) < a.size() && a[v] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Solver::Solver(const Cnf& cnf)
    : num_vars_(cnf.num_vars()),
      watches_(2 * static_cast<std::size_t>(cnf.num_vars()) + 2),
      assign_(static_cast<std::size_t>(cnf.num_vars()) + 1, kUnset) {
  for (const auto& raw : cnf.clauses()) {
    // Drop duplicate literals and tautologies.
    std::vector<Lit> c;
    bool taut = false;
    for (Lit l : raw) {
      bool dup = false;
      for (Lit m : c) {
        if (m == l) dup = true;
        if (m == -l) taut = true;
      }
      if (!dup) c.push_back(l);
    }
    if (taut) continue;
    if (c.empty()) {
      trivially_unsat_ = true;
      continue;
    }
    if (c.size() == 1) {
      units_.push_back(c[0]);
      continue;
    }
    std::size_t ci = clauses_.size();
    watches_[index(c[0])].push_back(ci);
    watches_[index(c[1])].push_back(ci);
    clauses_.push_back(std::move(c));
  }
}

std::int8_t Solver::value(Lit l) const {
  std::int8_t v = assign_[static_cast<std::size_t>(l > 0 ? l : -l)];
  if (v == kUnset) return kUnset;
  return l > 0 ? v : static_cast<std::int8_t>(1 - v);
}

bool Solver::enqueue(Lit l) {
  std::int8_t v = value(l);
  if (v == kTrue) return true;
  if (v == kFalse) return false;
  assign_[static_cast<std::size_t>(l > 0 ? l : -l)] = l > 0 ? kTrue : kFalse;
  trail_.push_back(l);
  return true;
}

bool Solver::propagate() {
  while (qhead_ < trail_.size()) {
    Lit falsified = -trail_[qhead_++];
    auto& ws = watches_[index(falsified)];
    std::size_t keep = 0;
    bool conflict = false;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::size_t ci = ws[i];
      if (conflict) {
        ws[keep++] = ci;
        continue;
      }
      auto& c = clauses_[ci];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == kTrue) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != kFalse) {
          std::swap(c[1], c[k]);
          watches_[index(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (!enqueue(c[0])) conflict = true;
    }
    ws.resize(keep);
    if (conflict) return false;
  }
  return true;
}

void Solver::undo_to(std::size_t trail_size) {
  while (trail_.size() > trail_size) {
    Lit l = trail_.back();
    trail_.pop_back();
    assign_[static_cast<std::size_t>(l > 0 ? l : -l)] = kUnset;
  }
  qhead_ = trail_size;
}

SatStatus Solver::solve(std::uint64_t decision_budget) {
  if (trivially_unsat_) return SatStatus::Unsat;
  for (Lit u : units_) {
    if (!enqueue(u)) return SatStatus::Unsat;
  }
  if (!propagate()) return SatStatus::Unsat;

  int next = 1;
  for (;;) {
    while (next <= num_vars_ && assign_[static_cast<std::size_t>(next)] != kUnset) ++next;
    if (next > num_vars_) break;
    if (decision_budget != 0 && decisions_ >= decision_budget) return SatStatus::Limit;
    ++decisions_;
    levels_.push_back({trail_.size(), next, false});
    enqueue(next);
    while (!propagate()) {
      while (!levels_.empty() && levels_.back().flipped) {
        undo_to(levels_.back().trail_pos);
        levels_.pop_back();
      }
      if (levels_.empty()) return SatStatus::Unsat;
      Level& top = levels_.back();
      undo_to(top.trail_pos);
      top.flipped = true;
      enqueue(-top.var);
      next = top.var;
    }
  }
  model_.assign(static_cast<std::size_t>(num_vars_) + 1, false);
  for (int v = 1; v <= num_vars_; ++v) model_[static_cast<std::size_t>(v)] = assign_[static_cast<std::size_t>(v)] == kTrue;
  return SatStatus::Sat;
}

std::optional<Assignment> sat_solve(const Cnf& cnf) {
  Solver s(cnf);
  if (s.solve() == SatStatus::Sat) return s.model();
  return std::nullopt;
}

}  // namespace deon
