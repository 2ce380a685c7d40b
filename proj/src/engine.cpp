#include "deon/engine.hpp"

#include <future>
#include <map>

#include "deon/sat.hpp"

namespace deon {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Consistent: return "CONSISTENT";
    case VerdictKind::Inconsistent: return "INCONSISTENT";
    case VerdictKind::Entailed: return "ENTAILED";
    case VerdictKind::NotEntailed: return "NOT_ENTAILED";
    case VerdictKind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Abstraction: return "abstraction";
    case Method::Tableau: return "tableau";
    case Method::Search: return "search";
    case Method::Inconsistency: return "inconsistency";
  }
  return "search";
}

std::vector<std::string> Certificate::lines() const {
  std::vector<std::string> out;
  for (const auto& [name, f] : abstraction) out.push_back(name + " := " + print(f));
  if (tableau) {
    auto t = tableau->render();
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

EngineConfig EngineConfig::defaults(Logic logic) {
  EngineConfig cfg;
  cfg.search = SearchConfig::defaults(logic);
  return cfg;
}

namespace {

// Tseitin encoding of classical formulas; obligation subterms and atoms
// are opaque variables.
class ClassicalEncoder {
 public:
  Lit lit(const Formula& f) {
    if (f.op() == Op::Atom || f.is_obligation()) {
      auto it = opaque_.find(f);
      if (it != opaque_.end()) return it->second;
      int v = cnf_.new_var();
      opaque_.emplace(f, v);
      if (f.is_obligation()) placeholders_.emplace_back("$o" + std::to_string(placeholders_.size()), f);
      return v;
    }
    switch (f.op()) {
      case Op::Top: return constant();
      case Op::Bot: return -constant();
      case Op::Not: return -lit(f.arg(0));
      default: break;
    }
    Lit a = lit(f.lhs());
    Lit b = lit(f.rhs());
    Lit t = cnf_.new_var();
    switch (f.op()) {
      case Op::And:
        cnf_.add_clause({-t, a});
        cnf_.add_clause({-t, b});
        cnf_.add_clause({t, -a, -b});
        break;
      case Op::Or:
        cnf_.add_clause({t, -a});
        cnf_.add_clause({t, -b});
        cnf_.add_clause({-t, a, b});
        break;
      case Op::Impl:
        cnf_.add_clause({t, a});
        cnf_.add_clause({t, -b});
        cnf_.add_clause({-t, -a, b});
        break;
      default:
        cnf_.add_clause({-t, -a, b});
        cnf_.add_clause({-t, a, -b});
        cnf_.add_clause({t, a, b});
        cnf_.add_clause({t, -a, -b});
        break;
    }
    return t;
  }

  void assert_true(Lit l) { cnf_.add_clause({l}); }
  bool satisfiable() const { return sat_solve(cnf_).has_value(); }
  const std::vector<std::pair<std::string, Formula>>& placeholders() const { return placeholders_; }

 private:
  Lit constant() {
    if (true_var_ == 0) {
      true_var_ = cnf_.new_var();
      cnf_.add_clause({true_var_});
    }
    return true_var_;
  }

  Cnf cnf_;
  Lit true_var_ = 0;
  std::map<Formula, int> opaque_;
  std::vector<std::pair<std::string, Formula>> placeholders_;
};

struct AbstractionOutcome {
  bool unsatisfiable;
  std::vector<std::pair<std::string, Formula>> placeholders;
};

AbstractionOutcome abstraction(std::span<const Formula> globals, std::span<const Formula> locals,
                               const std::optional<Formula>& refuted_goal) {
  ClassicalEncoder enc;
  for (const auto& g : globals) enc.assert_true(enc.lit(g));
  for (const auto& l : locals) enc.assert_true(enc.lit(l));
  if (refuted_goal) enc.assert_true(-enc.lit(*refuted_goal));
  return {!enc.satisfiable(), enc.placeholders()};
}

class Stopwatch {
 public:
  std::chrono::microseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

bool abstract_entails(std::span<const Formula> globals, std::span<const Formula> locals, const Formula& goal) {
  return abstraction(globals, locals, goal).unsatisfiable;
}

bool abstract_consistent(std::span<const Formula> globals, std::span<const Formula> locals) {
  return !abstraction(globals, locals, std::nullopt).unsatisfiable;
}

Verdict check_consistency(const Scenario& s, Logic logic, const EngineConfig& cfg) {
  Stopwatch clock;
  require_logic_syntax(s, logic);
  const auto globals = s.norm_formulas();
  const auto locals = s.fact_formulas();
  Verdict v;

  if (auto abs = abstraction(globals, locals, std::nullopt); abs.unsatisfiable) {
    v.kind = VerdictKind::Inconsistent;
    v.certificate.method = Method::Abstraction;
    v.certificate.abstraction = std::move(abs.placeholders);
  } else if (logic == Logic::Sdl) {
    TableauResult r = tableau_decide(globals, locals, std::nullopt, cfg.tableau);
    v.certificate.method = Method::Tableau;
    switch (r.status) {
      case TableauStatus::Satisfiable:
        v.kind = VerdictKind::Consistent;
        v.bound = r.model->world_count;
        v.model = std::move(*r.model);
        break;
      case TableauStatus::Unsatisfiable:
        v.kind = VerdictKind::Inconsistent;
        v.certificate.tableau = std::move(r.proof);
        break;
      default:
        v.kind = VerdictKind::Unknown;
        v.limit = "tableau node budget of " + std::to_string(cfg.tableau.node_budget) + " exceeded";
        break;
    }
  } else {
    SearchResult r = find_model(logic, globals, locals, cfg.search);
    v.certificate.method = Method::Search;
    v.bound = r.worlds;
    if (r.status == SearchStatus::Found) {
      v.kind = VerdictKind::Consistent;
      v.model = std::move(r.model);
    } else {
      v.kind = VerdictKind::Unknown;
      v.limit = r.limit;
    }
  }
  v.elapsed = clock.elapsed();
  return v;
}

Verdict decide_entailment(const Scenario& s, Logic logic, const Formula& goal, const EngineConfig& cfg,
                          const std::optional<Verdict>& consistency) {
  Stopwatch clock;
  require_logic_syntax(s, logic);
  if (logic == Logic::Sdl) require_sdl_syntax(goal);
  const Verdict base = consistency ? *consistency : check_consistency(s, logic, cfg);
  const auto globals = s.norm_formulas();
  const auto locals = s.fact_formulas();
  Verdict v;

  if (base.kind == VerdictKind::Inconsistent) {
    v.kind = VerdictKind::Entailed;
    v.certificate = base.certificate;
    v.certificate.via = base.certificate.method;
    v.certificate.method = Method::Inconsistency;
  } else if (auto abs = abstraction(globals, locals, goal); abs.unsatisfiable) {
    v.kind = VerdictKind::Entailed;
    v.certificate.method = Method::Abstraction;
    v.certificate.abstraction = std::move(abs.placeholders);
  } else if (logic == Logic::Sdl) {
    TableauResult r = tableau_decide(globals, locals, goal, cfg.tableau);
    v.certificate.method = Method::Tableau;
    switch (r.status) {
      case TableauStatus::Entailed:
        v.kind = VerdictKind::Entailed;
        v.certificate.tableau = std::move(r.proof);
        break;
      case TableauStatus::NotEntailed:
        v.kind = VerdictKind::NotEntailed;
        v.bound = r.model->world_count;
        v.model = std::move(*r.model);
        break;
      default:
        v.kind = VerdictKind::Unknown;
        v.limit = "tableau node budget of " + std::to_string(cfg.tableau.node_budget) + " exceeded";
        break;
    }
  } else {
    SearchResult r = find_countermodel(logic, globals, locals, goal, cfg.search);
    v.certificate.method = Method::Search;
    v.bound = r.worlds;
    if (r.status == SearchStatus::Found) {
      v.kind = VerdictKind::NotEntailed;
      v.model = std::move(r.model);
    } else {
      v.kind = VerdictKind::Unknown;
      v.limit = r.limit;
    }
  }
  v.elapsed = clock.elapsed();
  return v;
}

Verdict run_query(const Scenario& s, const Query& q, Logic logic, const EngineConfig& cfg,
                  const std::optional<Verdict>& consistency) {
  Verdict v;
  if (q.kind == QueryKind::Consistent) {
    v = consistency ? *consistency : check_consistency(s, logic, cfg);
  } else {
    v = decide_entailment(s, logic, *q.goal, cfg, consistency);
  }
  v.query_id = q.id;
  return v;
}

std::vector<Verdict> run_scenario(const Scenario& s, Logic logic, const EngineConfig& cfg) {
  const Verdict consistency = check_consistency(s, logic, cfg);
  std::vector<std::future<Verdict>> pending;
  pending.reserve(s.queries.size());
  for (const auto& q : s.queries) {
    pending.push_back(std::async(std::launch::async, [&s, &q, logic, &cfg, &consistency] {
      return run_query(s, q, logic, cfg, consistency);
    }));
  }
  std::vector<Verdict> out;
  out.reserve(pending.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace deon
