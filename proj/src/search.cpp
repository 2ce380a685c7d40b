#include "deon/search.hpp"

#include <algorithm>

namespace deon {

std::size_t world_count(const Model& m) {
  return std::visit([](const auto& model) { return model.world_count; }, m);
}

SearchConfig SearchConfig::defaults(Logic logic) {
  SearchConfig cfg;
  cfg.max_worlds = logic == Logic::Sdl ? 4 : 3;
  return cfg;
}

namespace {

// Frame variables (relation or ob table) are numbered after all formula
// variables so that the solver branches on valuations first.
constexpr int kFrameBase = 1 << 28;

class Encoder {
 public:
  Encoder(Logic logic, std::size_t n, std::size_t budget) : logic_(logic), n_(n), budget_(budget) {
    true_var_ = fresh();
    clause({true_var_});
    if (logic_ == Logic::Sdl) {
      encode_serial_frame();
    } else {
      encode_ob_frame();
    }
  }

  const std::vector<Lit>& truth(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::vector<Lit> out(n_);
    switch (f.op()) {
      case Op::Atom: {
        auto& vars = valuation_[f.name()];
        for (std::size_t w = 0; w < n_; ++w) {
          out[w] = fresh();
          vars.push_back(out[w]);
        }
        break;
      }
      case Op::Top: std::fill(out.begin(), out.end(), true_var_); break;
      case Op::Bot: std::fill(out.begin(), out.end(), -true_var_); break;
      case Op::Not: {
        const auto& a = truth(f.arg(0));
        for (std::size_t w = 0; w < n_; ++w) out[w] = -a[w];
        break;
      }
      case Op::And:
      case Op::Or:
      case Op::Impl:
      case Op::Equiv: {
        std::vector<Lit> a = truth(f.lhs());
        const std::vector<Lit> b = truth(f.rhs());
        if (f.op() == Op::Impl) {
          for (auto& l : a) l = -l;
        }
        for (std::size_t w = 0; w < n_; ++w) {
          Lit t = fresh();
          out[w] = t;
          if (f.op() == Op::And) {
            clause({-t, a[w]});
            clause({-t, b[w]});
            clause({t, -a[w], -b[w]});
          } else if (f.op() == Op::Equiv) {
            clause({-t, -a[w], b[w]});
            clause({-t, a[w], -b[w]});
            clause({t, a[w], b[w]});
            clause({t, -a[w], -b[w]});
          } else {
            clause({t, -a[w]});
            clause({t, -b[w]});
            clause({-t, a[w], b[w]});
          }
        }
        break;
      }
      case Op::Obl:
        if (logic_ == Logic::Sdl) {
          out = box(truth(f.body()));
        } else {
          out = dyadic(f.body(), Formula::top());
        }
        break;
      case Op::OblCond:
        if (logic_ == Logic::Sdl) throw UnsupportedConstruct(f);
        out = dyadic(f.body(), f.condition());
        break;
    }
    return memo_.emplace(f, std::move(out)).first->second;
  }

  void assert_true(Lit l) { clause({l}); }

  void break_symmetry() {
    // world w's valuation vector <=lex world w+1's, for w >= 1
    for (std::size_t w = 1; w + 1 < n_; ++w) {
      Lit prefix_equal = true_var_;
      for (const auto& [name, vars] : valuation_) {
        Lit a = vars[w], b = vars[w + 1];
        clause({-prefix_equal, -a, b});
        Lit next = fresh();
        clause({-prefix_equal, -a, -b, next});
        clause({-prefix_equal, a, b, next});
        prefix_equal = next;
      }
    }
  }

  Encoding finish() {
    Encoding enc;
    enc.logic = logic_;
    enc.worlds = n_;
    const int formula_vars = formula_vars_;
    auto remap = [&](Lit l) {
      int v = l > 0 ? l : -l;
      if (v >= kFrameBase) v = formula_vars + 1 + (v - kFrameBase);
      return l > 0 ? v : -v;
    };
    enc.cnf = Cnf(formula_vars + frame_vars_);
    for (auto& c : clauses_) {
      for (auto& l : c) l = remap(l);
      enc.cnf.add_clause(std::move(c));
    }
    enc.valuation_vars = valuation_;
    for (auto& row : relation_) {
      for (auto& v : row) v = remap(v);
    }
    for (auto& row : ob_) {
      for (auto& v : row) v = remap(v);
    }
    enc.relation_vars = std::move(relation_);
    enc.ob_vars = std::move(ob_);
    return enc;
  }

 private:
  int fresh() { return ++formula_vars_; }
  int frame_var() { return kFrameBase + frame_vars_++; }

  void clause(std::vector<Lit> c) {
    if (clauses_.size() >= budget_) {
      throw ClauseBudgetExceeded("clause budget of " + std::to_string(budget_) + " exceeded at " +
                                 std::to_string(n_) + " worlds");
    }
    clauses_.push_back(std::move(c));
  }

  void encode_serial_frame() {
    relation_.assign(n_, std::vector<int>(n_));
    for (auto& row : relation_) {
      for (auto& v : row) v = frame_var();
    }
    for (std::size_t w = 0; w < n_; ++w) clause(relation_[w]);
  }

  void encode_ob_frame() {
    const std::uint32_t subsets = std::uint32_t{1} << n_;
    ob_.assign(subsets, std::vector<int>(subsets));
    for (auto& row : ob_) {
      for (auto& v : row) v = frame_var();
    }
    auto b = [&](WorldSet x, WorldSet y) { return ob_[x.bits()][y.bits()]; };
    for (std::uint32_t xb = 0; xb < subsets; ++xb) {
      const WorldSet x(xb);
      clause({-b(x, WorldSet())});
      for (std::uint32_t yb = 0; yb < subsets; ++yb) {
        const WorldSet y(yb);
        for (std::uint32_t zb = yb + 1; zb < subsets; ++zb) {
          const WorldSet z(zb);
          if ((y & x) == (z & x)) {
            clause({-b(x, y), b(x, z)});
            clause({b(x, y), -b(x, z)});
          }
          const WorldSet yz = y & z;
          if (!(yz & x).empty() && yz != y && yz != z) clause({-b(x, y), -b(x, z), b(x, yz)});
        }
        for (std::uint32_t zb = 0; zb < subsets; ++zb) {
          const WorldSet z(zb);
          if (y.subset_of(x) && x.subset_of(z) && x != z) clause({-b(x, y), b(z, z.minus(x) | y)});
          if (y.subset_of(x) && y != x && y.intersects(z)) clause({-b(x, z), b(y, z)});
        }
      }
    }
  }

  std::vector<Lit> box(const std::vector<Lit>& body) {
    std::vector<Lit> out(n_);
    for (std::size_t w = 0; w < n_; ++w) {
      Lit t = fresh();
      out[w] = t;
      std::vector<Lit> witness{t};
      for (std::size_t v = 0; v < n_; ++v) {
        Lit r = relation_[w][v];
        clause({-t, -r, body[v]});
        // d <-> r & ~body[v]
        Lit d = fresh();
        clause({-d, r});
        clause({-d, -body[v]});
        clause({d, -r, body[v]});
        witness.push_back(d);
      }
      clause(std::move(witness));
    }
    return out;
  }

  // e[f][X] <-> extension(f) == X, one variable per subset.
  const std::vector<Lit>& extension_equal(const Formula& f) {
    if (auto it = ext_eq_.find(f); it != ext_eq_.end()) return it->second;
    const std::vector<Lit> t = truth(f);
    const std::uint32_t subsets = std::uint32_t{1} << n_;
    std::vector<Lit> out(subsets);
    for (std::uint32_t xb = 0; xb < subsets; ++xb) {
      Lit e = fresh();
      out[xb] = e;
      std::vector<Lit> back{e};
      for (std::size_t w = 0; w < n_; ++w) {
        Lit member = WorldSet(xb).contains(w) ? t[w] : -t[w];
        clause({-e, member});
        back.push_back(-member);
      }
      clause(std::move(back));
    }
    return ext_eq_.emplace(f, std::move(out)).first->second;
  }

  // O<body|condition> is rigid: one variable shared by every world.
  std::vector<Lit> dyadic(const Formula& body, const Formula& condition) {
    const std::vector<Lit> ec = extension_equal(condition);
    const std::vector<Lit> eb = extension_equal(body);
    Lit o = fresh();
    const std::uint32_t subsets = std::uint32_t{1} << n_;
    for (std::uint32_t xb = 0; xb < subsets; ++xb) {
      for (std::uint32_t yb = 0; yb < subsets; ++yb) {
        Lit bxy = ob_[xb][yb];
        clause({-ec[xb], -eb[yb], -bxy, o});
        clause({-ec[xb], -eb[yb], bxy, -o});
      }
    }
    return std::vector<Lit>(n_, o);
  }

  Logic logic_;
  std::size_t n_;
  std::size_t budget_;
  int formula_vars_ = 0;
  int frame_vars_ = 0;
  Lit true_var_ = 0;
  std::vector<std::vector<Lit>> clauses_;
  std::map<Formula, std::vector<Lit>> memo_;
  std::map<Formula, std::vector<Lit>> ext_eq_;
  std::map<std::string, std::vector<int>> valuation_;
  std::vector<std::vector<int>> relation_;
  std::vector<std::vector<int>> ob_;
};

}  // namespace

Encoding encode(Logic logic, std::size_t n, std::span<const Formula> globals, std::span<const Formula> locals,
                const std::optional<Formula>& refuted_goal, std::size_t clause_budget, bool symmetry_breaking) {
  if (n == 0) throw std::invalid_argument("world count must be positive");
  if (logic == Logic::Ddl && n > CJModel::kMaxWorlds) throw std::invalid_argument("too many worlds for a CJ model");
  Encoder enc(logic, n, clause_budget);
  for (const auto& g : globals) {
    const auto t = enc.truth(g);
    for (Lit l : t) enc.assert_true(l);
  }
  for (const auto& l : locals) enc.assert_true(enc.truth(l)[0]);
  if (refuted_goal) enc.assert_true(-enc.truth(*refuted_goal)[0]);
  if (symmetry_breaking) enc.break_symmetry();
  return enc.finish();
}

Model Encoding::decode(const Assignment& a) const {
  auto value = [&](int v) { return a.at(static_cast<std::size_t>(v)); };
  if (logic == Logic::Sdl) {
    KripkeModel m = KripkeModel::with_worlds(worlds);
    for (std::size_t w = 0; w < worlds; ++w) {
      for (std::size_t v = 0; v < worlds; ++v) {
        if (value(relation_vars[w][v])) m.add_edge(w, v);
      }
    }
    for (const auto& [name, vars] : valuation_vars) {
      auto& ext = m.valuation[name];
      for (std::size_t w = 0; w < worlds; ++w) {
        if (value(vars[w])) ext.insert(w);
      }
    }
    return m;
  }
  CJModel m = CJModel::with_worlds(worlds);
  for (std::uint32_t x = 0; x < ob_vars.size(); ++x) {
    for (std::uint32_t y = 0; y < ob_vars[x].size(); ++y) {
      if (value(ob_vars[x][y])) m.set_ob(WorldSet(x), WorldSet(y));
    }
  }
  for (const auto& [name, vars] : valuation_vars) {
    WorldSet ext;
    for (std::size_t w = 0; w < worlds; ++w) {
      if (value(vars[w])) ext = ext | WorldSet::single(w);
    }
    m.valuation[name] = ext;
  }
  return m;
}

bool verify_model(const Model& model, std::span<const Formula> globals, std::span<const Formula> locals,
                  const std::optional<Formula>& refuted_goal) {
  if (const auto* k = std::get_if<KripkeModel>(&model)) {
    if (!k->well_formed() || !is_serial(*k)) return false;
    for (const auto& g : globals) {
      auto ext = extension_sdl(*k, g);
      if (std::find(ext.begin(), ext.end(), false) != ext.end()) return false;
    }
    for (const auto& l : locals) {
      if (!eval_sdl(*k, k->current_world, l)) return false;
    }
    return !refuted_goal || !eval_sdl(*k, k->current_world, *refuted_goal);
  }
  const auto& c = std::get<CJModel>(model);
  if (!c.well_formed()) return false;
  if (c.world_count <= 6 && !check_ob_conditions(c, 6).empty()) return false;
  for (const auto& g : globals) {
    if (extension_ddl(c, g) != c.universe()) return false;
  }
  for (const auto& l : locals) {
    if (!eval_ddl(c, c.current_world, l)) return false;
  }
  return !refuted_goal || !eval_ddl(c, c.current_world, *refuted_goal);
}

namespace {

SearchResult search(Logic logic, std::span<const Formula> globals, std::span<const Formula> locals,
                    const std::optional<Formula>& refuted_goal, const SearchConfig& cfg) {
  if (cfg.max_worlds == 0) throw std::invalid_argument("max_worlds must be at least 1");
  SearchResult result;
  for (std::size_t n = 1; n <= cfg.max_worlds; ++n) {
    Encoding enc;
    try {
      enc = encode(logic, n, globals, locals, refuted_goal, cfg.clause_budget, cfg.symmetry_breaking);
    } catch (const ClauseBudgetExceeded& e) {
      result.status = SearchStatus::Limit;
      result.worlds = n;
      result.limit = e.what();
      return result;
    }
    Solver solver(enc.cnf);
    SatStatus st = solver.solve(cfg.decision_budget);
    if (st == SatStatus::Limit) {
      result.status = SearchStatus::Limit;
      result.worlds = n;
      result.limit = "decision budget of " + std::to_string(cfg.decision_budget) + " exhausted at " +
                     std::to_string(n) + " worlds";
      return result;
    }
    if (st == SatStatus::Unsat) continue;
    Model m = enc.decode(solver.model());
    if (!verify_model(m, globals, locals, refuted_goal)) {
      throw std::logic_error("decoded model failed re-verification");
    }
    result.status = SearchStatus::Found;
    result.model = std::move(m);
    result.worlds = n;
    return result;
  }
  result.status = SearchStatus::Exhausted;
  result.worlds = cfg.max_worlds;
  return result;
}

}  // namespace

SearchResult find_model(Logic logic, std::span<const Formula> globals, std::span<const Formula> locals,
                        const SearchConfig& cfg) {
  return search(logic, globals, locals, std::nullopt, cfg);
}

SearchResult find_countermodel(Logic logic, std::span<const Formula> globals, std::span<const Formula> locals,
                               const Formula& goal, const SearchConfig& cfg) {
  return search(logic, globals, locals, goal, cfg);
}

SearchResult find_model(Logic logic, const Scenario& s, const SearchConfig& cfg) {
  auto g = s.norm_formulas();
  auto l = s.fact_formulas();
  return find_model(logic, g, l, cfg);
}

SearchResult find_countermodel(Logic logic, const Scenario& s, const Formula& goal, const SearchConfig& cfg) {
  auto g = s.norm_formulas();
  auto l = s.fact_formulas();
  return find_countermodel(logic, g, l, goal, cfg);
}

}  // namespace deon
