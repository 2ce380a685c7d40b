// Test-only reference implementations: random generators and brute-force
// oracles that share no code path with the encoder, the solver or the
// tableau.

#ifndef DEON_TESTS_ORACLES_HPP_
#define DEON_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "deon/ddl.hpp"
#include "deon/formula.hpp"
#include "deon/sat.hpp"
#include "deon/sdl.hpp"

namespace deon::testing {

struct FormulaGen {
  std::mt19937& rng;
  std::vector<std::string> atoms;
  bool dyadic = false;
  bool equiv = true;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Formula leaf() {
    int k = pick(static_cast<int>(atoms.size()) + 2);
    if (k == static_cast<int>(atoms.size())) return Formula::top();
    if (k == static_cast<int>(atoms.size()) + 1) return Formula::bot();
    return Formula::atom(atoms[static_cast<std::size_t>(k)]);
  }

  Formula operator()(int depth) {
    if (depth == 0 || pick(4) == 0) return leaf();
    int choices = dyadic ? 8 : 7;
    switch (pick(choices)) {
      case 0: return Formula::neg((*this)(depth - 1));
      case 1: return Formula::conj((*this)(depth - 1), (*this)(depth - 1));
      case 2: return Formula::disj((*this)(depth - 1), (*this)(depth - 1));
      case 3: return Formula::impl((*this)(depth - 1), (*this)(depth - 1));
      case 4:
        if (equiv) return Formula::equiv((*this)(depth - 1), (*this)(depth - 1));
        return Formula::neg((*this)(depth - 1));
      case 5:
      case 6: return Formula::obl((*this)(depth - 1));
      default: return Formula::obl((*this)(depth - 1), (*this)(depth - 1));
    }
  }
};

// Direct recursive truth definition, no extension caching.
inline bool naive_eval_sdl(const KripkeModel& m, World w, const Formula& f) {
  switch (f.op()) {
    case Op::Atom: return m.valuation.count(f.name()) && m.valuation.at(f.name()).count(w);
    case Op::Top: return true;
    case Op::Bot: return false;
    case Op::Not: return !naive_eval_sdl(m, w, f.arg(0));
    case Op::And: return naive_eval_sdl(m, w, f.lhs()) && naive_eval_sdl(m, w, f.rhs());
    case Op::Or: return naive_eval_sdl(m, w, f.lhs()) || naive_eval_sdl(m, w, f.rhs());
    case Op::Impl: return !naive_eval_sdl(m, w, f.lhs()) || naive_eval_sdl(m, w, f.rhs());
    case Op::Equiv: return naive_eval_sdl(m, w, f.lhs()) == naive_eval_sdl(m, w, f.rhs());
    case Op::Obl:
      for (World v : m.successors[w]) {
        if (!naive_eval_sdl(m, v, f.body())) return false;
      }
      return true;
    case Op::OblCond: return false;
  }
  return false;
}

// Every serial Kripke model on n worlds over the given atoms, current world 0.
inline std::vector<KripkeModel> all_serial_models(std::size_t n, const std::vector<std::string>& atoms) {
  std::vector<KripkeModel> out;
  const std::size_t rel_bits = n * n;
  const std::size_t val_bits = n * atoms.size();
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << rel_bits); ++rel) {
    KripkeModel base = KripkeModel::with_worlds(n);
    for (std::size_t i = 0; i < rel_bits; ++i) {
      if ((rel >> i) & 1) base.add_edge(i / n, i % n);
    }
    if (!is_serial(base)) continue;
    for (std::uint64_t val = 0; val < (std::uint64_t{1} << val_bits); ++val) {
      KripkeModel m = base;
      for (std::size_t a = 0; a < atoms.size(); ++a) {
        auto& ext = m.valuation[atoms[a]];
        for (std::size_t w = 0; w < n; ++w) {
          if ((val >> (a * n + w)) & 1) ext.insert(w);
        }
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

// C1-C5 written out directly over a raw table, independent of
// check_ob_conditions.
inline bool cj_conditions_hold(const std::vector<bool>& table, std::size_t n) {
  const std::uint32_t s = std::uint32_t{1} << n;
  auto ob = [&](std::uint32_t x, std::uint32_t y) { return static_cast<bool>(table[(static_cast<std::size_t>(x) << n) | y]); };
  for (std::uint32_t x = 0; x < s; ++x) {
    if (ob(x, 0)) return false;
    for (std::uint32_t y = 0; y < s; ++y) {
      for (std::uint32_t z = 0; z < s; ++z) {
        if ((y & x) == (z & x) && ob(x, y) != ob(x, z)) return false;
        if (ob(x, y) && ob(x, z) && (y & z & x) != 0 && !ob(x, y & z)) return false;
        bool y_in_x = (y & ~x) == 0;
        if (y_in_x && ob(x, y) && (x & ~z) == 0 && !ob(z, (z & ~x) | y)) return false;
        if (y_in_x && ob(x, z) && (y & z) != 0 && !ob(y, z)) return false;
      }
    }
  }
  return true;
}

// Every ob table on n <= 2 worlds satisfying C1-C5, by exhaustive
// enumeration of all 2^(4^n) tables.
inline std::vector<std::vector<bool>> all_cj_tables(std::size_t n) {
  const std::size_t cells = std::size_t{1} << (2 * n);
  std::vector<std::vector<bool>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    std::vector<bool> t(cells);
    for (std::size_t i = 0; i < cells; ++i) t[i] = (bits >> i) & 1;
    if (cj_conditions_hold(t, n)) out.push_back(std::move(t));
  }
  return out;
}

inline bool brute_force_sat(const Cnf& cnf) {
  const int n = cnf.num_vars();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    bool all = true;
    for (const auto& c : cnf.clauses()) {
      bool sat = false;
      for (Lit l : c) {
        int v = l > 0 ? l : -l;
        bool val = (bits >> (v - 1)) & 1;
        if (val == (l > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline Cnf random_cnf(std::mt19937& rng, int vars, int clauses, int max_width) {
  Cnf cnf(vars);
  std::uniform_int_distribution<int> var(1, vars), width(1, max_width), sign(0, 1);
  for (int i = 0; i < clauses; ++i) {
    std::vector<Lit> c;
    int w = width(rng);
    for (int k = 0; k < w; ++k) c.push_back(sign(rng) ? var(rng) : -var(rng));
    cnf.add_clause(c);
  }
  return cnf;
}

}  // namespace deon::testing

#endif  // DEON_TESTS_ORACLES_HPP_
