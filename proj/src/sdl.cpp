#include "deon/sdl.hpp"

#include <algorithm>

namespace deon {

KripkeModel KripkeModel::with_worlds(std::size_t n) {
  KripkeModel m;
  m.world_count = n;
  m.successors.assign(n, {});
  return m;
}

void KripkeModel::add_edge(World from, World to) { successors.at(from).insert(to); }

bool KripkeModel::holds(const std::string& atom, World w) const {
  auto it = valuation.find(atom);
  return it != valuation.end() && it->second.count(w) != 0;
}

bool KripkeModel::well_formed() const {
  if (world_count == 0 || successors.size() != world_count || current_world >= world_count) return false;
  for (const auto& succ : successors) {
    if (!succ.empty() && *succ.rbegin() >= world_count) return false;
  }
  for (const auto& [name, worlds] : valuation) {
    if (!worlds.empty() && *worlds.rbegin() >= world_count) return false;
  }
  return true;
}

namespace {

const Formula* find_dyadic(const Formula& f) {
  if (f.op() == Op::OblCond) return &f;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (const Formula* d = find_dyadic(f.arg(i))) return d;
  }
  return nullptr;
}

}  // namespace

UnsupportedConstruct::UnsupportedConstruct(const Formula& offending)
    : std::runtime_error("dyadic obligation is not SDL syntax: " + print(offending)), offending_(offending) {}

void require_sdl_syntax(const Formula& f) {
  if (const Formula* d = find_dyadic(f)) throw UnsupportedConstruct(*d);
}

bool is_serial(const KripkeModel& m) {
  if (m.successors.size() != m.world_count) return false;
  return std::none_of(m.successors.begin(), m.successors.end(), [](const auto& s) { return s.empty(); });
}

namespace {

std::vector<bool> extension(const KripkeModel& m, const Formula& f) {
  const std::size_t n = m.world_count;
  std::vector<bool> out(n, false);
  switch (f.op()) {
    case Op::Atom:
      for (World w = 0; w < n; ++w) out[w] = m.holds(f.name(), w);
      break;
    case Op::Top: out.assign(n, true); break;
    case Op::Bot: break;
    case Op::Not: {
      auto a = extension(m, f.arg(0));
      for (World w = 0; w < n; ++w) out[w] = !a[w];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Impl:
    case Op::Equiv: {
      auto a = extension(m, f.lhs());
      auto b = extension(m, f.rhs());
      for (World w = 0; w < n; ++w) {
        switch (f.op()) {
          case Op::And: out[w] = a[w] && b[w]; break;
          case Op::Or: out[w] = a[w] || b[w]; break;
          case Op::Impl: out[w] = !a[w] || b[w]; break;
          default: out[w] = a[w] == b[w]; break;
        }
      }
      break;
    }
    case Op::Obl: {
      auto a = extension(m, f.body());
      for (World w = 0; w < n; ++w) {
        const auto& succ = m.successors[w];
        out[w] = std::all_of(succ.begin(), succ.end(), [&](World v) { return a[v]; });
      }
      break;
    }
    case Op::OblCond: throw UnsupportedConstruct(f);
  }
  return out;
}

}  // namespace

std::vector<bool> extension_sdl(const KripkeModel& m, const Formula& f) {
  require_sdl_syntax(f);
  if (!m.well_formed()) throw std::invalid_argument("malformed Kripke model");
  return extension(m, f);
}

bool eval_sdl(const KripkeModel& m, World w, const Formula& f) {
  if (w >= m.world_count) throw std::out_of_range("world index out of range");
  return extension_sdl(m, f)[w];
}

}  // namespace deon
