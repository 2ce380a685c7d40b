#include "deon/ddl.hpp"

#include <sstream>

namespace deon {

CJModel CJModel::with_worlds(std::size_t n) {
  if (n == 0 || n > kMaxWorlds) throw std::invalid_argument("CJ model world count out of range");
  CJModel m;
  m.world_count = n;
  m.ob_table.assign(std::size_t{1} << (2 * n), false);
  return m;
}

bool CJModel::ob(WorldSet context, WorldSet y) const {
  return ob_table[(static_cast<std::size_t>(context.bits()) << world_count) | y.bits()];
}

void CJModel::set_ob(WorldSet context, WorldSet y, bool value) {
  if (!context.subset_of(universe()) || !y.subset_of(universe())) throw std::out_of_range("world set out of range");
  ob_table[(static_cast<std::size_t>(context.bits()) << world_count) | y.bits()] = value;
}

std::vector<WorldSet> CJModel::ob_family(WorldSet context) const {
  std::vector<WorldSet> out;
  for (std::uint32_t y = 0; y < subset_count(); ++y) {
    if (ob(context, WorldSet(y))) out.push_back(WorldSet(y));
  }
  return out;
}

WorldSet CJModel::atom_extension(const std::string& atom) const {
  auto it = valuation.find(atom);
  return it == valuation.end() ? WorldSet() : it->second;
}

bool CJModel::well_formed() const {
  if (world_count == 0 || world_count > kMaxWorlds) return false;
  if (ob_table.size() != (std::size_t{1} << (2 * world_count))) return false;
  if (current_world >= world_count) return false;
  for (const auto& [name, ext] : valuation) {
    if (!ext.subset_of(universe())) return false;
  }
  return true;
}

WorldSet extension_ddl(const CJModel& m, const Formula& f) {
  const WorldSet all = m.universe();
  switch (f.op()) {
    case Op::Atom: return m.atom_extension(f.name()) & all;
    case Op::Top: return all;
    case Op::Bot: return WorldSet();
    case Op::Not: return extension_ddl(m, f.arg(0)).complement(m.world_count);
    case Op::And: return extension_ddl(m, f.lhs()) & extension_ddl(m, f.rhs());
    case Op::Or: return extension_ddl(m, f.lhs()) | extension_ddl(m, f.rhs());
    case Op::Impl: return extension_ddl(m, f.lhs()).complement(m.world_count) | extension_ddl(m, f.rhs());
    case Op::Equiv: {
      WorldSet a = extension_ddl(m, f.lhs()), b = extension_ddl(m, f.rhs());
      return (a & b) | (a | b).complement(m.world_count);
    }
    case Op::Obl: return m.ob(all, extension_ddl(m, f.body())) ? all : WorldSet();
    case Op::OblCond:
      return m.ob(extension_ddl(m, f.condition()), extension_ddl(m, f.body())) ? all : WorldSet();
  }
  return WorldSet();
}

bool eval_ddl(const CJModel& m, World w, const Formula& f) {
  if (w >= m.world_count) throw std::out_of_range("world index out of range");
  return extension_ddl(m, f).contains(w);
}

std::string ObViolation::describe() const {
  std::ostringstream os;
  os << "C" << static_cast<int>(condition) << " violated: X=" << x.to_string() << " Y=" << y.to_string();
  if (z) os << " Z=" << z->to_string();
  return os.str();
}

std::vector<ObViolation> check_ob_conditions(const CJModel& m, std::size_t enumeration_bound) {
  if (m.world_count > enumeration_bound) {
    throw EnumerationBoundExceeded("ob condition check limited to " + std::to_string(enumeration_bound) +
                                   " worlds, model has " + std::to_string(m.world_count));
  }
  const auto subsets = static_cast<std::uint32_t>(m.subset_count());
  std::vector<ObViolation> out;
  for (std::uint32_t xb = 0; xb < subsets; ++xb) {
    const WorldSet x(xb);
    if (m.ob(x, WorldSet())) out.push_back({ObCondition::C1, x, WorldSet(), std::nullopt});
  }
  for (std::uint32_t xb = 0; xb < subsets; ++xb) {
    const WorldSet x(xb);
    for (std::uint32_t yb = 0; yb < subsets; ++yb) {
      const WorldSet y(yb);
      if (!m.ob(x, y)) continue;
      for (std::uint32_t zb = 0; zb < subsets; ++zb) {
        const WorldSet z(zb);
        if ((y & x) == (z & x) && !m.ob(x, z)) out.push_back({ObCondition::C2, x, y, z});
      }
    }
  }
  for (std::uint32_t xb = 0; xb < subsets; ++xb) {
    const WorldSet x(xb);
    for (std::uint32_t yb = 0; yb < subsets; ++yb) {
      const WorldSet y(yb);
      if (!m.ob(x, y)) continue;
      for (std::uint32_t zb = yb + 1; zb < subsets; ++zb) {
        const WorldSet z(zb);
        if (m.ob(x, z) && !(y & z & x).empty() && !m.ob(x, y & z)) out.push_back({ObCondition::C3, x, y, z});
      }
    }
  }
  for (std::uint32_t xb = 0; xb < subsets; ++xb) {
    const WorldSet x(xb);
    for (std::uint32_t yb = 0; yb < subsets; ++yb) {
      const WorldSet y(yb);
      if (!y.subset_of(x) || !m.ob(x, y)) continue;
      for (std::uint32_t zb = 0; zb < subsets; ++zb) {
        const WorldSet z(zb);
        if (x.subset_of(z) && !m.ob(z, z.minus(x) | y)) out.push_back({ObCondition::C4, x, y, z});
      }
    }
  }
  for (std::uint32_t xb = 0; xb < subsets; ++xb) {
    const WorldSet x(xb);
    for (std::uint32_t yb = 0; yb < subsets; ++yb) {
      const WorldSet y(yb);
      if (!y.subset_of(x)) continue;
      for (std::uint32_t zb = 0; zb < subsets; ++zb) {
        const WorldSet z(zb);
        if (m.ob(x, z) && y.intersects(z) && !m.ob(y, z)) out.push_back({ObCondition::C5, x, y, z});
      }
    }
  }
  return out;
}

void close_ob(CJModel& m) {
  const auto subsets = static_cast<std::uint32_t>(m.subset_count());
  bool changed = true;
  auto add = [&](WorldSet x, WorldSet y) {
    if (!m.ob(x, y)) {
      m.set_ob(x, y);
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (std::uint32_t xb = 0; xb < subsets; ++xb) {
      const WorldSet x(xb);
      for (std::uint32_t yb = 0; yb < subsets; ++yb) {
        const WorldSet y(yb);
        if (!m.ob(x, y)) continue;
        for (std::uint32_t zb = 0; zb < subsets; ++zb) {
          const WorldSet z(zb);
          if ((z & x) == (y & x)) add(x, z);
          if (m.ob(x, z) && !(y & z & x).empty()) add(x, y & z);
          if (y.subset_of(x) && x.subset_of(z)) add(z, z.minus(x) | y);
          // C5 with the roles renamed: Z <= X, Y in ob(X).
          if (z.subset_of(x) && z.intersects(y)) add(z, y);
        }
      }
    }
  }
}

}  // namespace deon
