#include "deon/thf.hpp"

#include <algorithm>
#include <sstream>

#include "deon/sdl.hpp"

namespace deon {

std::string_view to_string(ThfRole r) {
  switch (r) {
    case ThfRole::Type: return "type";
    case ThfRole::Definition: return "definition";
    case ThfRole::Axiom: return "axiom";
    case ThfRole::Conjecture: return "conjecture";
  }
  return "axiom";
}

std::string ThfDocument::text() const {
  std::ostringstream os;
  for (const auto& r : records) os << "thf(" << r.name << ", " << to_string(r.role) << ", " << r.body << ").\n";
  return os.str();
}

std::size_t ThfDocument::count(ThfRole role) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const ThfRecord& r) { return r.role == role; }));
}

namespace {

constexpr const char* kProp = "(dl_world > $o)";
constexpr const char* kSets3 = "X: dl_world > $o, Y: dl_world > $o, Z: dl_world > $o";

class Builder {
 public:
  void type(const std::string& sym, const std::string& ty) {
    doc_.records.push_back({sym + "_type", ThfRole::Type, sym + ": " + ty});
  }
  void define(const std::string& sym, const std::string& lambda) {
    doc_.records.push_back({sym + "_def", ThfRole::Definition, sym + " = (" + lambda + ")"});
  }
  void axiom(const std::string& name, const std::string& body) {
    doc_.records.push_back({name, ThfRole::Axiom, body});
  }
  void conjecture(const std::string& name, const std::string& body) {
    doc_.records.push_back({name, ThfRole::Conjecture, body});
  }
  ThfDocument take() { return std::move(doc_); }

 private:
  ThfDocument doc_;
};

void connectives(Builder& b) {
  const std::string unary = std::string(kProp) + " > dl_world > $o";
  const std::string binary = std::string(kProp) + " > " + kProp + " > dl_world > $o";
  b.type("dl_top", "dl_world > $o");
  b.define("dl_top", "^[W: dl_world]: $true");
  b.type("dl_bot", "dl_world > $o");
  b.define("dl_bot", "^[W: dl_world]: $false");
  b.type("dl_not", unary);
  b.define("dl_not", "^[A: dl_world > $o, W: dl_world]: ~ (A @ W)");
  const std::pair<const char*, const char*> ops[] = {
      {"dl_and", "&"}, {"dl_or", "|"}, {"dl_impl", "=>"}, {"dl_equiv", "<=>"}};
  for (const auto& [sym, op] : ops) {
    b.type(sym, binary);
    b.define(sym, std::string("^[A: dl_world > $o, B: dl_world > $o, W: dl_world]: ((A @ W) ") + op + " (B @ W))");
  }
}

void sdl_frame(Builder& b) {
  b.type("dl_rel", "dl_world > dl_world > $o");
  b.type("dl_obl", std::string(kProp) + " > dl_world > $o");
  b.define("dl_obl", "^[A: dl_world > $o, W: dl_world]: ! [V: dl_world]: ((dl_rel @ W @ V) => (A @ V))");
  b.axiom("dl_serial", "! [W: dl_world]: ? [V: dl_world]: (dl_rel @ W @ V)");
}

void ddl_frame(Builder& b) {
  const std::string all = std::string("! [") + kSets3 + "]: ";
  b.type("dl_ob", std::string(kProp) + " > " + kProp + " > $o");
  b.axiom("dl_ob_c1", "! [X: dl_world > $o]: ~ (dl_ob @ X @ dl_bot)");
  b.axiom("dl_ob_c2", all +
                          "((! [W: dl_world]: (((Y @ W) & (X @ W)) <=> ((Z @ W) & (X @ W)))) => "
                          "((dl_ob @ X @ Y) <=> (dl_ob @ X @ Z)))");
  b.axiom("dl_ob_c3", all +
                          "(((dl_ob @ X @ Y) & (dl_ob @ X @ Z) & (? [W: dl_world]: ((X @ W) & (Y @ W) & (Z @ W)))) => "
                          "(dl_ob @ X @ (^[W: dl_world]: ((Y @ W) & (Z @ W)))))");
  b.axiom("dl_ob_c4", all +
                          "(((! [W: dl_world]: ((Y @ W) => (X @ W))) & (dl_ob @ X @ Y) & "
                          "(! [W: dl_world]: ((X @ W) => (Z @ W)))) => "
                          "(dl_ob @ Z @ (^[W: dl_world]: (((Z @ W) & ~ (X @ W)) | (Y @ W)))))");
  b.axiom("dl_ob_c5", all +
                          "(((! [W: dl_world]: ((Y @ W) => (X @ W))) & (dl_ob @ X @ Z) & "
                          "(? [W: dl_world]: ((Y @ W) & (Z @ W)))) => (dl_ob @ Y @ Z))");
  b.type("dl_oblc", std::string(kProp) + " > " + kProp + " > dl_world > $o");
  b.define("dl_oblc", "^[A: dl_world > $o, B: dl_world > $o, W: dl_world]: (dl_ob @ B @ A)");
  b.type("dl_obl", std::string(kProp) + " > dl_world > $o");
  b.define("dl_obl", "^[A: dl_world > $o]: (dl_oblc @ A @ dl_top)");
}

}  // namespace

std::string thf_term(const Formula& f, Logic logic) {
  switch (f.op()) {
    case Op::Atom: return "a_" + f.name();
    case Op::Top: return "dl_top";
    case Op::Bot: return "dl_bot";
    case Op::Not: return "(dl_not @ " + thf_term(f.arg(0), logic) + ")";
    case Op::And: return "(dl_and @ " + thf_term(f.lhs(), logic) + " @ " + thf_term(f.rhs(), logic) + ")";
    case Op::Or: return "(dl_or @ " + thf_term(f.lhs(), logic) + " @ " + thf_term(f.rhs(), logic) + ")";
    case Op::Impl: return "(dl_impl @ " + thf_term(f.lhs(), logic) + " @ " + thf_term(f.rhs(), logic) + ")";
    case Op::Equiv: return "(dl_equiv @ " + thf_term(f.lhs(), logic) + " @ " + thf_term(f.rhs(), logic) + ")";
    case Op::Obl: return "(dl_obl @ " + thf_term(f.body(), logic) + ")";
    case Op::OblCond:
      if (logic == Logic::Sdl) throw UnsupportedConstruct(f);
      return "(dl_oblc @ " + thf_term(f.body(), logic) + " @ " + thf_term(f.condition(), logic) + ")";
  }
  return "dl_top";
}

ThfDocument export_thf(const Scenario& s, Logic logic, const std::optional<Formula>& goal) {
  require_logic_syntax(s, logic);
  if (goal && logic == Logic::Sdl) require_sdl_syntax(*goal);

  Builder b;
  b.type("dl_world", "$tType");
  connectives(b);
  if (logic == Logic::Sdl) {
    sdl_frame(b);
  } else {
    ddl_frame(b);
  }

  std::set<std::string> atom_names = s.atoms();
  if (goal) {
    auto g = atoms(*goal);
    atom_names.insert(g.begin(), g.end());
  }
  for (const auto& a : atom_names) b.type("a_" + a, "dl_world > $o");

  b.type("dl_valid", std::string(kProp) + " > $o");
  b.define("dl_valid", "^[A: dl_world > $o]: ! [W: dl_world]: (A @ W)");
  for (const auto& n : s.norms) b.axiom("norm_" + n.id, "(dl_valid @ " + thf_term(n.formula, logic) + ")");

  b.type("dl_cw", "dl_world");
  for (const auto& f : s.facts) b.axiom("fact_" + f.id, "(" + thf_term(f.formula, logic) + " @ dl_cw)");

  if (goal) b.conjecture("dl_goal", "(" + thf_term(*goal, logic) + " @ dl_cw)");
  return b.take();
}

}  // namespace deon
