#include "deon/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace deon {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> args;
  std::size_t hash;
  std::size_t depth;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Op op, std::vector<Formula> args) {
  auto node = std::make_shared<Node>();
  node->op = op;
  std::size_t h = std::hash<int>{}(static_cast<int>(op));
  std::size_t depth = 0;
  std::size_t size = 1;
  for (const auto& a : args) {
    h = mix(h, a.hash());
    depth = std::max(depth, a.depth());
    size += a.size();
  }
  node->hash = h;
  node->depth = args.empty() ? 0 : depth + 1;
  node->size = size;
  node->args = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->op = Op::Atom;
  node->hash = mix(std::hash<int>{}(static_cast<int>(Op::Atom)), std::hash<std::string>{}(name));
  node->depth = 0;
  node->size = 1;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::top() { return make(Op::Top, {}); }
Formula Formula::bot() { return make(Op::Bot, {}); }
Formula Formula::neg(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
Formula Formula::impl(Formula a, Formula b) { return make(Op::Impl, {std::move(a), std::move(b)}); }
Formula Formula::equiv(Formula a, Formula b) { return make(Op::Equiv, {std::move(a), std::move(b)}); }
Formula Formula::obl(Formula body) { return make(Op::Obl, {std::move(body)}); }
Formula Formula::obl(Formula body, Formula condition) {
  return make(Op::OblCond, {std::move(body), std::move(condition)});
}

Op Formula::op() const { return node_->op; }

const std::string& Formula::name() const {
  assert(op() == Op::Atom);
  return node_->name;
}

std::size_t Formula::arity() const { return node_->args.size(); }
const Formula& Formula::arg(std::size_t i) const { return node_->args.at(i); }
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::hash() const { return node_->hash; }

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (op() != other.op()) return op() < other.op() ? -1 : 1;
  if (op() == Op::Atom) return name().compare(other.name()) < 0 ? -1 : (name() == other.name() ? 0 : 1);
  if (arity() != other.arity()) return arity() < other.arity() ? -1 : 1;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (int c = arg(i).compare(other.arg(i)); c != 0) return c;
  }
  return 0;
}

bool is_atom_name(std::string_view s) {
  if (s.empty()) return false;
  auto lower_or_us = [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };
  if (!lower_or_us(s[0])) return false;
  if (s == "true" || s == "false") return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

// --- Parsing ---------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                         const std::string& found)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                         ": expected " + join(expected) + " but found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, True, False, O, LBrace, RBrace, LParen, RParen, Not, And, Or, Impl, Equiv, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto is_ident = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start_col = col;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(text.substr(i, len)), line, start_col});
      i += len;
      col += len;
    };
    switch (c) {
      case '{': push(Tok::LBrace, 1); continue;
      case '}': push(Tok::RBrace, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '~': push(Tok::Not, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      default: break;
    }
    if (text.substr(i, 2) == "->") {
      push(Tok::Impl, 2);
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      push(Tok::Equiv, 3);
      continue;
    }
    if (is_ident(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (word == "true") {
        push(Tok::True, j - i);
      } else if (word == "false") {
        push(Tok::False, j - i);
      } else if (word == "O") {
        push(Tok::O, 1);
      } else if (is_atom_name(word)) {
        push(Tok::Ident, j - i);
      } else {
        throw SyntaxError(line, start_col, {"atom"}, "'" + word + "'");
      }
      continue;
    }
    throw SyntaxError(line, start_col, {"formula"}, "'" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::vector<std::string> kPrimaryExpected = {"atom", "'true'", "'false'", "'('", "'~'", "'O'"};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = parse_range(0, toks_.size() - 1, {"end of input"});
    return f;
  }

 private:
  // Parses exactly the tokens in [begin, end); `closers` names what may
  // legitimately follow a complete formula at `end`.
  Formula parse_range(std::size_t begin, std::size_t end, std::vector<std::string> closers) {
    std::size_t saved_pos = pos_, saved_end = end_;
    pos_ = begin;
    end_ = end;
    Formula f = parse_equiv();
    if (pos_ != end_) {
      auto expected = std::vector<std::string>{"'&'", "'|'", "'->'", "'<->'"};
      expected.insert(expected.end(), closers.begin(), closers.end());
      fail(expected);
    }
    pos_ = saved_pos;
    end_ = saved_end;
    return f;
  }

  const Token& peek() const { return toks_[std::min(pos_, end_)]; }
  Tok kind() const { return pos_ >= end_ ? Tok::End : toks_[pos_].kind; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = pos_ >= end_ && toks_[end_].kind != Tok::End ? describe(toks_[end_]) : describe(t);
    throw SyntaxError(t.line, t.column, std::move(expected), found);
  }

  Formula parse_equiv() {
    Formula lhs = parse_impl();
    if (kind() == Tok::Equiv) {
      ++pos_;
      return Formula::equiv(lhs, parse_equiv());
    }
    return lhs;
  }

  Formula parse_impl() {
    Formula lhs = parse_disj();
    if (kind() == Tok::Impl) {
      ++pos_;
      return Formula::impl(lhs, parse_impl());
    }
    return lhs;
  }

  Formula parse_disj() {
    Formula f = parse_conj();
    while (kind() == Tok::Or) {
      ++pos_;
      f = Formula::disj(f, parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_unary();
    while (kind() == Tok::And) {
      ++pos_;
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (kind() == Tok::Not) {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (kind()) {
      case Tok::Ident: return Formula::atom(toks_[pos_++].text);
      case Tok::True: ++pos_; return Formula::top();
      case Tok::False: ++pos_; return Formula::bot();
      case Tok::LParen: {
        std::size_t close = matching(pos_);
        if (close == npos) {
          pos_ = end_;
          fail({"')'"});
        }
        Formula f = parse_range(pos_ + 1, close, {"')'"});
        pos_ = close + 1;
        return f;
      }
      case Tok::O: return parse_obligation();
      default: fail(kPrimaryExpected);
    }
  }

  Formula parse_obligation() {
    ++pos_;
    if (kind() != Tok::LBrace) fail({"'{'"});
    std::size_t open = pos_;
    std::size_t close = matching(open);
    if (close == npos) {
      pos_ = end_;
      fail({"'}'"});
    }
    std::size_t sep = npos;
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
      switch (toks_[i].kind) {
        case Tok::LParen:
        case Tok::LBrace: ++depth; break;
        case Tok::RParen:
        case Tok::RBrace: --depth; break;
        case Tok::Or:
          if (depth == 0) sep = i;
          break;
        default: break;
      }
    }
    std::size_t body_end = sep == npos ? close : sep;
    if (body_end == open + 1) {
      pos_ = open + 1;
      fail(kPrimaryExpected);
    }
    Formula body = parse_range(open + 1, body_end, sep == npos ? std::vector<std::string>{"'}'"}
                                                             : std::vector<std::string>{"'|'"});
    if (sep == npos) {
      pos_ = close + 1;
      return Formula::obl(body);
    }
    if (sep + 1 == close) {
      pos_ = close;
      fail(kPrimaryExpected);
    }
    Formula cond = parse_range(sep + 1, close, {"'}'"});
    pos_ = close + 1;
    return Formula::obl(body, cond);
  }

  // Index of the bracket closing the one at `open`, within the current range.
  std::size_t matching(std::size_t open) const {
    std::vector<Tok> stack;
    for (std::size_t i = open; i < end_; ++i) {
      Tok k = toks_[i].kind;
      if (k == Tok::LParen || k == Tok::LBrace) {
        stack.push_back(k);
      } else if (k == Tok::RParen || k == Tok::RBrace) {
        Tok want = k == Tok::RParen ? Tok::LParen : Tok::LBrace;
        if (stack.empty() || stack.back() != want) return npos;
        stack.pop_back();
        if (stack.empty()) return i;
      }
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

// --- Printing --------------------------------------------------------------

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Equiv: return 1;
    case Op::Impl: return 2;
    case Op::Or: return 3;
    case Op::And: return 4;
    case Op::Not: return 5;
    default: return 6;
  }
}

// `in_braces`: an unparenthesized `|` here would be read as the
// body/condition separator.
void print_to(std::ostream& os, const Formula& f, int min_prec, bool in_braces) {
  int prec = precedence(f.op());
  bool paren = prec < min_prec || (in_braces && f.op() == Op::Or);
  if (paren) {
    os << '(';
    in_braces = false;
  }
  switch (f.op()) {
    case Op::Atom: os << f.name(); break;
    case Op::Top: os << "true"; break;
    case Op::Bot: os << "false"; break;
    case Op::Not:
      os << '~';
      print_to(os, f.arg(0), 5, in_braces);
      break;
    case Op::And:
    case Op::Or:
      print_to(os, f.lhs(), prec, in_braces);
      os << (f.op() == Op::And ? " & " : " | ");
      print_to(os, f.rhs(), prec + 1, in_braces);
      break;
    case Op::Impl:
    case Op::Equiv:
      print_to(os, f.lhs(), prec + 1, in_braces);
      os << (f.op() == Op::Impl ? " -> " : " <-> ");
      print_to(os, f.rhs(), prec, in_braces);
      break;
    case Op::Obl:
      os << "O{";
      print_to(os, f.body(), 0, true);
      os << '}';
      break;
    case Op::OblCond:
      os << "O{";
      print_to(os, f.body(), 0, true);
      os << " | ";
      print_to(os, f.condition(), 0, true);
      os << '}';
      break;
  }
  if (paren) os << ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.arg(i), out);
}

void collect_obligations(const Formula& f, std::vector<Formula>& out) {
  if (f.is_obligation()) {
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_obligations(f.arg(i), out);
}

}  // namespace

std::string print(const Formula& f) {
  std::ostringstream os;
  print_to(os, f, 0, false);
  return os.str();
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<Formula> obligation_subterms(const Formula& f) {
  std::vector<Formula> out;
  collect_obligations(f, out);
  return out;
}

bool contains_dyadic(const Formula& f) {
  if (f.op() == Op::OblCond) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_dyadic(f.arg(i))) return true;
  }
  return false;
}

}  // namespace deon
