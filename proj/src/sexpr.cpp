#include "kbu/sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <memory>

#include "kbu/error.hpp"

namespace kbu {

namespace {

bool is_numeral(const std::string& name) {
  return !name.empty() &&
         std::ranges::all_of(name, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::optional<FinType> Signature::type_of(const std::string& name) const {
  if (auto it = constants_.find(name); it != constants_.end()) return it->second;
  const FinType zero;
  if (is_numeral(name)) return zero;
  if (name == "succ") return FinType::arrow(zero, zero);
  if (name == "max") return FinType::arrow(zero, FinType::arrow(zero, zero));
  return std::nullopt;
}

bool Signature::is_builtin(const std::string& name, FinType type) {
  auto t = Signature().type_of(name);
  return t && *t == type;
}

namespace {

// --- reader -------------------------------------------------------------------

struct SNode {
  std::string atom;  // empty for lists
  std::vector<SNode> items;
  bool is_list = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SNode read() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", line_, col_);
    SNode n;
    n.line = line_;
    n.column = col_;
    char c = text_[pos_];
    if (c == ')') throw SyntaxError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      n.is_list = true;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", line_, col_);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        n.items.push_back(read());
      }
      return n;
    }
    while (pos_ < text_.size()) {
      c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ';') break;
      n.atom.push_back(c);
      advance();
    }
    return n;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

[[noreturn]] void fail(const SNode& n, const std::string& what) {
  throw SyntaxError(what, n.line, n.column);
}

bool is_head(const SNode& n, const char* head) {
  return n.is_list && !n.items.empty() && !n.items[0].is_list && n.items[0].atom == head;
}

const std::string& identifier(const SNode& n, const char* role) {
  if (n.is_list || n.atom.empty()) fail(n, std::string("expected ") + role);
  return n.atom;
}

// --- conversion ---------------------------------------------------------------

FinType to_type(const SNode& n) {
  if (!n.is_list) {
    if (n.atom == "0") return FinType::base();
    fail(n, "expected a type, got '" + n.atom + "'");
  }
  if (!is_head(n, "->") || n.items.size() < 3) fail(n, "expected a type (-> d c)");
  FinType t = to_type(n.items.back());
  for (std::size_t i = n.items.size() - 1; i-- > 1;) t = FinType::arrow(to_type(n.items[i]), t);
  return t;
}

class Converter {
 public:
  explicit Converter(const Signature& sig) : sig_(sig) {}

  Term term(const SNode& n) {
    if (!n.is_list) {
      const auto& name = identifier(n, "a term");
      if (is_numeral(name)) return Term::constant(name, FinType::base());
      for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
        if (it->name == name) return Term::variable(*it);
      return Term::variable(Var{name, FinType::base()});
    }
    if (n.items.empty() || n.items[0].is_list) fail(n, "expected a term");
    const auto& head = n.items[0].atom;
    if (head == "c") {
      if (n.items.size() != 2 && n.items.size() != 3) fail(n, "expected (c name) or (c name type)");
      const auto& name = identifier(n.items[1], "a constant name");
      if (n.items.size() == 3) return Term::constant(name, to_type(n.items[2]));
      auto ty = sig_.type_of(name);
      if (!ty) fail(n.items[1], "unknown constant '" + name + "'");
      return Term::constant(name, *ty);
    }
    if (head == "v") {
      if (n.items.size() != 3) fail(n, "expected (v name type)");
      return Term::variable(Var{identifier(n.items[1], "a variable name"), to_type(n.items[2])});
    }
    if (head == "ap") {
      if (n.items.size() < 3) fail(n, "expected (ap f a ...)");
      Term t = term(n.items[1]);
      for (std::size_t i = 2; i < n.items.size(); ++i) t = Term::apply(t, term(n.items[i]));
      return t;
    }
    fail(n.items[0], "unknown term constructor '" + head + "'");
  }

  Formula formula(const SNode& n) {
    if (!n.is_list) {
      if (n.atom == "bot") return Formula::bot();
      fail(n, "expected a formula, got '" + n.atom + "'");
    }
    if (n.items.empty() || n.items[0].is_list) fail(n, "expected a formula");
    const auto& head = n.items[0].atom;
    const auto arity = n.items.size() - 1;
    auto expect = [&](std::size_t k, const char* shape) {
      if (arity != k) fail(n, std::string("expected ") + shape);
    };
    if (head == "bot") {
      expect(0, "(bot)");
      return Formula::bot();
    }
    if (head == "atom") {
      if (arity < 1) fail(n, "expected (atom P t ...)");
      std::vector<Term> args;
      for (std::size_t i = 2; i < n.items.size(); ++i) args.push_back(term(n.items[i]));
      return Formula::atom(identifier(n.items[1], "a predicate name"), std::move(args));
    }
    if (head == "maj" || head == "leq" || head == "eq") {
      expect(2, ("(" + head + " t q)").c_str());
      auto t = term(n.items[1]);
      auto q = term(n.items[2]);
      if (head == "maj") return Formula::maj(t, q);
      if (head == "leq") return Formula::leq0(t, q);
      return Formula::eq0(t, q);
    }
    if (head == "not") {
      expect(1, "(not A)");
      return Formula::negation(formula(n.items[1]));
    }
    if (head == "and" || head == "or" || head == "imp") {
      expect(2, ("(" + head + " A B)").c_str());
      auto a = formula(n.items[1]);
      auto b = formula(n.items[2]);
      if (head == "and") return Formula::conj(a, b);
      if (head == "or") return Formula::disj(a, b);
      return Formula::imp(a, b);
    }
    if (head == "all" || head == "ex") {
      expect(3, ("(" + head + " x type A)").c_str());
      Var v{identifier(n.items[1], "a variable name"), to_type(n.items[2])};
      scope_.push_back(v);
      auto body = formula(n.items[3]);
      scope_.pop_back();
      return head == "all" ? Formula::forall(v, body) : Formula::exists(v, body);
    }
    if (head == "allb" || head == "exb") {
      expect(4, ("(" + head + " x type t A)").c_str());
      Var v{identifier(n.items[1], "a variable name"), to_type(n.items[2])};
      auto bound = term(n.items[3]);  // outside the binder's scope
      scope_.push_back(v);
      auto body = formula(n.items[4]);
      scope_.pop_back();
      return head == "allb" ? Formula::bforall(v, bound, body) : Formula::bexists(v, bound, body);
    }
    fail(n.items[0], "unknown formula constructor '" + head + "'");
  }

 private:
  const Signature& sig_;
  std::vector<Var> scope_;
};

// --- printing -----------------------------------------------------------------

std::string unicode_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '~') out += "̃";
    else out.push_back(c);
  }
  return out;
}

std::string latex_name(const std::string& name) {
  std::string base = name;
  std::string digits;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) {
    digits.insert(digits.begin(), base.back());
    base.pop_back();
  }
  std::string out;
  std::size_t tildes = 0;
  while (!base.empty() && base.back() == '~') {
    ++tildes;
    base.pop_back();
  }
  out = base;
  for (std::size_t i = 0; i < tildes; ++i) out = "\\tilde{" + out + "}";
  if (!digits.empty()) out += "_{" + digits + "}";
  return out;
}

class Printer {
 public:
  explicit Printer(Style style) : style_(style) {}

  std::string type(FinType t) const {
    switch (style_) {
      case Style::Sexpr: return t.sexpr();
      case Style::Unicode: return t.pretty();
      case Style::Latex: {
        if (t.is_base()) return "0";
        auto d = type(t.domain());
        if (t.domain().is_arrow()) d = "(" + d + ")";
        return d + " \\to " + type(t.codomain());
      }
    }
    return {};
  }

  std::string name(const std::string& n) const {
    switch (style_) {
      case Style::Sexpr: return n;
      case Style::Unicode: return unicode_name(n);
      case Style::Latex: return latex_name(n);
    }
    return n;
  }

  std::string term(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        const auto& v = t.var();
        if (style_ != Style::Sexpr) return name(v.name);
        if (in_scope(v) || (v.type.is_base() && !shadowed(v))) return v.name;
        return "(v " + v.name + " " + v.type.sexpr() + ")";
      }
      case Term::Kind::Constant:
        if (style_ != Style::Sexpr || is_numeral(t.constant_name())) return t.constant_name();
        if (Signature::is_builtin(t.constant_name(), t.constant_type()))
          return "(c " + t.constant_name() + ")";
        return "(c " + t.constant_name() + " " + t.constant_type().sexpr() + ")";
      case Term::Kind::Application: {
        if (style_ == Style::Sexpr) {
          // flatten the curried spine: (ap f a b)
          std::vector<const Term*> args;
          const Term* head = &t;
          while (head->kind() == Term::Kind::Application) {
            args.push_back(&head->argument());
            head = &head->function();
          }
          std::string out = "(ap " + term(*head);
          for (auto it = args.rbegin(); it != args.rend(); ++it) out += " " + term(**it);
          return out + ")";
        }
        auto arg = term(t.argument());
        if (t.argument().kind() == Term::Kind::Application) arg = "(" + arg + ")";
        return term(t.function()) + (style_ == Style::Latex ? "\\," : " ") + arg;
      }
    }
    return {};
  }

  std::string formula(const Formula& f) {
    switch (style_) {
      case Style::Sexpr: return sexpr(f);
      default: return infix(f);
    }
  }

 private:
  bool in_scope(const Var& v) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (it->name == v.name) return *it == v;
    return false;
  }
  bool shadowed(const Var& v) const {
    for (const auto& s : scope_)
      if (s.name == v.name) return true;
    return false;
  }

  std::string sexpr(const Formula& f) {
    auto terms = [&] {
      std::string out;
      for (const auto& t : f.terms()) out += " " + term(t);
      return out;
    };
    switch (f.op()) {
      case Op::Bot: return "bot";
      case Op::Atom: return "(atom " + f.predicate() + terms() + ")";
      case Op::Maj: return "(maj" + terms() + ")";
      case Op::Leq0: return "(leq" + terms() + ")";
      case Op::Not: return "(not " + sexpr(f.left()) + ")";
      case Op::And: return "(and " + sexpr(f.left()) + " " + sexpr(f.right()) + ")";
      case Op::Or: return "(or " + sexpr(f.left()) + " " + sexpr(f.right()) + ")";
      case Op::Imp: return "(imp " + sexpr(f.left()) + " " + sexpr(f.right()) + ")";
      case Op::Forall:
      case Op::Exists:
      case Op::BForall:
      case Op::BExists: {
        std::string out = std::string("(") + op_name(f.op()) + " " + f.var().name + " " +
                          f.var().type.sexpr();
        if (f.is_bounded_quantifier()) out += " " + term(f.bound());
        scope_.push_back(f.var());
        out += " " + sexpr(f.body()) + ")";
        scope_.pop_back();
        return out;
      }
    }
    return {};
  }

  const char* sym(Op op) const {
    const bool tex = style_ == Style::Latex;
    switch (op) {
      case Op::Bot: return tex ? "\\bot" : "⊥";
      case Op::Maj: return tex ? " \\unlhd " : " ⊴ ";
      case Op::Leq0: return tex ? " \\leq_0 " : " ≤₀ ";
      case Op::Not: return tex ? "\\neg " : "¬";
      case Op::And: return tex ? " \\wedge " : " ∧ ";
      case Op::Or: return tex ? " \\vee " : " ∨ ";
      case Op::Imp: return tex ? " \\to " : " → ";
      case Op::Forall:
      case Op::BForall: return tex ? "\\forall " : "∀";
      case Op::Exists:
      case Op::BExists: return tex ? "\\exists " : "∃";
      default: return "";
    }
  }

  std::string type_mark(FinType t) const {
    if (style_ == Style::Latex) return "^{" + type(t) + "}";
    if (t.is_base()) return "⁰";
    return "^(" + type(t) + ")";
  }

  bool needs_parens(const Formula& f) const {
    switch (f.op()) {
      case Op::And:
      case Op::Or:
      case Op::Imp:
      case Op::Maj:
      case Op::Leq0:
        return true;
      default:
        return false;
    }
  }

  std::string wrapped(const Formula& f) {
    auto s = infix(f);
    return needs_parens(f) ? "(" + s + ")" : s;
  }

  std::string infix(const Formula& f) {
    switch (f.op()) {
      case Op::Bot: return sym(Op::Bot);
      case Op::Atom: {
        std::string out = f.predicate();
        if (f.terms().empty()) return out;
        out += "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i) out += ", ";
          out += term(f.terms()[i]);
        }
        return out + ")";
      }
      case Op::Maj:
      case Op::Leq0:
        return term(f.terms()[0]) + sym(f.op()) + term(f.terms()[1]);
      case Op::Not:
        return sym(Op::Not) + wrapped(f.left());
      case Op::And:
      case Op::Or:
      case Op::Imp: {
        auto side = [&](const Formula& g) {
          auto s = infix(g);
          const bool binary = g.op() == Op::And || g.op() == Op::Or || g.op() == Op::Imp;
          return binary ? "(" + s + ")" : s;
        };
        return side(f.left()) + sym(f.op()) + side(f.right());
      }
      case Op::Forall:
      case Op::Exists:
      case Op::BForall:
      case Op::BExists: {
        std::string out = std::string(sym(f.op())) + name(f.var().name) + type_mark(f.var().type);
        if (f.is_bounded_quantifier())
          out += (style_ == Style::Latex ? " \\unlhd " : "⊴") + term(f.bound());
        return out + (style_ == Style::Latex ? "\\, (" : " (") + infix(f.body()) + ")";
      }
    }
    return {};
  }

  Style style_;
  std::vector<Var> scope_;
};

}  // namespace

FinType parse_type(std::string_view text) {
  Reader r(text);
  auto n = r.read();
  if (!r.at_end()) throw SyntaxError("trailing input after type", n.line, n.column);
  return to_type(n);
}

Formula parse_formula(std::string_view text, const Signature& sig) {
  Reader r(text);
  auto n = r.read();
  auto f = Converter(sig).formula(n);
  if (!r.at_end()) throw SyntaxError("trailing input after formula", n.line, n.column);
  return f;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text, const std::string& prefix,
                                      const Signature& sig) {
  Reader r(text);
  std::vector<CorpusEntry> out;
  while (!r.at_end()) {
    auto n = r.read();
    CorpusEntry e{prefix + "#" + std::to_string(out.size() + 1), Formula::bot(), false};
    const SNode* body = &n;
    if (is_head(n, "def")) {
      if (n.items.size() < 3) fail(n, "expected (def ID [:large] FORMULA)");
      e.id = identifier(n.items[1], "an entry id");
      for (const auto& prev : out)
        if (prev.id == e.id) fail(n.items[1], "duplicate entry id '" + e.id + "'");
      for (std::size_t i = 2; i + 1 < n.items.size(); ++i) {
        if (n.items[i].is_list || n.items[i].atom != ":large") fail(n.items[i], "unknown entry flag");
        e.large = true;
      }
      body = &n.items.back();
    }
    e.formula = Converter(sig).formula(*body);
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_type(FinType t, Style style) { return Printer(style).type(t); }

std::string format_term(const Term& t, Style style) { return Printer(style).term(t); }

std::string format_formula(const Formula& f, Style style) { return Printer(style).formula(f); }

std::string format_tuple(const VarTuple& xs, Style style) {
  Printer p(style);
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += p.name(xs[i].name) + ":" + p.type(xs[i].type);
  }
  return out + ")";
}

}  // namespace kbu
