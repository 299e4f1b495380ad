#include "kbu/syntax.hpp"

#include <algorithm>
#include <set>

#include "kbu/error.hpp"

namespace kbu {

VarTuple::VarTuple(std::vector<Var> items) : items_(std::move(items)) {
  std::set<Var> seen;
  for (const auto& v : items_)
    if (!seen.insert(v).second) throw Error("variable " + v.name + " repeated in tuple");
}

std::vector<FinType> VarTuple::types() const {
  std::vector<FinType> out;
  out.reserve(items_.size());
  for (const auto& v : items_) out.push_back(v.type);
  return out;
}

std::vector<Term> VarTuple::terms() const {
  return std::vector<Term>(items_.begin(), items_.end());
}

VarTuple operator+(const VarTuple& a, const VarTuple& b) {
  auto items = a.items_;
  items.insert(items.end(), b.items_.begin(), b.items_.end());
  return VarTuple(std::move(items));
}

// --- terms -----------------------------------------------------------------

struct Term::Node {
  Kind kind;
  Var var;  // Variable
  std::string name;  // Constant
  FinType ctype;     // Constant
  std::optional<Term> function;
  std::optional<Term> argument;
  std::optional<FinType> type;
};

Term Term::variable(Var v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->type = v.type;
  n->var = std::move(v);
  return Term(std::move(n));
}

Term Term::constant(std::string name, FinType type) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->name = std::move(name);
  n->ctype = type;
  n->type = type;
  return Term(std::move(n));
}

Term Term::apply(Term function, Term argument) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Application;
  auto ft = function.type();
  auto at = argument.type();
  if (ft && at && ft->is_arrow() && ft->domain() == *at) n->type = ft->codomain();
  n->function = std::move(function);
  n->argument = std::move(argument);
  return Term(std::move(n));
}

Term Term::apply_all(Term function, std::span<const Term> arguments) {
  for (const auto& a : arguments) function = apply(std::move(function), a);
  return function;
}

Term::Kind Term::kind() const { return node_->kind; }
const Var& Term::var() const { return node_->var; }
const std::string& Term::constant_name() const { return node_->name; }
FinType Term::constant_type() const { return node_->ctype; }
const Term& Term::function() const { return *node_->function; }
const Term& Term::argument() const { return *node_->argument; }
std::optional<FinType> Term::type() const { return node_->type; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable:
      return a.var() == b.var();
    case Term::Kind::Constant:
      return a.constant_name() == b.constant_name() && a.constant_type() == b.constant_type();
    case Term::Kind::Application:
      return a.function() == b.function() && a.argument() == b.argument();
  }
  return false;
}

// --- formulas --------------------------------------------------------------

const char* op_name(Op op) {
  switch (op) {
    case Op::Bot: return "bot";
    case Op::Atom: return "atom";
    case Op::Maj: return "maj";
    case Op::Leq0: return "leq";
    case Op::Not: return "not";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Imp: return "imp";
    case Op::Forall: return "all";
    case Op::Exists: return "ex";
    case Op::BForall: return "allb";
    case Op::BExists: return "exb";
  }
  return "?";
}

struct Formula::Node {
  Op op;
  std::string predicate;
  std::vector<Term> terms;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::optional<Var> var;
};

Formula Formula::bot() {
  auto n = std::make_shared<Node>();
  n->op = Op::Bot;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->predicate = std::move(predicate);
  n->terms = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::maj(Term t, Term q) {
  auto n = std::make_shared<Node>();
  n->op = Op::Maj;
  n->terms = {std::move(t), std::move(q)};
  return Formula(std::move(n));
}

Formula Formula::leq0(Term t, Term q) {
  auto n = std::make_shared<Node>();
  n->op = Op::Leq0;
  n->terms = {std::move(t), std::move(q)};
  return Formula(std::move(n));
}

Formula Formula::eq0(Term t, Term q) { return conj(leq0(t, q), leq0(q, t)); }

Formula Formula::negation(Formula a) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->left = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Or;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::imp(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Imp;
  n->left = std::move(a);
  n->right = std::move(b);
  return Formula(std::move(n));
}

Formula Formula::forall(Var v, Formula body) {
  auto n = std::make_shared<Node>();
  n->op = Op::Forall;
  n->var = std::move(v);
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(Var v, Formula body) {
  auto n = std::make_shared<Node>();
  n->op = Op::Exists;
  n->var = std::move(v);
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::bforall(Var v, Term bound, Formula body) {
  auto n = std::make_shared<Node>();
  n->op = Op::BForall;
  n->var = std::move(v);
  n->terms = {std::move(bound)};
  n->left = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::bexists(Var v, Term bound, Formula body) {
  auto n = std::make_shared<Node>();
  n->op = Op::BExists;
  n->var = std::move(v);
  n->terms = {std::move(bound)};
  n->left = std::move(body);
  return Formula(std::move(n));
}

Op Formula::op() const { return node_->op; }

bool Formula::is_quantifier() const {
  switch (op()) {
    case Op::Forall:
    case Op::Exists:
    case Op::BForall:
    case Op::BExists:
      return true;
    default:
      return false;
  }
}

bool Formula::is_atomic() const {
  switch (op()) {
    case Op::Bot:
    case Op::Atom:
    case Op::Maj:
    case Op::Leq0:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::predicate() const { return node_->predicate; }
std::span<const Term> Formula::terms() const { return node_->terms; }
const Formula& Formula::left() const { return *node_->left; }
const Formula& Formula::right() const { return *node_->right; }
const Var& Formula::var() const { return *node_->var; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.predicate != y.predicate || x.var != y.var) return false;
  if (!std::ranges::equal(x.terms, y.terms)) return false;
  if (x.left.has_value() != y.left.has_value() || x.right.has_value() != y.right.has_value())
    return false;
  if (x.left && !(*x.left == *y.left)) return false;
  if (x.right && !(*x.right == *y.right)) return false;
  return true;
}

}  // namespace kbu
