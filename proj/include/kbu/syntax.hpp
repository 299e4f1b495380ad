#pragma once

#include <compare>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kbu/fintype.hpp"

namespace kbu {

// A typed variable. Identity is the (name, type) pair.
struct Var {
  std::string name;
  FinType type;

  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.type <=> b.type;
  }
};

class Term;

// An ordered, possibly empty tuple of pairwise distinct variables.
class VarTuple {
 public:
  VarTuple() = default;
  VarTuple(std::vector<Var> items);  // throws Error on a repeated variable
  VarTuple(std::initializer_list<Var> items) : VarTuple(std::vector<Var>(items)) {}

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Var& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Var>& items() const { return items_; }

  std::vector<FinType> types() const;
  std::vector<Term> terms() const;

  // Concatenation; the two tuples must be disjoint.
  friend VarTuple operator+(const VarTuple& a, const VarTuple& b);
  friend bool operator==(const VarTuple&, const VarTuple&) = default;

 private:
  std::vector<Var> items_;
};

class Term {
 public:
  enum class Kind { Variable, Constant, Application };

  static Term variable(Var v);
  static Term constant(std::string name, FinType type);
  // Ill-typed applications are representable; type() is then empty.
  static Term apply(Term function, Term argument);
  // t a1 a2 ... an
  static Term apply_all(Term function, std::span<const Term> arguments);

  Term(Var v) : Term(variable(std::move(v))) {}

  Kind kind() const;
  bool is_variable() const { return kind() == Kind::Variable; }
  const Var& var() const;                 // Variable
  const std::string& constant_name() const;  // Constant
  FinType constant_type() const;          // Constant
  const Term& function() const;           // Application
  const Term& argument() const;           // Application

  // Empty if some application inside the term is ill-typed.
  std::optional<FinType> type() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Op {
  Bot,
  Atom,
  Maj,   // t ⊴ q
  Leq0,  // t ≤₀ q
  Not,
  And,
  Or,
  Imp,
  Forall,
  Exists,
  BForall,  // ∀x⊴t
  BExists,  // ∃x⊴t
};

const char* op_name(Op op);

// Immutable formula AST shared by the classical and intuitionistic languages.
class Formula {
 public:
  static Formula bot();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula maj(Term t, Term q);
  static Formula leq0(Term t, Term q);
  // t =₀ q, as the conjunction t ≤₀ q ∧ q ≤₀ t
  static Formula eq0(Term t, Term q);
  static Formula negation(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula forall(Var v, Formula body);
  static Formula exists(Var v, Formula body);
  static Formula bforall(Var v, Term bound, Formula body);
  static Formula bexists(Var v, Term bound, Formula body);

  Op op() const;
  bool is_quantifier() const;
  bool is_bounded_quantifier() const { return op() == Op::BForall || op() == Op::BExists; }
  bool is_atomic() const;  // Atom, Maj, Leq0, Bot

  const std::string& predicate() const;  // Atom
  // Atom arguments; the two sides of Maj / Leq0; the bound of BForall / BExists.
  std::span<const Term> terms() const;
  const Term& bound() const { return terms()[0]; }
  const Formula& left() const;   // Not, And, Or, Imp, quantifier body
  const Formula& right() const;  // And, Or, Imp
  const Formula& body() const { return left(); }
  const Var& var() const;        // quantifiers

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace kbu
