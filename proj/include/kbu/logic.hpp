#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "kbu/syntax.hpp"

namespace kbu {

enum class Language { Classical, Intuitionistic };

// Classical formulas use only atoms, ¬, ∨, ∧, ∀⊴ and ∀.
bool is_classical(const Formula& f);
Language language_of(const Formula& f);

struct TypeReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks term typing, the ⊴ / ≤₀ argument constraints, the bound-variable
// side condition of bounded quantifiers, and that no variable, constant or
// predicate name is used at two different types.
TypeReport well_typed(const Formula& f);

// No unbounded quantifier anywhere.
bool is_bounded(const Formula& f);

std::set<Var> free_vars(const Term& t);
std::set<Var> free_vars(const Formula& f);
// Every variable name occurring in f, bound or free.
std::set<std::string> var_names(const Formula& f);

// Fresh, pairwise distinct variables whose names avoid every name in `avoid`.
// Each name is the base name if unused, otherwise base name followed by the
// smallest counter (1, 2, ...) that makes it unused.
VarTuple fresh_tuple(std::span<const std::string> base_names, std::span<const FinType> types,
                     const std::set<Var>& avoid);
VarTuple fresh_tuple(std::span<const std::string> base_names, std::span<const FinType> types,
                     const std::set<std::string>& avoid);

using Substitution = std::map<Var, Term>;

// Simultaneous capture-avoiding substitution. Throws TypeError when a
// replacement term does not have its variable's type.
Formula substitute(const Formula& f, const Substitution& s);
Formula substitute(const Formula& f, const Var& v, const Term& t);
Term substitute(const Term& t, const Substitution& s);

// Maps tuple `from` componentwise onto `to`; sizes must agree.
Substitution tuple_substitution(const VarTuple& from, std::span<const Term> to);

// Tuple application: for Y = (Y1..Ym) and arguments a1..an returns
// (Y1 a1 .. an, ..., Ym a1 .. an).
std::vector<Term> apply_tuple(const VarTuple& functions, std::span<const Term> arguments);

// x1 ⊴ x1 ∧ (x2 ⊴ x2 ∧ ...); only meaningful for non-empty tuples.
Formula self_majorizing_conj(const VarTuple& xs);

// ∀̃x A :≡ ∀x(x⊴x → A) and friends; identity on an empty tuple.
Formula monotone_forall(const VarTuple& xs, const Formula& body);
Formula monotone_exists(const VarTuple& xs, const Formula& body);
Formula bounded_monotone_forall(const VarTuple& xs, std::span<const Term> bounds,
                                const Formula& body);
Formula bounded_monotone_exists(const VarTuple& xs, std::span<const Term> bounds,
                                const Formula& body);

// ∀x⊴t A ↦ ∀x(x⊴t → A), ∃x⊴t A ↦ ∃x(x⊴t ∧ A), everywhere.
Formula relativize_bounded(const Formula& f);

}  // namespace kbu
