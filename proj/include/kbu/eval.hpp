#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "kbu/model.hpp"
#include "kbu/syntax.hpp"

namespace kbu {

using Environment = std::map<Var, Element>;

// Throws Error on an unbound variable or unknown constant, DomainTooLarge
// when a quantified domain exceeds the model's cap.
Element eval_term(const FiniteModel& m, const Environment& env, const Term& t);

// Classical Tarski semantics. Bounded quantifiers range over the elements
// majorized by the value of the bound.
bool eval_formula(const FiniteModel& m, const Environment& env, const Formula& f);

// Calls `visit` on every assignment of `vars` to elements of `choices(type)`,
// first variable varying slowest; stops early when `visit` returns false.
// Returns false iff stopped early.
bool for_each_assignment(const std::vector<Var>& vars,
                         const std::function<const std::vector<Element>&(FinType)>& choices,
                         const std::function<bool(const Environment&)>& visit,
                         Environment env = {});

// First environment over the full domains of `free` that makes f false.
std::optional<Environment> find_countermodel(const FiniteModel& m, const Formula& f,
                                             const VarTuple& free);

}  // namespace kbu
