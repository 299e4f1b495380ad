#include "kbu/logic.hpp"

#include <algorithm>

#include "kbu/error.hpp"

namespace kbu {

bool is_classical(const Formula& f) {
  switch (f.op()) {
    case Op::Atom:
    case Op::Maj:
    case Op::Leq0:
      return true;
    case Op::Not:
    case Op::Forall:
    case Op::BForall:
      return is_classical(f.left());
    case Op::And:
    case Op::Or:
      return is_classical(f.left()) && is_classical(f.right());
    case Op::Bot:
    case Op::Imp:
    case Op::Exists:
    case Op::BExists:
      return false;
  }
  return false;
}

Language language_of(const Formula& f) {
  return is_classical(f) ? Language::Classical : Language::Intuitionistic;
}

// --- typing -----------------------------------------------------------------

namespace {

class TypeChecker {
 public:
  explicit TypeChecker(TypeReport& report) : report_(report) {}

  std::optional<FinType> term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        note_var(t.var());
        return t.var().type;
      case Term::Kind::Constant: {
        auto [it, inserted] = constants_.emplace(t.constant_name(), t.constant_type());
        if (!inserted && it->second != t.constant_type())
          once("constant " + t.constant_name() + " used at two types");
        return t.constant_type();
      }
      case Term::Kind::Application: {
        auto ft = term(t.function());
        auto at = term(t.argument());
        if (!ft || !at) return std::nullopt;
        if (ft->is_base()) {
          add("application of a term of type 0");
          return std::nullopt;
        }
        if (ft->domain() != *at) {
          add("argument type mismatch in application: expected " + ft->domain().pretty() +
              ", got " + at->pretty());
          return std::nullopt;
        }
        return ft->codomain();
      }
    }
    return std::nullopt;
  }

  void formula(const Formula& f) {
    switch (f.op()) {
      case Op::Bot:
        return;
      case Op::Atom: {
        std::vector<std::optional<FinType>> types;
        for (const auto& t : f.terms()) types.push_back(term(t));
        if (std::ranges::all_of(types, [](const auto& t) { return t.has_value(); })) {
          std::vector<FinType> sig;
          for (const auto& t : types) sig.push_back(*t);
          auto [it, inserted] = predicates_.emplace(f.predicate(), sig);
          if (!inserted && it->second != sig)
            once("predicate " + f.predicate() + " used with two argument signatures");
        }
        return;
      }
      case Op::Maj: {
        auto a = term(f.terms()[0]);
        auto b = term(f.terms()[1]);
        if (a && b && *a != *b) add("type mismatch in ⊴: " + a->pretty() + " vs " + b->pretty());
        return;
      }
      case Op::Leq0: {
        auto a = term(f.terms()[0]);
        auto b = term(f.terms()[1]);
        if ((a && !a->is_base()) || (b && !b->is_base())) add("≤₀ argument not of type 0");
        return;
      }
      case Op::Not:
        formula(f.left());
        return;
      case Op::And:
      case Op::Or:
      case Op::Imp:
        formula(f.left());
        formula(f.right());
        return;
      case Op::Forall:
      case Op::Exists:
        note_var(f.var());
        formula(f.body());
        return;
      case Op::BForall:
      case Op::BExists: {
        note_var(f.var());
        auto bt = term(f.bound());
        if (bt && *bt != f.var().type)
          add("bound type mismatch: " + f.var().name + " has type " + f.var().type.pretty() +
              ", bound has type " + bt->pretty());
        if (free_vars(f.bound()).contains(f.var()))
          add("bound variable occurs in bound term: " + f.var().name);
        formula(f.body());
        return;
      }
    }
  }

 private:
  void note_var(const Var& v) {
    auto [it, inserted] = vars_.emplace(v.name, v.type);
    if (!inserted && it->second != v.type) once("variable name " + v.name + " used at two types");
  }
  void add(std::string msg) { report_.violations.push_back(std::move(msg)); }
  void once(const std::string& msg) {
    if (std::ranges::find(report_.violations, msg) == report_.violations.end()) add(msg);
  }

  TypeReport& report_;
  std::map<std::string, FinType> vars_;
  std::map<std::string, FinType> constants_;
  std::map<std::string, std::vector<FinType>> predicates_;
};

}  // namespace

TypeReport well_typed(const Formula& f) {
  TypeReport report;
  TypeChecker(report).formula(f);
  return report;
}

bool is_bounded(const Formula& f) {
  switch (f.op()) {
    case Op::Forall:
    case Op::Exists:
      return false;
    case Op::Not:
    case Op::BForall:
    case Op::BExists:
      return is_bounded(f.left());
    case Op::And:
    case Op::Or:
    case Op::Imp:
      return is_bounded(f.left()) && is_bounded(f.right());
    default:
      return true;
  }
}

// --- variables --------------------------------------------------------------

namespace {

void collect_free(const Term& t, std::set<Var>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      out.insert(t.var());
      return;
    case Term::Kind::Constant:
      return;
    case Term::Kind::Application:
      collect_free(t.function(), out);
      collect_free(t.argument(), out);
      return;
  }
}

void collect_free(const Formula& f, std::set<Var>& out) {
  for (const auto& t : f.terms()) collect_free(t, out);
  switch (f.op()) {
    case Op::Not:
      collect_free(f.left(), out);
      return;
    case Op::And:
    case Op::Or:
    case Op::Imp:
      collect_free(f.left(), out);
      collect_free(f.right(), out);
      return;
    case Op::Forall:
    case Op::Exists:
    case Op::BForall:
    case Op::BExists: {
      std::set<Var> inner;
      collect_free(f.body(), inner);
      inner.erase(f.var());
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      return;
  }
}

void collect_names(const Term& t, std::set<std::string>& out) {
  std::set<Var> vs;
  collect_free(t, vs);
  for (const auto& v : vs) out.insert(v.name);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) collect_names(t, out);
  if (f.is_quantifier()) out.insert(f.var().name);
  switch (f.op()) {
    case Op::Not:
    case Op::Forall:
    case Op::Exists:
    case Op::BForall:
    case Op::BExists:
      collect_names(f.left(), out);
      return;
    case Op::And:
    case Op::Or:
    case Op::Imp:
      collect_names(f.left(), out);
      collect_names(f.right(), out);
      return;
    default:
      return;
  }
}

}  // namespace

std::set<Var> free_vars(const Term& t) {
  std::set<Var> out;
  collect_free(t, out);
  return out;
}

std::set<Var> free_vars(const Formula& f) {
  std::set<Var> out;
  collect_free(f, out);
  return out;
}

std::set<std::string> var_names(const Formula& f) {
  std::set<std::string> out;
  collect_names(f, out);
  return out;
}

VarTuple fresh_tuple(std::span<const std::string> base_names, std::span<const FinType> types,
                     const std::set<std::string>& avoid) {
  if (base_names.size() != types.size()) throw Error("fresh_tuple: names and types differ in length");
  std::set<std::string> used = avoid;
  std::vector<Var> out;
  for (std::size_t i = 0; i < base_names.size(); ++i) {
    std::string name = base_names[i];
    for (int k = 1; used.contains(name); ++k) name = base_names[i] + std::to_string(k);
    used.insert(name);
    out.push_back(Var{name, types[i]});
  }
  return VarTuple(std::move(out));
}

VarTuple fresh_tuple(std::span<const std::string> base_names, std::span<const FinType> types,
                     const std::set<Var>& avoid) {
  std::set<std::string> names;
  for (const auto& v : avoid) names.insert(v.name);
  return fresh_tuple(base_names, types, names);
}

// --- substitution -----------------------------------------------------------

Term substitute(const Term& t, const Substitution& s) {
  switch (t.kind()) {
    case Term::Kind::Variable: {
      auto it = s.find(t.var());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Application:
      return Term::apply(substitute(t.function(), s), substitute(t.argument(), s));
  }
  return t;
}

namespace {

Formula subst(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  auto terms = [&] {
    std::vector<Term> out;
    for (const auto& t : f.terms()) out.push_back(substitute(t, s));
    return out;
  };
  switch (f.op()) {
    case Op::Bot:
      return f;
    case Op::Atom:
      return Formula::atom(f.predicate(), terms());
    case Op::Maj: {
      auto ts = terms();
      return Formula::maj(ts[0], ts[1]);
    }
    case Op::Leq0: {
      auto ts = terms();
      return Formula::leq0(ts[0], ts[1]);
    }
    case Op::Not:
      return Formula::negation(subst(f.left(), s));
    case Op::And:
      return Formula::conj(subst(f.left(), s), subst(f.right(), s));
    case Op::Or:
      return Formula::disj(subst(f.left(), s), subst(f.right(), s));
    case Op::Imp:
      return Formula::imp(subst(f.left(), s), subst(f.right(), s));
    case Op::Forall:
    case Op::Exists:
    case Op::BForall:
    case Op::BExists: {
      auto body_free = free_vars(f.body());
      Substitution inner;
      for (const auto& [v, t] : s)
        if (v != f.var() && body_free.contains(v)) inner.emplace(v, t);
      Var bound_var = f.var();
      if (!inner.empty()) {
        std::set<std::string> replacement_names;
        bool captured = false;
        for (const auto& [v, t] : inner) {
          for (const auto& w : free_vars(t)) {
            replacement_names.insert(w.name);
            if (w == f.var()) captured = true;
          }
        }
        if (captured) {
          auto avoid = var_names(f.body());
          avoid.insert(replacement_names.begin(), replacement_names.end());
          for (const auto& [v, t] : inner) avoid.insert(v.name);
          std::string base = f.var().name;
          FinType ty = f.var().type;
          bound_var = fresh_tuple(std::span(&base, 1), std::span(&ty, 1), avoid)[0];
          inner.emplace(f.var(), Term::variable(bound_var));
        }
      }
      auto body = subst(f.body(), inner);
      switch (f.op()) {
        case Op::Forall:
          return Formula::forall(bound_var, body);
        case Op::Exists:
          return Formula::exists(bound_var, body);
        case Op::BForall:
          return Formula::bforall(bound_var, substitute(f.bound(), s), body);
        default:
          return Formula::bexists(bound_var, substitute(f.bound(), s), body);
      }
    }
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, const Substitution& s) {
  for (const auto& [v, t] : s) {
    auto ty = t.type();
    if (!ty || *ty != v.type)
      throw TypeError("substitution for " + v.name + ": term type does not match " +
                      v.type.pretty());
  }
  return subst(f, s);
}

Formula substitute(const Formula& f, const Var& v, const Term& t) {
  return substitute(f, Substitution{{v, t}});
}

Substitution tuple_substitution(const VarTuple& from, std::span<const Term> to) {
  if (from.size() != to.size()) throw Error("tuple substitution: length mismatch");
  Substitution s;
  for (std::size_t i = 0; i < from.size(); ++i) s.emplace(from[i], to[i]);
  return s;
}

std::vector<Term> apply_tuple(const VarTuple& functions, std::span<const Term> arguments) {
  std::vector<Term> out;
  for (const auto& f : functions) out.push_back(Term::apply_all(Term::variable(f), arguments));
  return out;
}

// --- monotone quantifiers ---------------------------------------------------

Formula self_majorizing_conj(const VarTuple& xs) {
  if (xs.empty()) throw Error("self_majorizing_conj of an empty tuple");
  Formula out = Formula::maj(xs[xs.size() - 1], xs[xs.size() - 1]);
  for (std::size_t i = xs.size() - 1; i-- > 0;)
    out = Formula::conj(Formula::maj(xs[i], xs[i]), out);
  return out;
}

namespace {

Formula nest(const VarTuple& xs, std::span<const Term> bounds, Formula body, Op op) {
  for (std::size_t i = xs.size(); i-- > 0;) {
    switch (op) {
      case Op::Forall: body = Formula::forall(xs[i], body); break;
      case Op::Exists: body = Formula::exists(xs[i], body); break;
      case Op::BForall: body = Formula::bforall(xs[i], bounds[i], body); break;
      default: body = Formula::bexists(xs[i], bounds[i], body); break;
    }
  }
  return body;
}

void check_bounds(const VarTuple& xs, std::span<const Term> bounds) {
  if (xs.size() != bounds.size()) throw Error("bounded tuple quantifier: length mismatch");
}

}  // namespace

Formula monotone_forall(const VarTuple& xs, const Formula& body) {
  if (xs.empty()) return body;
  return nest(xs, {}, Formula::imp(self_majorizing_conj(xs), body), Op::Forall);
}

Formula monotone_exists(const VarTuple& xs, const Formula& body) {
  if (xs.empty()) return body;
  return nest(xs, {}, Formula::conj(self_majorizing_conj(xs), body), Op::Exists);
}

Formula bounded_monotone_forall(const VarTuple& xs, std::span<const Term> bounds,
                                const Formula& body) {
  check_bounds(xs, bounds);
  if (xs.empty()) return body;
  return nest(xs, bounds, Formula::imp(self_majorizing_conj(xs), body), Op::BForall);
}

Formula bounded_monotone_exists(const VarTuple& xs, std::span<const Term> bounds,
                                const Formula& body) {
  check_bounds(xs, bounds);
  if (xs.empty()) return body;
  return nest(xs, bounds, Formula::conj(self_majorizing_conj(xs), body), Op::BExists);
}

Formula relativize_bounded(const Formula& f) {
  switch (f.op()) {
    case Op::Not:
      return Formula::negation(relativize_bounded(f.left()));
    case Op::And:
      return Formula::conj(relativize_bounded(f.left()), relativize_bounded(f.right()));
    case Op::Or:
      return Formula::disj(relativize_bounded(f.left()), relativize_bounded(f.right()));
    case Op::Imp:
      return Formula::imp(relativize_bounded(f.left()), relativize_bounded(f.right()));
    case Op::Forall:
      return Formula::forall(f.var(), relativize_bounded(f.body()));
    case Op::Exists:
      return Formula::exists(f.var(), relativize_bounded(f.body()));
    case Op::BForall:
      return Formula::forall(
          f.var(), Formula::imp(Formula::maj(f.var(), f.bound()), relativize_bounded(f.body())));
    case Op::BExists:
      return Formula::exists(
          f.var(), Formula::conj(Formula::maj(f.var(), f.bound()), relativize_bounded(f.body())));
    default:
      return f;
  }
}

}  // namespace kbu
