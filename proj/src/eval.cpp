#include "kbu/eval.hpp"

#include "kbu/error.hpp"

namespace kbu {

namespace {

class Evaluator {
 public:
  Evaluator(const FiniteModel& m, const Environment& env) : m_(m) {
    for (const auto& [v, e] : env) {
      if (v.type != e.type) throw Error("environment binds " + v.name + " to a value of the wrong type");
      stack_.emplace_back(&v, e);
    }
  }

  Element term(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Variable:
        return lookup(t.var());
      case Term::Kind::Constant: {
        auto c = m_.constant(t.constant_name());
        if (!c) throw Error("unknown constant " + t.constant_name());
        if (c->type != t.constant_type())
          throw Error("constant " + t.constant_name() + " has type " + c->type.pretty() +
                      " in the model");
        return *c;
      }
      case Term::Kind::Application:
        return m_.apply(term(t.function()), term(t.argument()));
    }
    throw Error("unreachable");
  }

  bool formula(const Formula& f) {
    switch (f.op()) {
      case Op::Bot:
        return false;
      case Op::Atom: {
        std::vector<Element> args;
        args.reserve(f.terms().size());
        for (const auto& t : f.terms()) args.push_back(term(t));
        return m_.predicate(f.predicate(), args);
      }
      case Op::Maj:
        return m_.majorizes(term(f.terms()[0]), term(f.terms()[1]));
      case Op::Leq0:
        return term(f.terms()[0]).index <= term(f.terms()[1]).index;
      case Op::Not:
        return !formula(f.left());
      case Op::And:
        return formula(f.left()) && formula(f.right());
      case Op::Or:
        return formula(f.left()) || formula(f.right());
      case Op::Imp:
        return !formula(f.left()) || formula(f.right());
      case Op::Forall:
      case Op::Exists: {
        const bool universal = f.op() == Op::Forall;
        const auto n = m_.cardinality(f.var().type);
        for (std::uint64_t i = 0; i < n; ++i) {
          if (bind(f, Element{f.var().type, i}) != universal) return !universal;
        }
        return universal;
      }
      case Op::BForall:
      case Op::BExists: {
        const bool universal = f.op() == Op::BForall;
        const Element bound = term(f.bound());
        if (bound.type.is_base()) {
          for (std::uint64_t i = 0; i <= bound.index; ++i)
            if (bind(f, Element{bound.type, i}) != universal) return !universal;
          return universal;
        }
        if (bound.type != f.var().type) throw Error("bound of " + f.var().name + " has the wrong type");
        for (const auto& e : m_.majorized_by(bound))
          if (bind(f, e) != universal) return !universal;
        return universal;
      }
    }
    throw Error("unreachable");
  }

 private:
  bool bind(const Formula& q, Element e) {
    stack_.emplace_back(&q.var(), e);
    bool r;
    try {
      r = formula(q.body());
    } catch (...) {
      stack_.pop_back();
      throw;
    }
    stack_.pop_back();
    return r;
  }

  Element lookup(const Var& v) const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it)
      if (*it->first == v) return it->second;
    throw Error("unbound variable " + v.name);
  }

  const FiniteModel& m_;
  std::vector<std::pair<const Var*, Element>> stack_;
};

}  // namespace

Element eval_term(const FiniteModel& m, const Environment& env, const Term& t) {
  return Evaluator(m, env).term(t);
}

bool eval_formula(const FiniteModel& m, const Environment& env, const Formula& f) {
  return Evaluator(m, env).formula(f);
}

bool for_each_assignment(const std::vector<Var>& vars,
                         const std::function<const std::vector<Element>&(FinType)>& choices,
                         const std::function<bool(const Environment&)>& visit, Environment env) {
  std::vector<const std::vector<Element>*> pools;
  for (const auto& v : vars) {
    pools.push_back(&choices(v.type));
    if (pools.back()->empty()) return true;
  }
  std::vector<std::size_t> pos(vars.size(), 0);
  for (std::size_t i = 0; i < vars.size(); ++i) env.insert_or_assign(vars[i], (*pools[i])[0]);
  while (true) {
    if (!visit(env)) return false;
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++pos[i] < pools[i]->size()) {
        env.insert_or_assign(vars[i], (*pools[i])[pos[i]]);
        break;
      }
      pos[i] = 0;
      env.insert_or_assign(vars[i], (*pools[i])[0]);
      if (i == 0) return true;
    }
    if (vars.empty()) return true;
  }
}

std::optional<Environment> find_countermodel(const FiniteModel& m, const Formula& f,
                                             const VarTuple& free) {
  std::map<FinType, std::vector<Element>> domains;
  auto full = [&](FinType ty) -> const std::vector<Element>& {
    auto it = domains.find(ty);
    if (it == domains.end()) it = domains.emplace(ty, m.domain(ty)).first;
    return it->second;
  };
  std::optional<Environment> witness;
  for_each_assignment(free.items(), full, [&](const Environment& env) {
    if (eval_formula(m, env, f)) return true;
    witness = env;
    return false;
  });
  return witness;
}

}  // namespace kbu
