#include "kbu/interpretation.hpp"

#include <cctype>
#include <set>

#include "kbu/error.hpp"
#include "kbu/logic.hpp"

namespace kbu {

TupleSignature tuple_signature(const TranslationResult& r) {
  return TupleSignature{r.outer.types(), r.inner.types()};
}

namespace {

// Supplies names unused anywhere in the source formula or in earlier output,
// so tuples coming from different subformulas never collide.
class Namer {
 public:
  explicit Namer(const Formula& source) : used_(var_names(source)) {}

  VarTuple fresh(const std::vector<std::string>& bases, const std::vector<FinType>& types) {
    auto out = fresh_tuple(bases, types, used_);
    for (const auto& v : out) used_.insert(v.name);
    return out;
  }
  Var fresh(const std::string& base, FinType type) {
    return fresh(std::vector<std::string>{base}, std::vector<FinType>{type})[0];
  }

  // ỹ for each y
  VarTuple tilde(const VarTuple& ys) {
    std::vector<std::string> bases;
    for (const auto& y : ys) bases.push_back(y.name + "~");
    return fresh(bases, ys.types());
  }

  // Functionals Y_j : args → type(y_j), named after the y_j.
  VarTuple functionals(const VarTuple& ys, const std::vector<FinType>& args) {
    std::vector<std::string> bases;
    std::vector<FinType> types;
    for (const auto& y : ys) {
      auto base = y.name;
      base[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(base[0])));
      bases.push_back(base);
      types.push_back(FinType::curried(args, y.type));
    }
    return fresh(bases, types);
  }

 private:
  std::set<std::string> used_;
};

std::vector<FinType> concat(std::vector<FinType> a, const std::vector<FinType>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Term> concat(std::vector<Term> a, const std::vector<Term>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ∀̃ỹ⊴y A(x,ỹ) for fresh ỹ
Formula weaken_forall(Namer& namer, const VarTuple& ys, const Formula& matrix) {
  if (ys.empty()) return matrix;
  auto tildes = namer.tilde(ys);
  return bounded_monotone_forall(tildes, ys.terms(),
                                 substitute(matrix, tuple_substitution(ys, tildes.terms())));
}

class Recorder {
 public:
  Recorder(Trace* trace, int depth, const Formula& source, const char* clause,
           const char* construct)
      : trace_(trace) {
    if (!trace_) return;
    slot_ = trace_->size();
    trace_->push_back(TraceLine{depth, clause, construct, source, std::nullopt, std::nullopt});
  }
  TranslationResult done(TranslationResult r) {
    if (trace_) (*trace_)[slot_].result = r;
    return r;
  }

 private:
  Trace* trace_;
  std::size_t slot_ = 0;
};

// --- B ----------------------------------------------------------------------

TranslationResult b_rec(const Formula& a, Namer& namer, Trace* trace, int depth) {
  using K = TranslationResult::Kind;
  const int sub = depth + 1;
  switch (a.op()) {
    case Op::Bot:
    case Op::Atom:
    case Op::Maj:
    case Op::Leq0: {
      Recorder rec(trace, depth, a, "B clause 1", "A^B (A atomic)");
      return rec.done({{}, {}, a, K::B});
    }
    case Op::And: {
      Recorder rec(trace, depth, a, "B clause 2", "(A∧B)^B");
      auto l = b_rec(a.left(), namer, trace, sub);
      auto r = b_rec(a.right(), namer, trace, sub);
      return rec.done(
          {l.outer + r.outer, l.inner + r.inner, Formula::conj(l.matrix, r.matrix), K::B});
    }
    case Op::Or: {
      Recorder rec(trace, depth, a, "B clause 3", "(A∨B)^B");
      auto l = b_rec(a.left(), namer, trace, sub);
      auto r = b_rec(a.right(), namer, trace, sub);
      auto lm = weaken_forall(namer, l.inner, l.matrix);
      auto rm = weaken_forall(namer, r.inner, r.matrix);
      return rec.done({l.outer + r.outer, l.inner + r.inner, Formula::disj(lm, rm), K::B});
    }
    case Op::Imp: {
      Recorder rec(trace, depth, a, "B clause 4", "(A→B)^B");
      auto l = b_rec(a.left(), namer, trace, sub);
      auto r = b_rec(a.right(), namer, trace, sub);
      const auto xs = l.outer.types();
      auto big_x = namer.functionals(r.outer, xs);
      auto big_y = namer.functionals(l.inner, concat(xs, r.inner.types()));
      auto x_terms = l.outer.terms();
      auto premise = bounded_monotone_forall(
          l.inner, apply_tuple(big_y, concat(x_terms, r.inner.terms())), l.matrix);
      auto conclusion =
          substitute(r.matrix, tuple_substitution(r.outer, apply_tuple(big_x, x_terms)));
      return rec.done(
          {big_x + big_y, l.outer + r.inner, Formula::imp(premise, conclusion), K::B});
    }
    case Op::Not: {
      Recorder rec(trace, depth, a, "B clause 4", "(¬A)^B");
      auto r = b_rec(a.left(), namer, trace, sub);
      auto big_y = namer.functionals(r.inner, r.outer.types());
      auto m = bounded_monotone_forall(r.inner, apply_tuple(big_y, r.outer.terms()), r.matrix);
      return rec.done({big_y, r.outer, Formula::negation(m), K::B});
    }
    case Op::BForall: {
      Recorder rec(trace, depth, a, "B clause 5", "(∀z⊴t A)^B");
      auto r = b_rec(a.body(), namer, trace, sub);
      return rec.done({r.outer, r.inner, Formula::bforall(a.var(), a.bound(), r.matrix), K::B});
    }
    case Op::BExists: {
      Recorder rec(trace, depth, a, "B clause 6", "(∃z⊴t A)^B");
      auto r = b_rec(a.body(), namer, trace, sub);
      auto m = weaken_forall(namer, r.inner, r.matrix);
      return rec.done({r.outer, r.inner, Formula::bexists(a.var(), a.bound(), m), K::B});
    }
    case Op::Forall: {
      Recorder rec(trace, depth, a, "B clause 7", "(∀z A)^B");
      auto r = b_rec(a.body(), namer, trace, sub);
      const std::vector<FinType> zt{a.var().type};
      auto big_x = namer.functionals(r.outer, zt);
      auto w = namer.fresh("w", a.var().type);
      const std::vector<Term> w_terms{Term::variable(w)};
      auto m = substitute(r.matrix, tuple_substitution(r.outer, apply_tuple(big_x, w_terms)));
      return rec.done({big_x, VarTuple{w} + r.inner, Formula::bforall(a.var(), w, m), K::B});
    }
    case Op::Exists: {
      Recorder rec(trace, depth, a, "B clause 8", "(∃z A)^B");
      auto r = b_rec(a.body(), namer, trace, sub);
      auto w = namer.fresh("w", a.var().type);
      auto m = weaken_forall(namer, r.inner, r.matrix);
      return rec.done({VarTuple{w} + r.outer, r.inner, Formula::bexists(a.var(), w, m), K::B});
    }
  }
  throw LanguageError("bounded functional interpretation: unknown constructor");
}

// --- U ----------------------------------------------------------------------

TranslationResult u_rec(const Formula& a, Namer& namer, Trace* trace, int depth) {
  using K = TranslationResult::Kind;
  const int sub = depth + 1;
  switch (a.op()) {
    case Op::Atom:
    case Op::Maj:
    case Op::Leq0: {
      Recorder rec(trace, depth, a, "U clause 1", "A^U (A atomic)");
      return rec.done({{}, {}, a, K::U});
    }
    case Op::Not: {
      Recorder rec(trace, depth, a, "U clause 2", "(¬A)^U");
      auto r = u_rec(a.left(), namer, trace, sub);
      auto big_y = namer.functionals(r.inner, r.outer.types());
      Formula m = Formula::negation(r.matrix);
      if (!r.outer.empty() || !r.inner.empty()) {
        auto tildes = namer.tilde(r.outer);
        auto s = tuple_substitution(r.outer, tildes.terms());
        auto applied = apply_tuple(big_y, tildes.terms());
        for (std::size_t j = 0; j < r.inner.size(); ++j) s.emplace(r.inner[j], applied[j]);
        m = bounded_monotone_exists(tildes, r.outer.terms(),
                                    Formula::negation(substitute(r.matrix, s)));
      }
      return rec.done({big_y, r.outer, m, K::U});
    }
    case Op::Or: {
      Recorder rec(trace, depth, a, "U clause 3", "(A∨B)^U");
      auto l = u_rec(a.left(), namer, trace, sub);
      auto r = u_rec(a.right(), namer, trace, sub);
      return rec.done(
          {l.outer + r.outer, l.inner + r.inner, Formula::disj(l.matrix, r.matrix), K::U});
    }
    case Op::BForall: {
      Recorder rec(trace, depth, a, "U clause 4", "(∀z⊴t A)^U");
      auto r = u_rec(a.body(), namer, trace, sub);
      return rec.done({r.outer, r.inner, Formula::bforall(a.var(), a.bound(), r.matrix), K::U});
    }
    case Op::Forall: {
      Recorder rec(trace, depth, a, "U clause 5", "(∀z A)^U");
      auto r = u_rec(a.body(), namer, trace, sub);
      auto w = namer.fresh("w", a.var().type);
      return rec.done(
          {VarTuple{w} + r.outer, r.inner, Formula::bforall(a.var(), w, r.matrix), K::U});
    }
    case Op::And: {
      Recorder rec(trace, depth, a, "U clause 6", "(A∧B)^U");
      auto l = u_rec(a.left(), namer, trace, sub);
      auto r = u_rec(a.right(), namer, trace, sub);
      return rec.done(
          {l.outer + r.outer, l.inner + r.inner, Formula::conj(l.matrix, r.matrix), K::U});
    }
    default:
      throw LanguageError(std::string("Shoenfield-like interpretation: '") + op_name(a.op()) +
                          "' is not in the classical language");
  }
}

void require_well_typed(const Formula& a) {
  auto report = well_typed(a);
  if (!report.ok()) throw TypeError(report.violations.front());
}

}  // namespace

TranslationResult bfi_core(const Formula& a, Trace* trace) {
  require_well_typed(a);
  Namer namer(a);
  return b_rec(a, namer, trace, 0);
}

TranslationResult sbfi_core(const Formula& a, Trace* trace) {
  require_well_typed(a);
  Namer namer(a);
  return u_rec(a, namer, trace, 0);
}

Formula assemble(const TranslationResult& r) {
  if (r.kind == TranslationResult::Kind::B)
    return monotone_exists(r.outer, monotone_forall(r.inner, r.matrix));
  return monotone_forall(r.outer, monotone_exists(r.inner, r.matrix));
}

Formula bfi(const Formula& a) { return assemble(bfi_core(a)); }

Formula sbfi(const Formula& a) { return assemble(sbfi_core(a)); }

}  // namespace kbu
