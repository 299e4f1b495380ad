#include "kbu/krivine.hpp"

#include "kbu/error.hpp"

namespace kbu {

namespace {

Formula inner(const Formula& a, Trace* trace, int depth) {
  std::size_t slot = 0;
  auto open = [&](const char* clause, const char* construct) {
    if (!trace) return;
    slot = trace->size();
    trace->push_back(TraceLine{depth, clause, construct, a, std::nullopt, std::nullopt});
  };
  auto close = [&](Formula out) {
    if (trace) (*trace)[slot].output = out;
    return out;
  };

  switch (a.op()) {
    case Op::Atom:
    case Op::Maj:
    case Op::Leq0:
      open("K clause 1", "A_K (A atomic)");
      return close(Formula::negation(a));
    case Op::Not:
      open("K clause 2", "(¬A)_K");
      return close(Formula::negation(inner(a.left(), trace, depth + 1)));
    case Op::Or: {
      open("K clause 3", "(A∨B)_K");
      auto l = inner(a.left(), trace, depth + 1);
      auto r = inner(a.right(), trace, depth + 1);
      return close(Formula::conj(l, r));
    }
    case Op::BForall:
      open("K clause 4", "(∀x⊴t A)_K");
      return close(Formula::bexists(a.var(), a.bound(), inner(a.body(), trace, depth + 1)));
    case Op::Forall:
      open("K clause 5", "(∀x A)_K");
      return close(Formula::exists(a.var(), inner(a.body(), trace, depth + 1)));
    case Op::And: {
      open("K clause 6", "(A∧B)_K");
      auto l = inner(a.left(), trace, depth + 1);
      auto r = inner(a.right(), trace, depth + 1);
      return close(Formula::disj(l, r));
    }
    default:
      throw LanguageError(std::string("negative translation: '") + op_name(a.op()) +
                          "' is not in the classical language");
  }
}

}  // namespace

Formula krivine_inner(const Formula& a, Trace* trace) { return inner(a, trace, 0); }

Formula krivine(const Formula& a, Trace* trace) {
  return Formula::negation(inner(a, trace, 0));
}

}  // namespace kbu
