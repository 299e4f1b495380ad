#include <doctest.h>

#include "kbu/error.hpp"
#include "kbu/logic.hpp"
#include "support.hpp"

using namespace kbu;
using namespace kbu::test;

namespace {

bool has_violation(const TypeReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

std::size_t bounded_nodes(const Formula& f) {
  std::size_t n = f.is_bounded_quantifier() ? 1 : 0;
  switch (f.op()) {
    case Op::Not: case Op::Forall: case Op::Exists: case Op::BForall: case Op::BExists:
      return n + bounded_nodes(f.left());
    case Op::And: case Op::Or: case Op::Imp:
      return n + bounded_nodes(f.left()) + bounded_nodes(f.right());
    default:
      return n;
  }
}

}  // namespace

TEST_CASE("finite types: level, interning, rendering") {
  const auto t2 = FinType::arrow(Z1, Z);
  CHECK(Z.level() == 0);
  CHECK(Z1.level() == 1);
  CHECK(t2.level() == 2);
  CHECK(FinType::arrow(Z, t2).level() == 2);
  CHECK(FinType::arrow(Z, Z) == Z1);
  CHECK(t2.sexpr() == "(-> (-> 0 0) 0)");
  CHECK(t2.pretty() == "(0→0)→0");
  std::vector<FinType> args{Z, Z1};
  CHECK(FinType::curried(args, Z) == FinType::arrow(Z, FinType::arrow(Z1, Z)));
  CHECK(FinType::curried({}, Z1) == Z1);
  CHECK(Z < Z1);
}

TEST_CASE("variable tuples reject repetition") {
  const Var x{"x", Z};
  CHECK_THROWS_AS(VarTuple({x, x}), Error);
  CHECK(VarTuple({x, Var{"x", Z1}}).size() == 2);
  CHECK_THROWS_AS((VarTuple{x} + VarTuple{x}), Error);
}

TEST_CASE("well_typed") {
  const Var x{"x", Z}, y{"y", Z}, f{"f", Z1};
  CHECK(well_typed(Formula::maj(x, y)).ok());
  CHECK(has_violation(well_typed(Formula::maj(x, f)), "type mismatch in ⊴"));
  CHECK(has_violation(well_typed(Formula::bforall(x, x, Formula::atom("P", {x}))),
                      "bound variable occurs in bound term"));
  CHECK(has_violation(well_typed(Formula::leq0(f, x)), "≤₀"));
  CHECK(has_violation(well_typed(Formula::conj(Formula::atom("P", {x}), Formula::atom("P", {Var{"x", Z1}}))),
                      "two types"));
  CHECK(!well_typed(Formula::atom("P", {Term::apply(x, y)})).ok());
  CHECK(well_typed(Formula::atom("P", {Term::apply(f, x)})).ok());
}

TEST_CASE("is_bounded") {
  const Var x{"x", Z};
  CHECK(is_bounded(Formula::atom("P")));
  CHECK(is_bounded(Formula::bforall(x, Term::constant("1", Z), Formula::atom("P", {x}))));
  CHECK_FALSE(is_bounded(Formula::forall(x, Formula::atom("P", {x}))));
  CHECK_FALSE(is_bounded(Formula::negation(Formula::exists(x, Formula::atom("P", {x})))));
}

TEST_CASE("fresh_tuple") {
  const std::vector<std::string> y{"y"};
  const std::vector<FinType> z{Z};
  auto a = fresh_tuple(y, z, std::set<Var>{Var{"y", Z}});
  REQUIRE(a.size() == 1);
  CHECK(a[0] == Var{"y1", Z});
  const std::vector<std::string> wx{"w", "x"};
  const std::vector<FinType> types{Z, Z1};
  auto b = fresh_tuple(wx, types, std::set<Var>{});
  CHECK(b == VarTuple{Var{"w", Z}, Var{"x", Z1}});
  CHECK(fresh_tuple(wx, types, std::set<Var>{}) == b);
  // repeated base names within one call stay distinct
  const std::vector<std::string> ww{"w", "w"};
  const std::vector<FinType> zz{Z, Z};
  CHECK(fresh_tuple(ww, zz, std::set<Var>{}) == VarTuple{Var{"w", Z}, Var{"w1", Z}});
}

TEST_CASE("substitute") {
  const Var x{"x", Z}, y{"y", Z}, z{"z", Z};
  const Term zero = Term::constant("0", Z);
  CHECK(substitute(Formula::atom("P", {x}), x, zero) == Formula::atom("P", {zero}));
  CHECK(substitute(Formula::forall(y, Formula::atom("P", {x, y})), x, y) ==
        Formula::forall(Var{"y1", Z}, Formula::atom("P", {y, Var{"y1", Z}})));
  const Term t = Term::constant("1", Z), q = Term::variable(Var{"q", Z});
  CHECK(substitute(Formula::bforall(z, t, Formula::atom("P", {x})), x, q) ==
        Formula::bforall(z, t, Formula::atom("P", {q})));
  // bound occurrences are untouched
  CHECK(substitute(Formula::forall(x, Formula::atom("P", {x})), x, zero) ==
        Formula::forall(x, Formula::atom("P", {x})));
  CHECK_THROWS_AS(substitute(Formula::atom("P", {x}), x, Term::variable(Var{"f", Z1})), TypeError);
  // simultaneous substitution swaps
  Substitution swap{{x, Term::variable(y)}, {y, Term::variable(x)}};
  CHECK(substitute(Formula::atom("R", {x, y}), swap) == Formula::atom("R", {y, x}));
}

TEST_CASE("substitute(f, x, x) is the identity on the corpus") {
  for (const auto& e : default_corpus()) {
    const Var probe{"z", Z};
    CHECK(substitute(e.formula, probe, Term::variable(probe)) == e.formula);
    for (const auto& v : free_vars(e.formula)) CHECK(substitute(e.formula, v, Term::variable(v)) == e.formula);
  }
}

TEST_CASE("monotone quantifier desugaring") {
  const Var x{"x", Z}, y{"y", Z};
  const auto P = Formula::atom("P");
  const auto Px = Formula::atom("P", {x});
  CHECK(monotone_forall({}, P) == P);
  CHECK(monotone_exists({}, P) == P);
  CHECK(monotone_forall({x}, Px) == Formula::forall(x, Formula::imp(Formula::maj(x, x), Px)));
  const Term t = Term::variable(Var{"t", Z});
  const auto Py = Formula::atom("P", {y});
  std::vector<Term> bounds{t};
  CHECK(bounded_monotone_exists({y}, bounds, Py) ==
        Formula::bexists(y, t, Formula::conj(Formula::maj(y, y), Py)));
  std::vector<Term> one{t};
  CHECK_THROWS(bounded_monotone_forall({x, y}, one, P));
  // tuples: nested in order, componentwise self-majorization
  CHECK(monotone_forall({x, y}, P) ==
        Formula::forall(x, Formula::forall(y, Formula::imp(
                                                  Formula::conj(Formula::maj(x, x), Formula::maj(y, y)), P))));
}

TEST_CASE("relativize_bounded") {
  const Var x{"x", Z};
  const Term t = Term::variable(Var{"t", Z});
  const auto P = Formula::atom("P");
  CHECK(relativize_bounded(Formula::bforall(x, t, P)) == Formula::forall(x, Formula::imp(Formula::maj(x, t), P)));
  CHECK(relativize_bounded(Formula::bexists(x, t, P)) == Formula::exists(x, Formula::conj(Formula::maj(x, t), P)));
  CHECK(relativize_bounded(P) == P);
  for (const auto& e : default_corpus()) {
    auto r = relativize_bounded(e.formula);
    CHECK(bounded_nodes(r) == 0);
    CHECK(free_vars(r) == free_vars(e.formula));
  }
}

TEST_CASE("free variables and languages") {
  const Var x{"x", Z}, y{"y", Z};
  auto f = Formula::forall(x, Formula::atom("R", {x, y}));
  CHECK(free_vars(f) == std::set<Var>{y});
  CHECK(is_classical(f));
  CHECK_FALSE(is_classical(Formula::exists(x, Formula::atom("P", {x}))));
  CHECK_FALSE(is_classical(Formula::imp(Formula::atom("Q"), Formula::atom("Q"))));
  CHECK(language_of(Formula::bot()) == Language::Intuitionistic);
}
