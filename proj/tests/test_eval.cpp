#include <doctest.h>

#include "kbu/error.hpp"
#include "kbu/eval.hpp"
#include "kbu/logic.hpp"
#include "support.hpp"

using namespace kbu;
using namespace kbu::test;

namespace {

const Var x{"x", Z};
const Var u{"u", Z1};
const Var v{"v", Z1};
const Var f{"f", Z1};
const Term one = Term::constant("1", Z);
const Term zero = Term::constant("0", Z);

// ∀u⊴v (P(u 0) ∧ Q) → (∀u⊴v P(u 0)) ∧ Q
Formula prenex_rule() {
  const auto C = Formula::atom("P", {Term::apply(u, zero)});
  const auto D = Formula::atom("Q");
  return Formula::imp(Formula::bforall(u, v, Formula::conj(C, D)),
                      Formula::conj(Formula::bforall(u, v, C), D));
}

}  // namespace

TEST_CASE("eval_term") {
  FiniteModel m(spec(1));
  const Element id{Z1, 1};
  CHECK(eval_term(m, {{x, num(1)}}, x) == num(1));
  CHECK(eval_term(m, {{f, id}, {x, num(0)}}, Term::apply(f, x)) == num(0));
  CHECK(eval_term(m, {}, Term::apply(Term::constant("succ", Z1), zero)) == num(1));
  CHECK_THROWS_AS(eval_term(m, {}, x), Error);
  CHECK_THROWS_AS(eval_term(m, {}, Term::constant("zero", Z)), Error);

  ModelSpec s = spec(1);
  s.constants["zero"] = {Z, ValueTree{std::uint64_t{0}}};
  FiniteModel mz(s);
  CHECK(eval_term(mz, {}, Term::constant("zero", Z)) == num(0));
}

TEST_CASE("eval_formula examples") {
  FiniteModel m(spec(1));
  CHECK(eval_formula(m, {}, Formula::forall(x, Formula::leq0(x, one))));
  CHECK(eval_formula(m, {}, Formula::bforall(x, zero, Formula::leq0(x, zero))));
  CHECK_FALSE(eval_formula(m, {}, Formula::bforall(x, one, Formula::leq0(x, zero))));
  CHECK(eval_formula(m, {}, Formula::bexists(x, one, Formula::leq0(one, x))));
  const Element swap{Z1, 2};
  CHECK_FALSE(eval_formula(m, {{f, swap}}, Formula::exists(u, Formula::maj(u, f))));
  CHECK_FALSE(eval_formula(m, {}, Formula::bot()));
  CHECK(eval_formula(m, {}, Formula::negation(Formula::bot())));
  CHECK(eval_formula(m, {}, Formula::imp(Formula::bot(), Formula::bot())));
  CHECK(eval_formula(m, {}, Formula::eq0(one, one)));
  CHECK_FALSE(eval_formula(m, {}, Formula::eq0(one, zero)));
}

TEST_CASE("predicates follow their tables") {
  FiniteModel m(spec(1, {true, false}, true, {false, true, true, false}));
  CHECK(eval_formula(m, {}, Formula::atom("P", {zero})));
  CHECK_FALSE(eval_formula(m, {}, Formula::atom("P", {one})));
  CHECK(eval_formula(m, {}, Formula::atom("Q")));
  CHECK(eval_formula(m, {}, Formula::atom("R", {zero, one})));
  CHECK_FALSE(eval_formula(m, {}, Formula::atom("R", {one, one})));
  CHECK_FALSE(eval_formula(m, {}, Formula::forall(x, Formula::atom("P", {x}))));
}

TEST_CASE("quantifying over a type beyond the cap is reported") {
  FiniteModel m(spec(2));
  const Var F{"F", FinType::arrow(Z1, Z)};
  CHECK_THROWS_AS(eval_formula(m, {}, Formula::forall(F, Formula::bot())), DomainTooLarge);
}

TEST_CASE("for_each_assignment varies the first variable slowest") {
  FiniteModel m(spec(1));
  const Var y{"y", Z};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> seen;
  auto all = [&](FinType t) -> const std::vector<Element>& { return m.self_majorizing(t); };
  bool done = for_each_assignment({x, y}, all, [&](const Environment& e) {
    seen.emplace_back(e.at(x).index, e.at(y).index);
    return true;
  });
  CHECK(done);
  CHECK(seen == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  std::size_t count = 0;
  CHECK_FALSE(for_each_assignment({x, y}, all, [&](const Environment&) { return ++count < 2; }));
  CHECK(count == 2);
}

TEST_CASE("find_countermodel") {
  FiniteModel m(spec(1));
  CHECK_FALSE(find_countermodel(m, Formula::leq0(x, one), {x}));
  auto bot = find_countermodel(m, Formula::bot(), {});
  REQUIRE(bot);
  CHECK(bot->empty());
  auto cm = find_countermodel(m, Formula::leq0(x, zero), {x});
  REQUIRE(cm);
  CHECK(cm->at(x) == num(1));
}

TEST_CASE("the prenex rule fails for a non-monotone bound") {
  FiniteModel m(spec(1));
  auto cm = find_countermodel(m, prenex_rule(), {v});
  REQUIRE(cm);
  const Element w = cm->at(v);
  CHECK(to_string(m.to_tree(w)) == "[1, 0]");
  CHECK_FALSE(m.majorizes(w, w));
  // with the hypothesis v⊴v the implication holds
  CHECK_FALSE(find_countermodel(m, Formula::imp(Formula::maj(v, v), prenex_rule()), {v}));
}

TEST_CASE("relativization preserves truth on the corpus") {
  for (std::uint64_t n : {1, 2}) {
    FiniteModel m(spec(n, {}, true));
    for (const auto& e : default_corpus()) {
      if (e.large) continue;
      CAPTURE(e.id);
      CHECK(eval_formula(m, {}, relativize_bounded(e.formula)) == eval_formula(m, {}, e.formula));
    }
  }
}

TEST_CASE("bounded excluded middle is valid") {
  FiniteModel m(spec(1, {true, false}));
  const Var y{"y", Z};
  const auto body = Formula::bforall(y, x, Formula::atom("P", {y}));
  const auto lem = Formula::disj(body, Formula::negation(body));
  CHECK_FALSE(find_countermodel(m, lem, {x}));
  const auto fb = Formula::bexists(u, f, Formula::atom("P", {Term::apply(u, one)}));
  CHECK_FALSE(find_countermodel(m, Formula::disj(fb, Formula::negation(fb)), {f}));
}
