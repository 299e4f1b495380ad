#include <doctest.h>

#include "kbu/error.hpp"
#include "kbu/logic.hpp"
#include "support.hpp"

using namespace kbu;
using namespace kbu::test;

TEST_CASE("parse examples") {
  const Var z{"z", Z};
  CHECK(F("(all z 0 (atom P z))") == Formula::forall(z, Formula::atom("P", {z})));
  CHECK(F("bot") == Formula::bot());
  CHECK(F("(ex f (-> 0 0) (maj f (c succ)))") ==
        Formula::exists(Var{"f", Z1}, Formula::maj(Var{"f", Z1}, Term::constant("succ", Z1))));
  CHECK(F("(leq (ap (c max) 1 0) 1)") ==
        Formula::leq0(Term::apply(Term::apply(Term::constant("max", FinType::arrow(Z, Z1)),
                                              Term::constant("1", Z)),
                                  Term::constant("0", Z)),
                      Term::constant("1", Z)));
  // free identifiers default to type 0
  CHECK(F("(maj x x)") == Formula::maj(Var{"x", Z}, Var{"x", Z}));
  CHECK(F("(maj (v g (-> 0 0)) (v g (-> 0 0)))") == Formula::maj(Var{"g", Z1}, Var{"g", Z1}));
  CHECK(parse_type("(-> (-> 0 0) 0)") == FinType::arrow(Z1, Z));
}

TEST_CASE("syntax errors carry line and column") {
  try {
    F("(maj x x");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 9);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
  try {
    F("(and (atom P)\n  (frob x))");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 4);
  }
  CHECK_THROWS_AS(F("(atom P) (atom Q)"), SyntaxError);
  CHECK_THROWS_AS(F(")"), SyntaxError);
  CHECK_THROWS_AS(parse_type("(-> 0)"), SyntaxError);
}

TEST_CASE("type errors are deferred to well_typed") {
  const auto f = F("(allb z 0 z (atom P z))");
  const auto r = well_typed(f);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(well_typed(F("(maj (ap 1 0) 0)")).ok());
}

TEST_CASE("formatting styles") {
  const auto f = F("(all x 0 (maj x x))");
  CHECK(format_formula(f) == "(all x 0 (maj x x))");
  CHECK(format_formula(f, Style::Unicode) == "∀x⁰ (x ⊴ x)");
  const auto tex = format_formula(f, Style::Latex);
  CHECK(tex.find("\\forall") != std::string::npos);
  CHECK(tex.find("\\unlhd") != std::string::npos);
  const auto u = format_formula(F("(not (or (atom Q) (and (atom P 0) (imp bot (leq 0 1)))))"), Style::Unicode);
  for (const char* sym : {"¬", "∨", "∧", "→", "⊥", "≤"}) CHECK(u.find(sym) != std::string::npos);
  CHECK(format_type(FinType::arrow(Z1, Z), Style::Unicode) == "(0→0)→0");
  CHECK(format_type(FinType::arrow(Z1, Z)) == "(-> (-> 0 0) 0)");
}

TEST_CASE("corpus entries") {
  const auto c = parse_corpus("(def a (atom Q)) (atom P 0) (def b :large bot)", "t");
  REQUIRE(c.size() == 3);
  CHECK(c[0].id == "a");
  CHECK(c[1].id == "t#2");
  CHECK_FALSE(c[1].large);
  CHECK(c[2].large);
  CHECK_THROWS_AS(parse_corpus("(def a bot) (def a bot)", "t"), Error);
  CHECK(default_corpus().size() >= 25);
}

TEST_CASE("sexpr round trip over the corpus") {
  for (const auto& e : default_corpus()) {
    CAPTURE(e.id);
    const auto text = format_formula(e.formula);
    CHECK(parse_formula(text) == e.formula);
    CHECK(format_formula(parse_formula(text)) == text);
  }
}

TEST_CASE("model constants extend the signature") {
  Signature sig({{"k", Z1}});
  CHECK(sig.type_of("k") == Z1);
  CHECK(sig.type_of("succ") == Z1);
  CHECK(parse_formula("(maj (c k) (c k))", sig) == Formula::maj(Term::constant("k", Z1), Term::constant("k", Z1)));
  CHECK_THROWS_AS(F("(maj (c k) (c k))"), SyntaxError);
}
