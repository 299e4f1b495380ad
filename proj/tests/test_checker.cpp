#include <doctest.h>

#include "kbu/checker.hpp"
#include "kbu/error.hpp"
#include "kbu/eval.hpp"
#include "support.hpp"

using namespace kbu;
using namespace kbu::test;

namespace {

const FiniteModel& n1() {
  static const FiniteModel m(load_model_spec(source_path("models/n1.json")));
  return m;
}

const FiniteModel& n2() {
  static const FiniteModel m(load_model_spec(source_path("models/n2.json")));
  return m;
}

bool passes(const CheckReport& r) { return r.outcome == Outcome::Pass; }

}  // namespace

TEST_CASE("check names") {
  CHECK(all_checks().size() == 7);
  for (auto k : all_checks()) CHECK(parse_check_name(check_name(k)) == k);
  CHECK_FALSE(parse_check_name("eq6"));
  CHECK(std::string(outcome_name(Outcome::Structural)) == "structural_fail");
}

TEST_CASE("eq5 and eq3 examples") {
  FiniteModel m(spec(1, {true, false}, false));
  for (const char* text : {"(atom P 0)", "(all z 0 (atom P z))", "(or (all z 0 (atom P z)) (atom Q))"}) {
    CAPTURE(text);
    CHECK(passes(check_eq5(F(text), m)));
    CHECK(passes(check_eq3(F(text), m)));
  }
}

TEST_CASE("eq4 examples") {
  FiniteModel m(spec(1, {true, false}));
  CHECK(passes(check_eq4(F("(atom P 0)"), m)));
  CHECK(passes(check_eq4(F("(all z 0 (atom P z))"), m)));
  CHECK_FALSE(eval_formula(m, {}, F("(all z 0 (atom P z))")));
  CHECK(passes(check_eq4(F("(all z 0 (not (all u 0 (not (atom R z u)))))"), m)));
}

TEST_CASE("monotonicity examples") {
  FiniteModel m(spec(1, {true, false}));
  auto a = check_monotonicity(F("(atom P 0)"), m);
  CHECK(passes(a));
  auto b = check_monotonicity(F("(all z 0 (atom P z))"), m);
  CHECK(passes(b));
  CHECK(b.detail == "inner tuple empty");
  auto c = check_monotonicity(F("(not (all z 0 (atom P z)))"), m);
  CHECK(passes(c));
  CHECK(c.detail != "inner tuple empty");
}

TEST_CASE("syntactic checks") {
  CHECK(passes(check_boundedness(F("(atom P)"))));
  CHECK(passes(check_boundedness(F("(all z 0 (ex u 0 (atom R z u)))"))));
  CHECK(passes(check_boundedness(F("(not (all z 0 (atom P z)))"))));
  CHECK(passes(check_type_agreement(F("(atom P)"))));
  CHECK(passes(check_type_agreement(F("(all z 0 (atom P z))"))));
  CHECK(passes(check_type_agreement(F("(not (all z 0 (atom P z)))"))));
}

TEST_CASE("characterization examples") {
  FiniteModel m(spec(1, {false, true}));
  CHECK(passes(check_characterization(F("(atom P 0)"), m)));
  CHECK(passes(check_characterization(F("(all z 0 (or (atom P z) (not (atom P z))))"), m)));
}

TEST_CASE("intuitionistic input is rejected by classical checks") {
  const auto a = F("(ex z 0 (atom P z))");
  for (auto k : {CheckKind::Eq3, CheckKind::Eq4, CheckKind::Eq5, CheckKind::Monotonicity,
                 CheckKind::Characterization, CheckKind::TypeAgreement})
    CHECK_THROWS_AS(run_check(k, a, n1()), LanguageError);
}

TEST_CASE("free variables are ranged unless fixed") {
  FiniteModel m(spec(1, {true, false}));
  CHECK(passes(check_eq4(F("(atom P x)"), m)));
  CHECK(passes(check_eq4(F("(atom P x)"), m, {{Var{"x", Z}, num(1)}})));
}

TEST_CASE("a failing equivalence carries a replayable witness") {
  FiniteModel m(spec(1, {true, false}));
  auto r = check_equivalent(F("(atom P x)"), F("(atom P 0)"), m);
  REQUIRE(r.outcome == Outcome::Fail);
  REQUIRE(r.property);
  CHECK(r.witness.at(Var{"x", Z}) == num(1));
  CHECK_FALSE(eval_formula(m, r.witness, *r.property));
  CHECK(passes(check_equivalent(F("(atom P x)"), F("(atom P x)"), m)));
  // a monotone variable ranges over self-majorizing elements only
  const Var f{"f", Z1};
  auto lhs = Formula::maj(f, f);
  CHECK(passes(check_equivalent(lhs, Formula::negation(Formula::bot()), m, {f})));
  CHECK(check_equivalent(lhs, Formula::negation(Formula::bot()), m).outcome == Outcome::Fail);
}

TEST_CASE("oversized formulas are skipped with a reason") {
  const auto big = std::find_if(default_corpus().begin(), default_corpus().end(),
                                [](const CorpusEntry& e) { return e.large; });
  REQUIRE(big != default_corpus().end());
  auto r = check_eq4(big->formula, n2());
  CHECK(r.outcome == Outcome::Skipped);
  CHECK(r.detail.find("size cap") != std::string::npos);
}

TEST_CASE("run_corpus") {
  auto empty = run_corpus({}, {{"n1", &n1()}}, all_checks());
  CHECK(empty.reports.empty());
  CHECK(empty.summary.total == 0);
  CHECK(empty.summary.ok());

  std::vector<CorpusEntry> one{default_corpus().front()};
  auto single = run_corpus(one, {{"n1", &n1()}}, {CheckKind::Eq4});
  REQUIRE(single.reports.size() == 1);
  CHECK(single.reports[0].check == "eq4");
  CHECK(single.reports[0].model == "n1");
  CHECK(single.summary.pass == 1);

  auto j = to_json(single, false);
  CHECK(j["summary"]["total"] == 1);
  CHECK(j["reports"][0]["millis"] == 0);
  CHECK(j["reports"][0]["outcome"] == "pass");
}

TEST_CASE("corpus at N=1: every check passes, deterministically") {
  std::vector<NamedModel> models{{"n1", &n1()}};
  auto a = run_corpus(default_corpus(), models, all_checks(), 1);
  auto b = run_corpus(default_corpus(), models, all_checks(), 2);
  CHECK(a.summary.fail == 0);
  CHECK(a.summary.structural == 0);
  CHECK(a.summary.total == default_corpus().size() * all_checks().size());
  CHECK(to_json(a, false).dump() == to_json(b, false).dump());
  for (std::size_t i = 1; i < a.reports.size(); ++i) {
    const auto& p = a.reports[i - 1];
    const auto& q = a.reports[i];
    CHECK(std::tie(p.formula, p.check, p.model) < std::tie(q.formula, q.check, q.model));
  }
}

TEST_CASE("eq5 pass implies eq3 pass, and eq3 with upper bounds gives eq4") {
  for (const auto* m : {&n1(), &n2()})
    for (const auto& e : default_corpus()) {
      CAPTURE(e.id);
      const auto r5 = check_eq5(e.formula, *m);
      const auto r3 = check_eq3(e.formula, *m);
      if (passes(r5) && r3.outcome != Outcome::Skipped) CHECK(passes(r3));
      if (passes(r3)) {
        const auto r4 = check_eq4(e.formula, *m);
        CHECK(r4.outcome != Outcome::Fail);
      }
    }
}

TEST_CASE("types_within_cap") {
  auto t1 = types_within_cap(n1(), 1);
  REQUIRE(t1.size() == 5);
  CHECK(t1[0] == Z);
  CHECK(t1[1] == Z1);
  auto t2 = types_within_cap(n2(), 2);
  for (auto t : t2) CHECK(n2().within_cap(t));
  CHECK(std::find(t2.begin(), t2.end(), FinType::arrow(Z1, Z)) == t2.end());
}

TEST_CASE("framework axioms at small levels") {
  for (const auto* m : {&n1(), &n2()})
    for (const auto& r : check_model_axioms(*m, 1)) {
      CAPTURE(r.type);
      CAPTURE(r.axiom);
      CHECK(r.outcome == Outcome::Pass);
    }
}

TEST_CASE("report JSON") {
  FiniteModel m(spec(1, {true, false}));
  auto fail = check_equivalent(F("(atom P (ap (v f (-> 0 0)) 0))"), F("bot"), m);
  REQUIRE(fail.outcome == Outcome::Fail);
  auto j = to_json(fail, false);
  CHECK(j["outcome"] == "fail");
  CHECK(j["witness"]["f"]["type"] == "(-> 0 0)");
  CHECK(j["witness"]["f"]["value"] == nlohmann::json::parse("[0, 0]"));
}
