// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "kbu/checker.hpp"
#include "kbu/eval.hpp"
#include "kbu/logic.hpp"
#include "support.hpp"

using namespace kbu;
using namespace kbu::test;

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const std::vector<CorpusEntry>& corpus() { return default_corpus(); }

struct Models {
  FiniteModel n1{load_model_spec(source_path("models/n1.json"))};
  FiniteModel n1t{load_model_spec(source_path("models/n1-true.json"))};
  FiniteModel n2{load_model_spec(source_path("models/n2.json"))};
  std::vector<NamedModel> at_n1() const { return {{"n1", &n1}, {"n1-true", &n1t}}; }
};

std::string counts(const CorpusSummary& s) {
  return std::to_string(s.pass) + " pass, " + std::to_string(s.fail) + " fail, " +
         std::to_string(s.structural) + " structural, " + std::to_string(s.skipped) + " skipped";
}

Verdict factorization(const Models& ms) {
  const auto t0 = Clock::now();
  const auto r = run_corpus(corpus(), ms.at_n1(), {CheckKind::Eq4});
  const double secs = seconds_since(t0);
  const bool ok = r.summary.ok() && r.summary.skipped * 20 <= r.summary.total && secs < 300;
  return {ok, counts(r.summary) + " in " + std::to_string(secs) + " s"};
}

Verdict pointwise(const Models& ms) {
  const auto r = run_corpus(corpus(), ms.at_n1(), {CheckKind::Eq3, CheckKind::Eq5});
  std::map<std::pair<std::string, std::string>, std::map<std::string, Outcome>> by_task;
  for (const auto& rep : r.reports) by_task[{rep.formula, rep.model}][rep.check] = rep.outcome;
  std::size_t exceptions = 0;
  for (const auto& [task, outcomes] : by_task)
    if (outcomes.at("eq5") == Outcome::Pass && outcomes.at("eq3") != Outcome::Pass) ++exceptions;
  const bool ok = r.summary.ok() && r.summary.skipped == 0 && exceptions == 0;
  return {ok, counts(r.summary) + "; eq5⇒eq3 exceptions: " + std::to_string(exceptions)};
}

Verdict syntactic(CheckKind k) {
  std::size_t pass = 0;
  for (const auto& e : corpus()) pass += run_check(k, e.formula, FiniteModel(spec(1))).outcome == Outcome::Pass;
  return {pass == corpus().size(), std::to_string(pass) + "/" + std::to_string(corpus().size())};
}

Verdict monotonicity(const Models& ms) {
  const auto a = run_corpus(corpus(), ms.at_n1(), {CheckKind::Monotonicity});
  const auto b = run_corpus(corpus(), {{"n2", &ms.n2}}, {CheckKind::Monotonicity});
  const bool ok = a.summary.ok() && a.summary.skipped == 0 && b.summary.ok();
  return {ok, "N=1: " + counts(a.summary) + "; N=2: " + counts(b.summary)};
}

Verdict axioms(const Models& ms) {
  std::size_t pass = 0, total = 0, types = 0;
  for (const auto* m : {&ms.n1, &ms.n2}) {
    types += types_within_cap(*m, 2).size();
    for (const auto& r : check_model_axioms(*m, 2)) {
      ++total;
      pass += r.outcome == Outcome::Pass;
    }
  }
  return {pass == total && total > 0,
          std::to_string(pass) + "/" + std::to_string(total) + " over " + std::to_string(types) + " types"};
}

Verdict prenex_rule(const Models& ms) {
  const Var u{"u", Z1}, v{"v", Z1};
  const auto C = Formula::atom("P", {Term::apply(u, Term::constant("0", Z))});
  const auto D = Formula::atom("Q");
  const auto f = Formula::imp(Formula::bforall(u, v, Formula::conj(C, D)),
                              Formula::conj(Formula::bforall(u, v, C), D));
  const auto cm = find_countermodel(ms.n1, f, {v});
  if (!cm) return {false, "no countermodel"};
  const Element w = cm->at(v);
  return {!ms.n1.majorizes(w, w), "v = " + to_string(ms.n1.to_tree(w))};
}

Verdict characterization(const Models& ms) {
  const auto r = run_corpus(corpus(), ms.at_n1(), {CheckKind::Characterization});
  return {r.summary.ok() && r.summary.skipped == 0, counts(r.summary)};
}

Verdict upper_bounds(const Models& ms) {
  std::size_t pairs = 0, missing = 0;
  for (auto t : types_within_cap(ms.n1, 2)) {
    const auto& sm = ms.n1.self_majorizing(t);
    for (const auto& a : sm)
      for (const auto& b : sm) {
        const std::vector<Element> es{a, b};
        ++pairs;
        missing += !ms.n1.find_upper_bound(t, es);
      }
  }
  return {missing == 0, std::to_string(pairs) + " pairs, " + std::to_string(missing) + " without bound"};
}

Verdict determinism(const Models& ms) {
  std::vector<NamedModel> models = ms.at_n1();
  models.push_back({"n2", &ms.n2});
  const auto a = to_json(run_corpus(corpus(), models, all_checks()), false).dump(2);
  const auto b = to_json(run_corpus(corpus(), models, all_checks()), false).dump(2);
  return {a == b, std::to_string(a.size()) + " bytes"};
}

Verdict round_trip() {
  std::size_t ok = 0;
  for (const auto& e : corpus()) ok += parse_formula(format_formula(e.formula)) == e.formula;
  return {ok == corpus().size(), std::to_string(ok) + "/" + std::to_string(corpus().size())};
}

}  // namespace

int main() {
  const Models ms;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"factorization A^U <-> (A^K)^B at N=1", [&] { return factorization(ms); }},
      {"pointwise factorization, eq5 => eq3", [&] { return pointwise(ms); }},
      {"boundedness of B and U matrices", [] { return syntactic(CheckKind::Boundedness); }},
      {"monotonicity in the second tuple", [&] { return monotonicity(ms); }},
      {"tuple signatures of U and K then B", [] { return syntactic(CheckKind::TypeAgreement); }},
      {"framework axioms at N=1,2 level <= 2", [&] { return axioms(ms); }},
      {"prenex rule fails for a non-monotone bound", [&] { return prenex_rule(ms); }},
      {"characterization A <-> A^K", [&] { return characterization(ms); }},
      {"upper bounds for self-majorizing pairs", [&] { return upper_bounds(ms); }},
      {"byte-identical corpus reports", [&] { return determinism(ms); }},
      {"sexpr round trip", [] { return round_trip(); }},
  };
  bool all = true;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    all = all && v.ok;
    std::printf("%s %2d  %s: %s (%.1f s)\n", v.ok ? "PASS" : "FAIL", n, name, v.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
