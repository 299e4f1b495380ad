#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kbu/eval.hpp"
#include "kbu/model.hpp"
#include "kbu/sexpr.hpp"
#include "kbu/syntax.hpp"

namespace kbu {

enum class CheckKind {
  Eq3,               // ∀̃Y,x [A_U(x,Yx) ↔ (A^K)_B(Y,x)]
  Eq4,               // A^U ↔ (A^K)^B
  Eq5,               // ∀̃x,y [A_U(x,y) ↔ ¬∀̃ỹ⊴y (A_K)_B(x,ỹ)]
  Monotonicity,      // ∀x∀y∀ỹ⊴y [A_U(x,ỹ) → A_U(x,y)]
  Boundedness,       // interpretation matrices are bounded
  TypeAgreement,     // tuple signatures of U and K∘B coincide
  Characterization,  // A ↔ A^K
};

const std::vector<CheckKind>& all_checks();
const char* check_name(CheckKind k);  // eq3 eq4 eq5 mono bounded types char
std::optional<CheckKind> parse_check_name(const std::string& name);

enum class Outcome { Pass, Fail, Structural, Skipped };
const char* outcome_name(Outcome o);

struct CheckReport {
  std::string formula;
  std::string check;
  std::string model;
  std::uint64_t base_size = 0;
  std::uint64_t size_cap = 0;
  Outcome outcome = Outcome::Pass;
  // For Fail: an assignment under which `property` evaluates to false.
  Environment witness;
  std::optional<Formula> property;
  std::string detail;
  double millis = 0;
};

// Semantic checks. `env` supplies values for free variables of `a`; any free
// variable it leaves out is ranged over its full domain.
CheckReport check_eq3(const Formula& a, const FiniteModel& m, const Environment& env = {});
CheckReport check_eq4(const Formula& a, const FiniteModel& m, const Environment& env = {});
CheckReport check_eq5(const Formula& a, const FiniteModel& m, const Environment& env = {});
CheckReport check_monotonicity(const Formula& a, const FiniteModel& m, const Environment& env = {});
CheckReport check_characterization(const Formula& a, const FiniteModel& m,
                                   const Environment& env = {});
// Syntactic checks.
CheckReport check_boundedness(const Formula& a);
CheckReport check_type_agreement(const Formula& a);

// lhs ↔ rhs with `monotone` ranging over self-majorizing elements and every
// other free variable not fixed by env over its full domain.
CheckReport check_equivalent(const Formula& lhs, const Formula& rhs, const FiniteModel& m,
                             const VarTuple& monotone = {}, const Environment& env = {});

CheckReport run_check(CheckKind k, const Formula& a, const FiniteModel& m,
                      const Environment& env = {});

// Result of checking the framework axioms at one type.
struct AxiomResult {
  std::string type;
  std::string axiom;  // base, majorizability, rule
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

// Every finite type of level ≤ max_level whose domain is within the cap, in
// a deterministic order (by level, then by structure).
std::vector<FinType> types_within_cap(const FiniteModel& m, int max_level);

// Verifies, for every type of types_within_cap: ⊴₀ coincides with ≤₀; the
// axiom x⊴y → ∀u⊴v (xu⊴yv ∧ yu⊴yv); the converse (admissibility of the
// majorizability rule). Types with at most 2^20 pairs are checked by
// evaluating the statements as formulas; larger ones by a direct table scan
// over every pair. Both are exhaustive.
std::vector<AxiomResult> check_model_axioms(const FiniteModel& m, int max_level);

struct NamedModel {
  std::string id;
  const FiniteModel* model;
};

struct CorpusSummary {
  std::size_t total = 0, pass = 0, fail = 0, structural = 0, skipped = 0;
  bool ok() const { return fail == 0 && structural == 0; }
};

struct CorpusResult {
  std::vector<CheckReport> reports;  // sorted by (formula, check, model)
  CorpusSummary summary;
};

// Runs corpus × models × checks; tasks run on a small worker pool.
CorpusResult run_corpus(const std::vector<CorpusEntry>& corpus,
                        const std::vector<NamedModel>& models,
                        const std::vector<CheckKind>& checks, unsigned threads = 0);

nlohmann::json to_json(const CheckReport& r, bool timing = true);
nlohmann::json to_json(const CorpusResult& r, bool timing = true);

}  // namespace kbu
