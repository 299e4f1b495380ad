#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbu/syntax.hpp"

namespace kbu {

// Unassembled form of an interpretation: (outer, inner, matrix) standing for
// ∃̃outer ∀̃inner matrix (B) or ∀̃outer ∃̃inner matrix (U).
struct TranslationResult {
  enum class Kind { B, U };

  VarTuple outer;
  VarTuple inner;
  Formula matrix;
  Kind kind;
};

struct TupleSignature {
  std::vector<FinType> outer;
  std::vector<FinType> inner;
  friend bool operator==(const TupleSignature&, const TupleSignature&) = default;
};

TupleSignature tuple_signature(const TranslationResult& r);

// One step of a translation, recorded in pre-order.
struct TraceLine {
  int depth = 0;
  std::string clause;     // e.g. "U clause 5"
  std::string construct;  // e.g. "(∀z A)^U"
  Formula source;
  std::optional<Formula> output;              // K
  std::optional<TranslationResult> result;    // B, U
};

using Trace = std::vector<TraceLine>;

}  // namespace kbu
