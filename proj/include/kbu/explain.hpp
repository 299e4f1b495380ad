#pragma once

#include <string>

#include "kbu/sexpr.hpp"
#include "kbu/syntax.hpp"
#include "kbu/translation.hpp"

namespace kbu {

enum class Explained { K, B, U };

// Clause-by-clause derivation, one line per node of the source formula,
// indented by depth. Every line names the clause it applies.
std::string explain(const Formula& a, Explained which, Style style = Style::Unicode);

// Renders an already recorded trace.
std::string format_trace(const Trace& trace, Style style = Style::Unicode);

// "(x, y) ; matrix" form of an unassembled result.
std::string format_result(const TranslationResult& r, Style style = Style::Unicode);

}  // namespace kbu
