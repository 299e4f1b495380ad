#include "kbu/explain.hpp"

#include "kbu/interpretation.hpp"
#include "kbu/krivine.hpp"

namespace kbu {

std::string format_result(const TranslationResult& r, Style style) {
  const char* prefix = r.kind == TranslationResult::Kind::B ? "∃̃" : "∀̃";
  const char* second = r.kind == TranslationResult::Kind::B ? "∀̃" : "∃̃";
  return std::string(prefix) + format_tuple(r.outer, style) + " " + second +
         format_tuple(r.inner, style) + " " + format_formula(r.matrix, style);
}

std::string format_trace(const Trace& trace, Style style) {
  std::string out;
  for (const auto& line : trace) {
    out += std::string(2 * line.depth, ' ');
    out += line.clause + ": " + line.construct + "  [" + format_formula(line.source, style) + "]";
    if (line.output) out += "  ⇒  " + format_formula(*line.output, style);
    if (line.result) out += "  ⇒  " + format_result(*line.result, style);
    out += '\n';
  }
  return out;
}

std::string explain(const Formula& a, Explained which, Style style) {
  Trace trace;
  switch (which) {
    case Explained::K: krivine_inner(a, &trace); break;
    case Explained::B: bfi_core(a, &trace); break;
    case Explained::U: sbfi_core(a, &trace); break;
  }
  return format_trace(trace, style);
}

}  // namespace kbu
