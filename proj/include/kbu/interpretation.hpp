#pragma once

#include "kbu/syntax.hpp"
#include "kbu/translation.hpp"

namespace kbu {

// Bounded functional interpretation of an intuitionistic formula:
// A^B ≡ ∃̃x ∀̃y A_B(x,y). Throws TypeError on ill-typed input.
TranslationResult bfi_core(const Formula& a, Trace* trace = nullptr);
Formula bfi(const Formula& a);

// Shoenfield-like bounded functional interpretation of a classical formula:
// A^U ≡ ∀̃x ∃̃y A_U(x,y). Throws LanguageError outside the classical language.
TranslationResult sbfi_core(const Formula& a, Trace* trace = nullptr);
Formula sbfi(const Formula& a);

// Quantifier prefix attached to an unassembled result.
Formula assemble(const TranslationResult& r);

}  // namespace kbu
