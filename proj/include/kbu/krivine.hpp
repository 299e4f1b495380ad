#pragma once

#include "kbu/syntax.hpp"
#include "kbu/translation.hpp"

namespace kbu {

// A_K, defined on the classical language; throws LanguageError otherwise.
Formula krivine_inner(const Formula& a, Trace* trace = nullptr);

// A^K :≡ ¬A_K
Formula krivine(const Formula& a, Trace* trace = nullptr);

}  // namespace kbu
