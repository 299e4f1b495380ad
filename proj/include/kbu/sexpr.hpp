#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kbu/syntax.hpp"

namespace kbu {

// Constant names known to the parser. Numerals, succ and max are always
// present; models add their own constants.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::map<std::string, FinType> constants) : constants_(std::move(constants)) {}

  std::optional<FinType> type_of(const std::string& name) const;
  static bool is_builtin(const std::string& name, FinType type);

 private:
  std::map<std::string, FinType> constants_;
};

FinType parse_type(std::string_view text);

// Exactly one formula. Identifiers not bound by an enclosing quantifier are
// free variables of type 0 unless written `(v name type)`.
Formula parse_formula(std::string_view text, const Signature& sig = {});

struct CorpusEntry {
  std::string id;
  Formula formula;
  bool large = false;
};

// A sequence of formulas, each optionally wrapped as `(def ID [:large] FORMULA)`.
// Unnamed formulas get ids `<prefix>#<n>` (1-based).
std::vector<CorpusEntry> parse_corpus(std::string_view text, const std::string& prefix,
                                      const Signature& sig = {});

enum class Style { Sexpr, Unicode, Latex };

std::string format_type(FinType t, Style style = Style::Sexpr);
std::string format_term(const Term& t, Style style = Style::Sexpr);
std::string format_formula(const Formula& f, Style style = Style::Sexpr);
std::string format_tuple(const VarTuple& xs, Style style = Style::Unicode);

}  // namespace kbu
