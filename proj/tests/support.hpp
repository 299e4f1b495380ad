#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "kbu/model.hpp"
#include "kbu/model_io.hpp"
#include "kbu/sexpr.hpp"
#include "kbu/syntax.hpp"

namespace kbu::test {

inline std::string source_path(const std::string& rel) { return std::string(KBU_SOURCE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Formula F(const std::string& text) { return parse_formula(text); }

inline const std::vector<CorpusEntry>& default_corpus() {
  static const auto corpus = parse_corpus(slurp(source_path("corpus/default.kbu")), "default");
  return corpus;
}

inline const FinType Z = FinType::base();
inline const FinType Z1 = FinType::arrow(Z, Z);

// N = base_size; P unary, Q nullary, R binary, all with the given tables.
inline ModelSpec spec(std::uint64_t n, std::vector<bool> p = {}, bool q = false,
                      std::vector<bool> r = {}) {
  ModelSpec s;
  s.base_size = n;
  if (p.empty()) p.assign(n + 1, false);
  if (r.empty()) r.assign((n + 1) * (n + 1), false);
  s.predicates["P"] = {{Z}, p};
  s.predicates["Q"] = {{}, {q}};
  s.predicates["R"] = {{Z, Z}, r};
  return s;
}

inline Element num(std::uint64_t n) { return Element{Z, n}; }

}  // namespace kbu::test
