#include "kbu/checker.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include "kbu/error.hpp"
#include "kbu/interpretation.hpp"
#include "kbu/krivine.hpp"
#include "kbu/logic.hpp"
#include "kbu/model_io.hpp"

namespace kbu {

const std::vector<CheckKind>& all_checks() {
  static const std::vector<CheckKind> kinds{
      CheckKind::Eq3,         CheckKind::Eq4,           CheckKind::Eq5,
      CheckKind::Monotonicity, CheckKind::Boundedness,  CheckKind::TypeAgreement,
      CheckKind::Characterization};
  return kinds;
}

const char* check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Eq3: return "eq3";
    case CheckKind::Eq4: return "eq4";
    case CheckKind::Eq5: return "eq5";
    case CheckKind::Monotonicity: return "mono";
    case CheckKind::Boundedness: return "bounded";
    case CheckKind::TypeAgreement: return "types";
    case CheckKind::Characterization: return "char";
  }
  return "?";
}

std::optional<CheckKind> parse_check_name(const std::string& name) {
  for (auto k : all_checks())
    if (name == check_name(k)) return k;
  return std::nullopt;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Structural: return "structural_fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

Formula iff(const Formula& a, const Formula& b) {
  return Formula::conj(Formula::imp(a, b), Formula::imp(b, a));
}

std::vector<std::string> names_of(const VarTuple& xs) {
  std::vector<std::string> out;
  for (const auto& v : xs) out.push_back(v.name);
  return out;
}

std::vector<std::string> tilde_names(const VarTuple& xs) {
  std::vector<std::string> out;
  for (const auto& v : xs) out.push_back(v.name + "~");
  return out;
}

// Allocates position variables shared by the two sides of an equation.
class Positions {
 public:
  void avoid(const Formula& f) {
    auto n = var_names(f);
    used_.insert(n.begin(), n.end());
  }
  void avoid(const VarTuple& xs) {
    for (const auto& v : xs) used_.insert(v.name);
  }
  void avoid(const Environment& env) {
    for (const auto& [v, e] : env) used_.insert(v.name);
  }
  VarTuple fresh(const std::vector<std::string>& names, const std::vector<FinType>& types) {
    auto out = fresh_tuple(names, types, used_);
    avoid(out);
    return out;
  }
  VarTuple like(const VarTuple& xs) { return fresh(names_of(xs), xs.types()); }

 private:
  std::set<std::string> used_;
};

Substitution merge(Substitution a, const Substitution& b) {
  a.insert(b.begin(), b.end());
  return a;
}

std::vector<Var> concat(const VarTuple& a, const VarTuple& b) {
  auto out = a.items();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Free variables of `a` not supplied by `env`, in order.
std::vector<Var> open_vars(const Formula& a, const Environment& env) {
  std::vector<Var> out;
  for (const auto& v : free_vars(a))
    if (!env.contains(v)) out.push_back(v);
  return out;
}

class DomainCache {
 public:
  explicit DomainCache(const FiniteModel& m) : m_(m) {}
  const std::vector<Element>& full(FinType ty) {
    auto it = full_.find(ty);
    if (it == full_.end()) it = full_.emplace(ty, m_.domain(ty)).first;
    return it->second;
  }
  const std::vector<Element>& monotone(FinType ty) { return m_.self_majorizing(ty); }

 private:
  const FiniteModel& m_;
  std::map<FinType, std::vector<Element>> full_;
};

CheckReport base_report(CheckKind k, const FiniteModel* m) {
  CheckReport r;
  r.check = check_name(k);
  if (m) {
    r.base_size = m->base_size();
    r.size_cap = m->size_cap();
  }
  return r;
}

template <class Body>
CheckReport timed(CheckKind k, const FiniteModel* m, Body&& body) {
  auto start = Clock::now();
  CheckReport r = base_report(k, m);
  try {
    body(r);
  } catch (const DomainTooLarge& e) {
    r.outcome = Outcome::Skipped;
    r.witness.clear();
    r.property.reset();
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

void require_classical(const Formula& a) {
  if (!is_classical(a)) throw LanguageError("check requires a formula of the classical language");
}

std::string signature_text(const TupleSignature& s) {
  auto list = [](const std::vector<FinType>& ts) {
    std::string out = "(";
    for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ", " : "") + ts[i].pretty();
    return out + ")";
  };
  return list(s.outer) + " / " + list(s.inner);
}

// Compares lhs and rhs: `monotone` over self-majorizing elements, every other
// free variable not fixed by env over its full domain.
void equivalent(CheckReport& r, const FiniteModel& m, const Environment& env,
                const std::vector<Var>& monotone, const Formula& lhs, const Formula& rhs) {
  DomainCache dc(m);
  auto full = [&](FinType ty) -> const std::vector<Element>& { return dc.full(ty); };
  auto mono = [&](FinType ty) -> const std::vector<Element>& { return dc.monotone(ty); };
  std::set<Var> fixed(monotone.begin(), monotone.end());
  std::vector<Var> open;
  for (const auto& f : {lhs, rhs})
    for (const auto& v : free_vars(f))
      if (!env.contains(v) && !fixed.contains(v)) {
        fixed.insert(v);
        open.push_back(v);
      }
  std::ranges::sort(open);
  std::size_t count = 0;
  for_each_assignment(open, full, [&](const Environment& outer) {
    return for_each_assignment(monotone, mono, [&](const Environment& e) {
      ++count;
      if (eval_formula(m, e, lhs) == eval_formula(m, e, rhs)) return true;
      r.outcome = Outcome::Fail;
      r.witness = e;
      r.property = iff(lhs, rhs);
      r.detail = "sides disagree";
      return false;
    }, outer);
  }, env);
  if (r.outcome == Outcome::Pass) r.detail = std::to_string(count) + " assignments";
}

}  // namespace

CheckReport check_eq5(const Formula& a, const FiniteModel& m, const Environment& env) {
  require_classical(a);
  return timed(CheckKind::Eq5, &m, [&](CheckReport& r) {
    auto ru = sbfi_core(a);
    auto rb = bfi_core(krivine_inner(a));
    if (tuple_signature(ru) != tuple_signature(rb)) {
      r.outcome = Outcome::Structural;
      r.detail = "tuple signatures differ: U " + signature_text(tuple_signature(ru)) + ", K∘B " +
                 signature_text(tuple_signature(rb));
      return;
    }
    Positions pos;
    pos.avoid(ru.matrix), pos.avoid(rb.matrix), pos.avoid(ru.outer), pos.avoid(ru.inner);
    pos.avoid(rb.outer), pos.avoid(rb.inner), pos.avoid(env), pos.avoid(a);
    auto x = pos.like(ru.outer);
    auto y = pos.like(ru.inner);
    auto yt = pos.fresh(tilde_names(y), y.types());
    auto lhs = substitute(ru.matrix, merge(tuple_substitution(ru.outer, x.terms()),
                                           tuple_substitution(ru.inner, y.terms())));
    auto kb = substitute(rb.matrix, merge(tuple_substitution(rb.outer, x.terms()),
                                          tuple_substitution(rb.inner, yt.terms())));
    auto rhs = Formula::negation(bounded_monotone_forall(yt, y.terms(), kb));
    equivalent(r, m, env, concat(x, y), lhs, rhs);
  });
}

CheckReport check_eq3(const Formula& a, const FiniteModel& m, const Environment& env) {
  require_classical(a);
  return timed(CheckKind::Eq3, &m, [&](CheckReport& r) {
    auto ru = sbfi_core(a);
    auto rkb = bfi_core(krivine(a));
    const auto xs = ru.outer.types();
    TupleSignature expected;
    for (const auto& y : ru.inner) expected.outer.push_back(FinType::curried(xs, y.type));
    expected.inner = xs;
    if (tuple_signature(rkb) != expected) {
      r.outcome = Outcome::Structural;
      r.detail = "(A^K)_B has signature " + signature_text(tuple_signature(rkb)) + ", expected " +
                 signature_text(expected);
      return;
    }
    Positions pos;
    pos.avoid(ru.matrix), pos.avoid(rkb.matrix), pos.avoid(ru.outer), pos.avoid(ru.inner);
    pos.avoid(rkb.outer), pos.avoid(rkb.inner), pos.avoid(env), pos.avoid(a);
    auto big_y = pos.like(rkb.outer);
    auto x = pos.like(ru.outer);
    auto lhs = substitute(ru.matrix,
                          merge(tuple_substitution(ru.outer, x.terms()),
                                tuple_substitution(ru.inner, apply_tuple(big_y, x.terms()))));
    auto rhs = substitute(rkb.matrix, merge(tuple_substitution(rkb.outer, big_y.terms()),
                                            tuple_substitution(rkb.inner, x.terms())));
    equivalent(r, m, env, concat(big_y, x), lhs, rhs);
  });
}

CheckReport check_eq4(const Formula& a, const FiniteModel& m, const Environment& env) {
  require_classical(a);
  return timed(CheckKind::Eq4, &m, [&](CheckReport& r) {
    equivalent(r, m, env, {}, sbfi(a), bfi(krivine(a)));
  });
}

CheckReport check_characterization(const Formula& a, const FiniteModel& m,
                                   const Environment& env) {
  require_classical(a);
  return timed(CheckKind::Characterization, &m, [&](CheckReport& r) {
    equivalent(r, m, env, {}, a, krivine(a));
  });
}

CheckReport check_monotonicity(const Formula& a, const FiniteModel& m, const Environment& env) {
  require_classical(a);
  return timed(CheckKind::Monotonicity, &m, [&](CheckReport& r) {
    auto ru = sbfi_core(a);
    if (ru.inner.empty()) {
      r.detail = "inner tuple empty";
      return;
    }
    Positions pos;
    pos.avoid(ru.matrix), pos.avoid(ru.outer), pos.avoid(ru.inner), pos.avoid(env), pos.avoid(a);
    auto x = pos.like(ru.outer);
    auto y = pos.like(ru.inner);
    auto yt = pos.fresh(tilde_names(y), y.types());
    auto xs = tuple_substitution(ru.outer, x.terms());
    auto at_y = substitute(ru.matrix, merge(xs, tuple_substitution(ru.inner, y.terms())));
    auto at_yt = substitute(ru.matrix, merge(xs, tuple_substitution(ru.inner, yt.terms())));
    Formula below = Formula::maj(yt[yt.size() - 1], y[y.size() - 1]);
    for (std::size_t i = y.size() - 1; i-- > 0;) below = Formula::conj(Formula::maj(yt[i], y[i]), below);
    auto property = Formula::imp(Formula::conj(below, at_yt), at_y);

    DomainCache dc(m);
    auto full = [&](FinType ty) -> const std::vector<Element>& { return dc.full(ty); };
    // mixed-radix index over the y tuple, first component most significant
    std::vector<std::uint64_t> radix;
    std::uint64_t combos = 1;
    for (const auto& v : y) {
      radix.push_back(m.cardinality(v.type));
      combos *= radix.back();
    }
    std::vector<const std::vector<std::pair<Element, Element>>*> pair_lists;
    for (const auto& v : y) pair_lists.push_back(&m.majorizing_pairs(v.type));

    std::size_t checked = 0;
    auto outer_vars = concat(x, VarTuple{});
    for (const auto& v : open_vars(a, env)) outer_vars.push_back(v);
    for_each_assignment(outer_vars, full, [&](const Environment& ex) {
      std::vector<char> truth(combos);
      std::uint64_t idx = 0;
      for_each_assignment(y.items(), full, [&](const Environment& exy) {
        truth[idx++] = eval_formula(m, exy, at_y);
        return true;
      }, ex);
      // every componentwise pair ỹ ⊴ y
      std::vector<std::size_t> at(y.size(), 0);
      while (true) {
        std::uint64_t lo = 0, hi = 0;
        for (std::size_t k = 0; k < y.size(); ++k) {
          const auto& [u, v] = (*pair_lists[k])[at[k]];
          lo = lo * radix[k] + u.index;
          hi = hi * radix[k] + v.index;
        }
        ++checked;
        if (truth[lo] && !truth[hi]) {
          Environment w = ex;
          for (std::size_t k = 0; k < y.size(); ++k) {
            const auto& [u, v] = (*pair_lists[k])[at[k]];
            w.insert_or_assign(yt[k], u);
            w.insert_or_assign(y[k], v);
          }
          r.outcome = Outcome::Fail;
          r.witness = w;
          r.property = property;
          r.detail = "A_U(x,ỹ) holds but A_U(x,y) fails";
          return false;
        }
        std::size_t k = y.size();
        while (k > 0) {
          --k;
          if (++at[k] < pair_lists[k]->size()) break;
          at[k] = 0;
          if (k == 0) return true;
        }
      }
    }, env);
    if (r.outcome == Outcome::Pass) r.detail = std::to_string(checked) + " (x, ỹ⊴y) instances";
  });
}

CheckReport check_boundedness(const Formula& a) {
  return timed(CheckKind::Boundedness, nullptr, [&](CheckReport& r) {
    std::vector<std::string> failed;
    std::vector<std::string> checked;
    auto probe = [&](const char* label, const TranslationResult& t) {
      checked.push_back(label);
      if (!is_bounded(t.matrix)) failed.push_back(label);
    };
    probe("B", bfi_core(a));
    if (is_classical(a)) {
      probe("U", sbfi_core(a));
      probe("K∘B", bfi_core(krivine(a)));
    }
    std::string list;
    for (const auto& s : (failed.empty() ? checked : failed)) list += (list.empty() ? "" : ", ") + s;
    if (!failed.empty()) {
      r.outcome = Outcome::Structural;
      r.detail = "unbounded matrix: " + list;
    } else {
      r.detail = "bounded: " + list;
    }
  });
}

CheckReport check_type_agreement(const Formula& a) {
  require_classical(a);
  return timed(CheckKind::TypeAgreement, nullptr, [&](CheckReport& r) {
    auto su = tuple_signature(sbfi_core(a));
    auto skb = tuple_signature(bfi_core(krivine_inner(a)));
    r.detail = "U " + signature_text(su);
    if (su != skb) {
      r.outcome = Outcome::Structural;
      r.detail += ", K∘B " + signature_text(skb);
    }
  });
}

CheckReport check_equivalent(const Formula& lhs, const Formula& rhs, const FiniteModel& m,
                             const VarTuple& monotone, const Environment& env) {
  auto start = Clock::now();
  CheckReport r;
  r.check = "equiv";
  r.base_size = m.base_size();
  r.size_cap = m.size_cap();
  try {
    equivalent(r, m, env, monotone.items(), lhs, rhs);
  } catch (const DomainTooLarge& e) {
    r = CheckReport{"", "equiv", "", m.base_size(), m.size_cap(), Outcome::Skipped, {}, {}, e.what(), 0};
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

CheckReport run_check(CheckKind k, const Formula& a, const FiniteModel& m, const Environment& env) {
  CheckReport r;
  switch (k) {
    case CheckKind::Eq3: r = check_eq3(a, m, env); break;
    case CheckKind::Eq4: r = check_eq4(a, m, env); break;
    case CheckKind::Eq5: r = check_eq5(a, m, env); break;
    case CheckKind::Monotonicity: r = check_monotonicity(a, m, env); break;
    case CheckKind::Characterization: r = check_characterization(a, m, env); break;
    case CheckKind::Boundedness: r = check_boundedness(a); break;
    case CheckKind::TypeAgreement: r = check_type_agreement(a); break;
  }
  r.base_size = m.base_size();
  r.size_cap = m.size_cap();
  return r;
}

// --- framework axioms ---------------------------------------------------------

std::vector<FinType> types_within_cap(const FiniteModel& m, int max_level) {
  std::vector<FinType> found{FinType::base()};
  std::set<FinType> seen(found.begin(), found.end());
  for (bool grew = true; grew;) {
    grew = false;
    const auto snapshot = found;
    for (auto d : snapshot) {
      if (d.level() + 1 > max_level) continue;
      for (auto c : snapshot) {
        auto t = FinType::arrow(d, c);
        if (t.level() > max_level || seen.contains(t) || !m.within_cap(t)) continue;
        seen.insert(t);
        found.push_back(t);
        grew = true;
      }
    }
  }
  std::ranges::sort(found, [&](FinType a, FinType b) {
    if (a.level() != b.level()) return a.level() < b.level();
    auto ca = m.cardinality(a), cb = m.cardinality(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return found;
}

namespace {

constexpr std::uint64_t kFormulaPairLimit = std::uint64_t{1} << 20;

struct AxiomPair {
  Formula majorizability, rule;
};

AxiomPair axiom_formulas(FinType t) {
  const Var x{"x", t}, y{"y", t};
  const Var u{"u", t.domain()}, v{"v", t.domain()};
  auto pointwise = Formula::forall(
      v, Formula::bforall(u, v,
                          Formula::conj(Formula::maj(Term::apply(x, u), Term::apply(y, v)),
                                        Formula::maj(Term::apply(y, u), Term::apply(y, v)))));
  return {Formula::forall(x, Formula::forall(y, Formula::imp(Formula::maj(x, y), pointwise))),
          Formula::forall(x, Formula::forall(y, Formula::imp(pointwise, Formula::maj(x, y))))};
}

// Evaluates both statements at t directly from the tables: the relation at
// the domain and codomain is read through majorizes, the relation at t
// through majorized_by, one row per y.
std::pair<AxiomResult, AxiomResult> axioms_direct(const FiniteModel& m, FinType t) {
  const FinType d = t.domain(), c = t.codomain();
  const std::uint64_t n = m.cardinality(t), nd = m.cardinality(d), nc = m.cardinality(c);
  std::vector<std::uint8_t> rc(nc * nc);
  for (std::uint64_t a = 0; a < nc; ++a)
    for (std::uint64_t b = 0; b < nc; ++b) rc[a * nc + b] = m.majorizes(Element{c, a}, Element{c, b});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pd;
  for (std::uint64_t u = 0; u < nd; ++u)
    for (std::uint64_t v = 0; v < nd; ++v)
      if (m.majorizes(Element{d, u}, Element{d, v})) pd.emplace_back(u, v);

  AxiomResult ax{t.pretty(), "majorizability", Outcome::Pass, ""};
  AxiomResult rule{t.pretty(), "rule", Outcome::Pass, ""};
  auto fail = [&](AxiomResult& r, std::uint64_t x, std::uint64_t y) {
    if (r.outcome == Outcome::Fail) return;
    r.outcome = Outcome::Fail;
    r.detail = "counterexample x=" + to_string(m.to_tree(Element{t, x})) +
               " y=" + to_string(m.to_tree(Element{t, y}));
  };
  auto digits_of = [&](std::uint64_t f, std::vector<std::uint64_t>& out) {
    for (std::uint64_t u = nd; u-- > 0;) {
      out[u] = f % nc;
      f /= nc;
    }
  };
  std::vector<std::uint64_t> yd(nd), xd(nd);
  for (std::uint64_t y = 0; y < n; ++y) {
    digits_of(y, yd);
    const auto row = m.majorized_by(Element{t, y});
    bool self = true;
    for (const auto& [u, v] : pd) self = self && rc[yd[u] * nc + yd[v]];
    if (!self) {
      if (!row.empty()) fail(ax, row.front().index, y);
      continue;
    }
    std::fill(xd.begin(), xd.end(), 0);
    std::size_t next = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
      bool below = true;
      for (const auto& [u, v] : pd)
        if (!rc[xd[u] * nc + yd[v]]) {
          below = false;
          break;
        }
      const bool in_row = next < row.size() && row[next].index == x;
      if (in_row) ++next;
      if (in_row && !below) fail(ax, x, y);
      if (!in_row && below) fail(rule, x, y);
      for (std::uint64_t u = nd; u-- > 0;) {
        if (++xd[u] < nc) break;
        xd[u] = 0;
      }
    }
    if (next != row.size()) fail(ax, row[next].index, y);
  }
  const auto pairs = std::to_string(n) + "² pairs, evaluated directly";
  if (ax.outcome == Outcome::Pass) ax.detail = pairs;
  if (rule.outcome == Outcome::Pass) rule.detail = pairs;
  return {ax, rule};
}

}  // namespace

std::vector<AxiomResult> check_model_axioms(const FiniteModel& m, int max_level) {
  std::vector<AxiomResult> out;
  auto by_formula = [&](FinType t, const char* axiom, const Formula& f) {
    AxiomResult r{t.pretty(), axiom, Outcome::Pass, ""};
    const auto card = m.cardinality(t);
    if (auto w = find_countermodel(m, f, VarTuple{}); w) {
      r.outcome = Outcome::Fail;
      r.detail = "formula evaluates to false";
    } else {
      r.detail = std::to_string(card) + "² pairs, evaluated as a formula";
    }
    out.push_back(std::move(r));
  };
  for (auto t : types_within_cap(m, max_level)) {
    const auto card = m.cardinality(t);
    if (t.is_base()) {
      const Var x{"x", t}, y{"y", t};
      by_formula(t, "base",
                 Formula::forall(x, Formula::forall(y, iff(Formula::maj(x, y), Formula::leq0(x, y)))));
    } else if (card <= kFormulaPairLimit / card) {
      auto f = axiom_formulas(t);
      by_formula(t, "majorizability", f.majorizability);
      by_formula(t, "rule", f.rule);
    } else {
      auto [ax, rule] = axioms_direct(m, t);
      out.push_back(std::move(ax));
      out.push_back(std::move(rule));
    }
  }
  return out;
}

// --- corpus -------------------------------------------------------------------

CorpusResult run_corpus(const std::vector<CorpusEntry>& corpus,
                        const std::vector<NamedModel>& models,
                        const std::vector<CheckKind>& checks, unsigned threads) {
  struct Task {
    const CorpusEntry* entry;
    const NamedModel* model;
    CheckKind check;
  };
  std::vector<Task> tasks;
  for (const auto& e : corpus)
    for (const auto& m : models)
      for (auto k : checks) tasks.push_back({&e, &m, k});

  CorpusResult result;
  result.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      const auto& t = tasks[i];
      CheckReport r;
      try {
        r = run_check(t.check, t.entry->formula, *t.model->model);
      } catch (const Error& e) {
        r = base_report(t.check, t.model->model);
        r.outcome = Outcome::Structural;
        r.detail = e.what();
      }
      r.formula = t.entry->id;
      r.model = t.model->id;
      result.reports[i] = std::move(r);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::ranges::sort(result.reports, [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.formula, a.check, a.model) < std::tie(b.formula, b.check, b.model);
  });
  auto& s = result.summary;
  for (const auto& r : result.reports) {
    ++s.total;
    switch (r.outcome) {
      case Outcome::Pass: ++s.pass; break;
      case Outcome::Fail: ++s.fail; break;
      case Outcome::Structural: ++s.structural; break;
      case Outcome::Skipped: ++s.skipped; break;
    }
  }
  return result;
}

nlohmann::json to_json(const CheckReport& r, bool timing) {
  nlohmann::json witness = nlohmann::json::object();
  for (const auto& [v, e] : r.witness)
    witness[v.name] = {{"type", v.type.sexpr()}, {"value", to_json(element_tree(e, r.base_size))}};
  nlohmann::json j{{"formula", r.formula},
                   {"check", r.check},
                   {"model", r.model},
                   {"base_size", r.base_size},
                   {"size_cap", r.size_cap},
                   {"outcome", outcome_name(r.outcome)},
                   {"witness", witness},
                   {"detail", r.detail},
                   {"millis", timing ? r.millis : 0.0}};
  return j;
}

nlohmann::json to_json(const CorpusResult& r, bool timing) {
  auto reports = nlohmann::json::array();
  for (const auto& x : r.reports) reports.push_back(to_json(x, timing));
  const auto& s = r.summary;
  return {{"reports", reports},
          {"summary",
           {{"total", s.total},
            {"pass", s.pass},
            {"fail", s.fail},
            {"structural_fail", s.structural},
            {"skipped", s.skipped}}}};
}

}  // namespace kbu
