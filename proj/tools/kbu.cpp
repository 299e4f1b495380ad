// kbu: translate, check and explain the K, B and U interpretations.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "kbu/checker.hpp"
#include "kbu/error.hpp"
#include "kbu/explain.hpp"
#include "kbu/interpretation.hpp"
#include "kbu/krivine.hpp"
#include "kbu/logic.hpp"
#include "kbu/model_io.hpp"
#include "kbu/sexpr.hpp"

namespace fs = std::filesystem;
using namespace kbu;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kTooLarge = 3 };

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

std::string stem_of(const std::string& path) { return path == "-" ? "stdin" : fs::path(path).stem().string(); }

std::vector<CorpusEntry> read_formulas(const std::string& path, const Signature& sig) {
  auto text = read_input(path);
  try {
    return parse_corpus(text, stem_of(path), sig);
  } catch (const SyntaxError& e) {
    throw Error((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
  }
}

std::vector<CorpusEntry> read_corpus_path(const std::string& path, const Signature& sig) {
  if (!fs::is_directory(path)) return read_formulas(path, sig);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(path))
    if (e.is_regular_file() && e.path().extension() == ".kbu") files.push_back(e.path());
  std::ranges::sort(files);
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    auto part = read_formulas(f.string(), sig);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Style parse_style(const std::string& s) {
  if (s == "sexpr") return Style::Sexpr;
  if (s == "latex") return Style::Latex;
  return Style::Unicode;
}

struct LoadedModel {
  std::string id;
  std::unique_ptr<FiniteModel> model;
};

LoadedModel load_model(const std::string& path) {
  return {model_name(path), std::make_unique<FiniteModel>(load_model_spec(path))};
}

Signature signature_of(const std::vector<LoadedModel>& models) {
  std::map<std::string, FinType> constants;
  for (const auto& m : models)
    for (const auto& [name, type] : m.model->constant_signature()) constants.emplace(name, type);
  return Signature(constants);
}

nlohmann::json tuple_json(const VarTuple& xs) {
  auto out = nlohmann::json::array();
  for (const auto& v : xs) out.push_back({{"name", v.name}, {"type", v.type.sexpr()}});
  return out;
}

std::string witness_text(const CheckReport& r) {
  std::string out;
  for (const auto& [v, e] : r.witness) {
    out += (out.empty() ? "" : ", ") + v.name + ":" + format_type(v.type, Style::Unicode) + " = " +
           to_string(element_tree(e, r.base_size));
  }
  return out;
}

void print_report(const CheckReport& r) {
  std::cout << r.formula << "  " << r.check << "  " << outcome_name(r.outcome);
  if (!r.model.empty()) std::cout << "  [" << r.model << "]";
  if (!r.detail.empty()) std::cout << "  " << r.detail;
  std::cout << '\n';
  if (r.outcome == Outcome::Fail) {
    std::cout << "  witness: " << witness_text(r) << '\n';
    if (r.property) std::cout << "  property: " << format_formula(*r.property, Style::Unicode) << '\n';
  }
}

int exit_for(const std::vector<CheckReport>& reports) {
  int code = kOk;
  for (const auto& r : reports) {
    if (r.outcome == Outcome::Fail || r.outcome == Outcome::Structural) return kCheckFailed;
    if (r.outcome == Outcome::Skipped) code = kTooLarge;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krivine negative translation and bounded functional interpretations over finite models"};
  app.require_subcommand(1);
  bool json = false;

  // translate
  auto* translate = app.add_subcommand("translate", "Print a translation of each formula");
  bool t_k = false, t_b = false, t_u = false, t_kb = false, show_tuples = false;
  std::string style_name = "unicode", t_file;
  auto* ok = translate->add_flag("--k", t_k, "Krivine translation A^K");
  auto* ob = translate->add_flag("--b", t_b, "Bounded functional interpretation A^B");
  auto* ou = translate->add_flag("--u", t_u, "Shoenfield-like interpretation A^U");
  auto* okb = translate->add_flag("--kb", t_kb, "Composite (A^K)^B");
  for (auto* o : {ok, ob, ou, okb})
    for (auto* p : {ok, ob, ou, okb})
      if (o != p) o->excludes(p);
  translate->add_flag("--show-tuples", show_tuples, "Show witness tuples and matrix separately");
  translate->add_option("--style", style_name, "sexpr, unicode or latex")
      ->check(CLI::IsMember({"sexpr", "unicode", "latex"}));
  translate->add_option("file", t_file, "Formula file, or - for standard input")->required();
  translate->add_flag("--json", json, "Machine-readable output");

  // check
  auto* check = app.add_subcommand("check", "Run one check on each formula");
  std::map<std::string, bool> check_flags;
  std::vector<CLI::Option*> check_opts;
  for (auto k : all_checks())
    check_opts.push_back(check->add_flag(std::string("--") + check_name(k), check_flags[check_name(k)]));
  for (auto* o : check_opts)
    for (auto* p : check_opts)
      if (o != p) o->excludes(p);
  std::string c_model, c_file;
  check->add_option("--model", c_model, "Model description (JSON)")->required()->check(CLI::ExistingFile);
  check->add_option("file", c_file, "Formula file, or - for standard input")->required();
  check->add_flag("--json", json, "Machine-readable output");
  bool c_timing = true;
  check->add_flag("!--no-timing", c_timing, "Report zero elapsed time");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Run checks over a corpus and a set of models");
  std::vector<std::string> k_models;
  std::string k_checks, k_path;
  unsigned k_threads = 0;
  bool k_timing = true;
  corpus->add_option("--model", k_models, "Model description (repeatable)")->required()->check(CLI::ExistingFile);
  corpus->add_option("--checks", k_checks, "Comma-separated check names (default: all)");
  corpus->add_option("--threads", k_threads, "Worker threads (default: hardware concurrency)");
  corpus->add_flag("!--no-timing", k_timing, "Report zero elapsed time");
  corpus->add_option("path", k_path, "Corpus file or directory of .kbu files")->required()->check(CLI::ExistingPath);
  corpus->add_flag("--json", json, "Machine-readable output");

  // model-info
  auto* info = app.add_subcommand("model-info", "Domain sizes and framework axioms of a model");
  std::string i_model;
  int i_level = 1;
  info->add_option("--model", i_model, "Model description (JSON)")->required()->check(CLI::ExistingFile);
  info->add_option("--max-level", i_level, "Highest type level")->check(CLI::Range(0, 3));
  info->add_flag("--json", json, "Machine-readable output");

  // explain
  auto* explain_cmd = app.add_subcommand("explain", "Clause-by-clause derivation of a translation");
  bool e_k = false, e_b = false, e_u = false;
  std::string e_file, e_style = "unicode";
  auto* ek = explain_cmd->add_flag("--k", e_k, "Krivine translation");
  auto* eb = explain_cmd->add_flag("--b", e_b, "Bounded functional interpretation");
  auto* eu = explain_cmd->add_flag("--u", e_u, "Shoenfield-like interpretation");
  ek->excludes(eb)->excludes(eu);
  eb->excludes(eu);
  explain_cmd->add_option("--style", e_style)->check(CLI::IsMember({"sexpr", "unicode", "latex"}));
  explain_cmd->add_option("file", e_file, "Formula file, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*translate) {
      if (!(t_k || t_b || t_u || t_kb)) throw CLI::ValidationError("translate", "one of --k, --b, --u, --kb is required");
      const Style style = parse_style(style_name);
      auto out = nlohmann::json::array();
      for (const auto& e : read_formulas(t_file, Signature{})) {
        nlohmann::json j{{"formula", e.id}, {"source", format_formula(e.formula, Style::Sexpr)}};
        std::string text;
        if (t_k) {
          auto k = krivine(e.formula);
          text = format_formula(k, style);
          j["translation"] = text;
        } else {
          TranslationResult r = t_b ? bfi_core(e.formula) : t_u ? sbfi_core(e.formula) : bfi_core(krivine(e.formula));
          auto assembled = assemble(r);
          j["translation"] = format_formula(assembled, style);
          j["outer"] = tuple_json(r.outer);
          j["inner"] = tuple_json(r.inner);
          j["matrix"] = format_formula(r.matrix, style);
          if (show_tuples) {
            text = "outer " + format_tuple(r.outer, style) + "\ninner " + format_tuple(r.inner, style) +
                   "\nmatrix " + format_formula(r.matrix, style);
          } else {
            text = format_formula(assembled, style);
          }
        }
        out.push_back(j);
        if (!json) std::cout << e.id << ": " << text << '\n';
      }
      if (json) std::cout << out.dump(2) << '\n';
      return kOk;
    }

    if (*check) {
      std::optional<CheckKind> kind;
      for (auto k : all_checks())
        if (check_flags[check_name(k)]) kind = k;
      if (!kind) throw CLI::ValidationError("check", "one check flag is required");
      std::vector<LoadedModel> models;
      models.push_back(load_model(c_model));
      const auto& m = models.front();
      std::vector<CheckReport> reports;
      for (const auto& e : read_formulas(c_file, signature_of(models))) {
        auto r = run_check(*kind, e.formula, *m.model);
        r.formula = e.id;
        r.model = m.id;
        reports.push_back(std::move(r));
      }
      if (json) {
        auto out = nlohmann::json::array();
        for (const auto& r : reports) out.push_back(to_json(r, c_timing));
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& r : reports) print_report(r);
      }
      return exit_for(reports);
    }

    if (*corpus) {
      std::vector<CheckKind> kinds;
      if (k_checks.empty()) {
        kinds = all_checks();
      } else {
        std::stringstream ss(k_checks);
        for (std::string name; std::getline(ss, name, ',');) {
          auto k = parse_check_name(name);
          if (!k) throw CLI::ValidationError("--checks", "unknown check " + name);
          kinds.push_back(*k);
        }
      }
      std::vector<LoadedModel> models;
      for (const auto& p : k_models) models.push_back(load_model(p));
      auto entries = read_corpus_path(k_path, signature_of(models));
      std::vector<NamedModel> named;
      for (const auto& m : models) named.push_back({m.id, m.model.get()});
      auto result = run_corpus(entries, named, kinds, k_threads);
      if (json) {
        std::cout << to_json(result, k_timing).dump(2) << '\n';
      } else {
        for (const auto& r : result.reports) print_report(r);
        const auto& s = result.summary;
        std::cout << "total " << s.total << ", pass " << s.pass << ", fail " << s.fail
                  << ", structural " << s.structural << ", skipped " << s.skipped << '\n';
      }
      return result.summary.ok() ? kOk : kCheckFailed;
    }

    if (*info) {
      auto m = load_model(i_model);
      auto axioms = check_model_axioms(*m.model, i_level);
      nlohmann::json types = nlohmann::json::array();
      for (auto t : types_within_cap(*m.model, i_level))
        types.push_back({{"type", t.sexpr()},
                         {"level", t.level()},
                         {"cardinality", m.model->cardinality(t)},
                         {"self_majorizing", m.model->self_majorizing(t).size()}});
      bool all_pass = true;
      nlohmann::json ax = nlohmann::json::array();
      for (const auto& a : axioms) {
        all_pass = all_pass && a.outcome == Outcome::Pass;
        ax.push_back({{"type", a.type}, {"axiom", a.axiom}, {"outcome", outcome_name(a.outcome)}, {"detail", a.detail}});
      }
      if (json) {
        std::cout << nlohmann::json{{"model", m.id},
                                    {"base_size", m.model->base_size()},
                                    {"size_cap", m.model->size_cap()},
                                    {"types", types},
                                    {"axioms", ax}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "model " << m.id << ": base {0.." << m.model->base_size() << "}, size cap "
                  << m.model->size_cap() << '\n';
        for (const auto& t : types)
          std::cout << "  " << format_type(parse_type(t["type"].get<std::string>()), Style::Unicode)
                    << "  level " << t["level"] << "  |D| = " << t["cardinality"]
                    << "  self-majorizing " << t["self_majorizing"] << '\n';
        for (const auto& a : axioms)
          std::cout << "  " << a.axiom << " at " << a.type << ": " << outcome_name(a.outcome) << "  "
                    << a.detail << '\n';
      }
      return all_pass ? kOk : kCheckFailed;
    }

    if (*explain_cmd) {
      if (!(e_k || e_b || e_u)) throw CLI::ValidationError("explain", "one of --k, --b, --u is required");
      const auto which = e_k ? Explained::K : e_b ? Explained::B : Explained::U;
      const auto entries = read_formulas(e_file, Signature{});
      for (const auto& e : entries) {
        if (entries.size() > 1) std::cout << e.id << ":\n";
        std::cout << explain(e.formula, which, parse_style(e_style));
      }
      return kOk;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const DomainTooLarge& e) {
    std::cerr << "kbu: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "kbu: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
