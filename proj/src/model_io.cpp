#include "kbu/model_io.hpp"

#include <fstream>
#include <functional>

#include "kbu/error.hpp"
#include "kbu/sexpr.hpp"

namespace kbu {

namespace {

FinType type_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw ModelError(where + ": type must be a string such as \"(-> 0 0)\"");
  try {
    return parse_type(j.get<std::string>());
  } catch (const SyntaxError& e) {
    throw ModelError(where + ": " + e.what());
  }
}

}  // namespace

ValueTree value_tree_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0))
    return ValueTree{j.get<std::uint64_t>()};
  if (j.is_array()) {
    std::vector<ValueTree> entries;
    for (const auto& x : j) entries.push_back(value_tree_from_json(x));
    return ValueTree{std::move(entries)};
  }
  throw ModelError("value must be a non-negative integer or an array of values");
}

nlohmann::json to_json(const ValueTree& t) {
  if (const auto* n = std::get_if<std::uint64_t>(&t.value)) return *n;
  auto arr = nlohmann::json::array();
  for (const auto& e : std::get<std::vector<ValueTree>>(t.value)) arr.push_back(to_json(e));
  return arr;
}

ModelSpec model_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ModelError("model description must be a JSON object");
  ModelSpec spec;
  if (!j.contains("base_size") || !j["base_size"].is_number_integer())
    throw ModelError("model: integer field \"base_size\" is required");
  auto n = j["base_size"].get<std::int64_t>();
  if (n < 1) throw ModelError("model: base_size must be at least 1");
  spec.base_size = static_cast<std::uint64_t>(n);
  if (j.contains("size_cap")) {
    if (!j["size_cap"].is_number_integer() || j["size_cap"].get<std::int64_t>() < 1)
      throw ModelError("model: size_cap must be a positive integer");
    spec.size_cap = j["size_cap"].get<std::uint64_t>();
  }
  if (j.contains("predicates")) {
    for (const auto& [name, p] : j["predicates"].items()) {
      PredicateTable table;
      const auto where = "predicate " + name;
      if (!p.is_object() || !p.contains("table")) throw ModelError(where + ": \"table\" is required");
      if (p.contains("argtypes"))
        for (const auto& t : p["argtypes"]) table.argtypes.push_back(type_field(t, where));
      for (const auto& v : p["table"]) {
        if (v.is_boolean()) table.table.push_back(v.get<bool>());
        else if (v.is_number_integer() && (v == 0 || v == 1)) table.table.push_back(v == 1);
        else throw ModelError(where + ": table entries must be booleans or 0/1");
      }
      spec.predicates.emplace(name, std::move(table));
    }
  }
  if (j.contains("constants")) {
    for (const auto& [name, c] : j["constants"].items()) {
      const auto where = "constant " + name;
      if (!c.is_object() || !c.contains("type") || !c.contains("value"))
        throw ModelError(where + ": \"type\" and \"value\" are required");
      spec.constants.emplace(name, ConstantSpec{type_field(c["type"], where),
                                                value_tree_from_json(c["value"])});
    }
  }
  return spec;
}

ModelSpec load_model_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  try {
    return model_spec_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

std::string model_name(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (in) {
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_object() && j.contains("name") && j["name"].is_string()) return j["name"];
  }
  return path.stem().string();
}

ValueTree element_tree(const Element& e, std::uint64_t base_size) {
  if (e.type.is_base()) return ValueTree{e.index};
  // cardinalities of a materialized element's types always fit
  std::function<std::uint64_t(FinType)> card = [&](FinType t) -> std::uint64_t {
    if (t.is_base()) return base_size + 1;
    std::uint64_t c = card(t.codomain()), d = card(t.domain()), r = 1;
    for (std::uint64_t i = 0; i < d; ++i) r *= c;
    return r;
  };
  const auto d = card(e.type.domain());
  const auto c = card(e.type.codomain());
  std::vector<ValueTree> entries(d);
  auto index = e.index;
  for (std::uint64_t u = d; u-- > 0;) {
    entries[u] = element_tree(Element{e.type.codomain(), index % c}, base_size);
    index /= c;
  }
  return ValueTree{std::move(entries)};
}

}  // namespace kbu
