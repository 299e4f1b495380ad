#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kbu/model.hpp"

namespace kbu {

// {"base_size": N,
//  "predicates": {"P": {"argtypes": ["0"], "table": [true, false]}},
//  "constants": {"k": {"type": "(-> 0 0)", "value": [1, 0]}},
//  "size_cap": M}
// Optional "name". Tables may hold booleans or 0/1. Throws ModelError.
ModelSpec model_spec_from_json(const nlohmann::json& j);
ModelSpec load_model_spec(const std::filesystem::path& path);
// Model id: the "name" field if present, else the file stem.
std::string model_name(const std::filesystem::path& path);

nlohmann::json to_json(const ValueTree& t);
ValueTree value_tree_from_json(const nlohmann::json& j);

// Value tree of an element without consulting a model: arithmetic on the index.
ValueTree element_tree(const Element& e, std::uint64_t base_size);

}  // namespace kbu
