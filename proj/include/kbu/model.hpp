#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kbu/fintype.hpp"

namespace kbu {

// An element of the full type structure, identified by its position in the
// enumeration of its type's domain. For arrow types the position encodes the
// value sequence over the enumerated argument domain, first argument most
// significant, so positions follow lexicographic order of the tables.
struct Element {
  FinType type;
  std::uint64_t index = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Number at type 0, otherwise the table of values over the argument domain.
struct ValueTree {
  std::variant<std::uint64_t, std::vector<ValueTree>> value;

  friend bool operator==(const ValueTree&, const ValueTree&) = default;
};

struct PredicateTable {
  std::vector<FinType> argtypes;
  // Indexed over the product of the argument domains, first argument most significant.
  std::vector<bool> table;
};

struct ConstantSpec {
  FinType type;
  ValueTree value;
};

struct ModelSpec {
  std::uint64_t base_size = 1;  // N: type 0 is {0, ..., N}
  std::map<std::string, PredicateTable> predicates;
  std::map<std::string, ConstantSpec> constants;
  std::uint64_t size_cap = 65536;
};

// Full finite type structure over {0..N} with the recursive (Howard–Bezem)
// strong majorizability relation:
//   a ⊴₀ b  iff  a ≤ b
//   a ⊴ b   iff  for all u ⊴ v: a(u) ⊴ b(v) and b(u) ⊴ b(v)
// Built-in constants: the numerals 0..N, succ (truncated at N) and max.
//
// Immutable after construction; the lazily filled caches are safe to share
// between threads.
class FiniteModel {
 public:
  explicit FiniteModel(ModelSpec spec);
  ~FiniteModel();
  FiniteModel(const FiniteModel&) = delete;
  FiniteModel& operator=(const FiniteModel&) = delete;

  std::uint64_t base_size() const { return spec_.base_size; }
  std::uint64_t size_cap() const { return spec_.size_cap; }
  const ModelSpec& spec() const { return spec_; }

  // Throws DomainTooLarge beyond size_cap.
  std::uint64_t cardinality(FinType ty) const;
  bool within_cap(FinType ty) const;
  std::vector<Element> domain(FinType ty) const;

  Element apply(const Element& f, const Element& a) const;
  std::vector<Element> table(const Element& f) const;           // values over domain(f.type.domain())
  Element from_table(FinType ty, std::span<const Element> values) const;

  bool majorizes(const Element& a, const Element& b) const;
  bool majorizes(FinType ty, const Element& a, const Element& b) const { 
    return majorizes(Element{ty, a.index}, Element{ty, b.index});
  }
  // Every a with a ⊴ b, in enumeration order.
  std::vector<Element> majorized_by(const Element& b) const;
  const std::vector<Element>& self_majorizing(FinType ty) const;
  // All (u, v) with u ⊴ v, in enumeration order.
  const std::vector<std::pair<Element, Element>>& majorizing_pairs(FinType ty) const;
  // First self-majorizing b with e ⊴ b for every e.
  std::optional<Element> find_upper_bound(FinType ty, std::span<const Element> es) const;

  std::optional<Element> constant(const std::string& name) const;
  // name → type for every constant, built-ins included
  std::map<std::string, FinType> constant_signature() const;
  bool predicate(const std::string& name, std::span<const Element> args) const;

  ValueTree to_tree(const Element& e) const;
  Element from_tree(FinType ty, const ValueTree& tree) const;

 private:
  struct TypeInfo;
  TypeInfo& info(FinType ty) const;
  TypeInfo& info_locked(FinType ty) const;
  bool maj(TypeInfo& ti, std::uint64_t a, std::uint64_t b) const;
  void build_index(TypeInfo& ti) const;
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs(TypeInfo& ti) const;

  std::uint64_t serial_;
  ModelSpec spec_;
  std::map<std::string, Element> constants_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<FinType, std::unique_ptr<TypeInfo>> types_;
};

// [0, 1, 2] or [[...], ...]
std::string to_string(const ValueTree& t);

}  // namespace kbu
