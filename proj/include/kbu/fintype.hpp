#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace kbu {

namespace detail {
struct TypeNode;
}

// A finite type: the base type 0 or an arrow d -> c.
//
// Types are hash-consed, so a FinType is a cheap handle and equality is
// identity of the interned node. Ordering is structural (0 first, then arrows
// by domain, then codomain) and therefore independent of interning order.
class FinType {
 public:
  FinType();  // the base type

  static FinType base() { return FinType(); }
  static FinType arrow(FinType domain, FinType codomain);
  // args[0] -> args[1] -> ... -> result
  static FinType curried(std::span<const FinType> args, FinType result);

  bool is_base() const;
  bool is_arrow() const { return !is_base(); }
  FinType domain() const;
  FinType codomain() const;
  int level() const;

  // Canonical text syntax: `0` or `(-> d c)`.
  std::string sexpr() const;
  // Infix rendering with right-associated arrows: `0→0`, `(0→0)→0`.
  std::string pretty() const;

  friend bool operator==(FinType a, FinType b) { return a.node_ == b.node_; }
  friend std::strong_ordering operator<=>(FinType a, FinType b);

  std::size_t hash() const { return std::hash<const void*>()(node_); }

 private:
  explicit FinType(const detail::TypeNode* node) : node_(node) {}
  const detail::TypeNode* node_;
};

}  // namespace kbu

template <>
struct std::hash<kbu::FinType> {
  std::size_t operator()(kbu::FinType t) const noexcept { return t.hash(); }
};
