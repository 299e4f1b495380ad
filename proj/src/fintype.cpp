#include "kbu/fintype.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <utility>

namespace kbu {

namespace detail {
struct TypeNode {
  const TypeNode* domain = nullptr;
  const TypeNode* codomain = nullptr;
  int level = 0;
};
}  // namespace detail

namespace {

using detail::TypeNode;

struct TypeTable {
  std::mutex mutex;
  std::deque<TypeNode> nodes;  // stable addresses
  std::map<std::pair<const TypeNode*, const TypeNode*>, const TypeNode*> arrows;
  const TypeNode* base;

  TypeTable() { base = &nodes.emplace_back(); }
};

TypeTable& table() {
  static TypeTable t;
  return t;
}

std::strong_ordering compare(const TypeNode* a, const TypeNode* b) {
  if (a == b) return std::strong_ordering::equal;
  if (a->domain == nullptr) return std::strong_ordering::less;
  if (b->domain == nullptr) return std::strong_ordering::greater;
  if (auto c = compare(a->domain, b->domain); c != 0) return c;
  return compare(a->codomain, b->codomain);
}

}  // namespace

FinType::FinType() : node_(table().base) {}

FinType FinType::arrow(FinType domain, FinType codomain) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto key = std::make_pair(domain.node_, codomain.node_);
  if (auto it = t.arrows.find(key); it != t.arrows.end()) return FinType(it->second);
  auto& node = t.nodes.emplace_back();
  node.domain = domain.node_;
  node.codomain = codomain.node_;
  node.level = std::max(domain.node_->level + 1, codomain.node_->level);
  t.arrows.emplace(key, &node);
  return FinType(&node);
}

FinType FinType::curried(std::span<const FinType> args, FinType result) {
  for (auto it = args.rbegin(); it != args.rend(); ++it) result = arrow(*it, result);
  return result;
}

bool FinType::is_base() const { return node_->domain == nullptr; }

FinType FinType::domain() const { return FinType(node_->domain); }

FinType FinType::codomain() const { return FinType(node_->codomain); }

int FinType::level() const { return node_->level; }

std::string FinType::sexpr() const {
  if (is_base()) return "0";
  return "(-> " + domain().sexpr() + " " + codomain().sexpr() + ")";
}

std::string FinType::pretty() const {
  if (is_base()) return "0";
  auto d = domain().pretty();
  if (domain().is_arrow()) d = "(" + d + ")";
  return d + "→" + codomain().pretty();
}

std::strong_ordering operator<=>(FinType a, FinType b) { return compare(a.node_, b.node_); }

}  // namespace kbu
