#include "kbu/model.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "kbu/error.hpp"

namespace kbu {

namespace {

// a^b, or nullopt past 2^64
std::optional<std::uint64_t> checked_pow(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > UINT64_MAX / a) return std::nullopt;
    r *= a;
  }
  return r;
}

std::atomic<std::uint64_t> next_model_serial{1};

}  // namespace

// Per-type tables. For an arrow type d→c the relation is kept in product form:
//   a ⊴ b  iff  b ⊴ b  and  a(u) ∈ allowed(b, u) for every u,
//   allowed(b, u) = { z : z ⊴ b(v) for every v with u ⊴ v },
// which is the recursive clause with its two conjuncts separated.
struct FiniteModel::TypeInfo {
  FinType type;
  bool base = false;
  bool too_large = false;
  std::uint64_t card = 0;
  std::string card_text;

  TypeInfo* dom = nullptr;
  TypeInfo* cod = nullptr;
  std::vector<std::uint64_t> place;  // place[i] = |cod|^(|dom|-1-i)

  std::once_flag index_once;
  std::atomic<bool> indexed{false};
  std::size_t words = 0;             // 64-bit words per subset of cod
  std::vector<std::uint8_t> self;    // self[b] iff b ⊴ b
  std::vector<std::uint64_t> allowed;  // [(b * |dom| + u) * words + w]

  std::once_flag pairs_once;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::once_flag element_pairs_once;
  std::vector<std::pair<Element, Element>> element_pairs;
  std::once_flag selfmaj_once;
  std::vector<Element> selfmaj;

  // above[i] = bitset over selfmaj positions j with selfmaj[i] ⊴ selfmaj[j]
  std::once_flag above_once;
  std::size_t above_words = 0;
  std::vector<std::uint64_t> above;
  std::vector<std::int64_t> selfmaj_pos;  // element index → position in selfmaj, or -1

  std::uint64_t digit(std::uint64_t f, std::uint64_t u) const { return (f / place[u]) % cod->card; }
};

FiniteModel::FiniteModel(ModelSpec spec)
    : serial_(next_model_serial.fetch_add(1)), spec_(std::move(spec)) {
  const FinType zero = FinType::base();
  for (std::uint64_t n = 0; n <= spec_.base_size; ++n)
    constants_.emplace(std::to_string(n), Element{zero, n});

  const FinType unary = FinType::arrow(zero, zero);
  const FinType binary = FinType::arrow(zero, unary);
  const std::uint64_t top = spec_.base_size;
  if (within_cap(unary)) {
    std::vector<Element> succ;
    for (std::uint64_t n = 0; n <= top; ++n) succ.push_back({zero, std::min(n + 1, top)});
    constants_.emplace("succ", from_table(unary, succ));
  }
  if (within_cap(binary)) {
    std::vector<Element> rows;
    for (std::uint64_t a = 0; a <= top; ++a) {
      std::vector<Element> row;
      for (std::uint64_t b = 0; b <= top; ++b) row.push_back({zero, std::max(a, b)});
      rows.push_back(from_table(unary, row));
    }
    constants_.emplace("max", from_table(binary, rows));
  }

  for (const auto& [name, c] : spec_.constants) {
    if (constants_.contains(name)) throw ModelError("constant " + name + " is built in");
    constants_.emplace(name, from_tree(c.type, c.value));
  }
  for (const auto& [name, p] : spec_.predicates) {
    std::uint64_t size = 1;
    for (auto t : p.argtypes) size *= cardinality(t);
    if (p.table.size() != size)
      throw ModelError("predicate " + name + ": table has " + std::to_string(p.table.size()) +
                       " entries, expected " + std::to_string(size));
  }
}

FiniteModel::~FiniteModel() = default;

FiniteModel::TypeInfo& FiniteModel::info(FinType ty) const {
  // single-entry lookaside per thread; keyed by model serial so a reused
  // address never hits a stale entry
  struct Last {
    std::uint64_t serial = 0;
    FinType type;
    TypeInfo* info = nullptr;
  };
  thread_local Last last;
  if (last.serial == serial_ && last.type == ty) return *last.info;
  std::lock_guard lock(mutex_);
  auto& ti = info_locked(ty);
  last = {serial_, ty, &ti};
  return ti;
}

FiniteModel::TypeInfo& FiniteModel::info_locked(FinType ty) const {
  if (auto it = types_.find(ty); it != types_.end()) return *it->second;
  auto ti = std::make_unique<TypeInfo>();
  ti->type = ty;
  ti->base = ty.is_base();
  if (ti->base) {
    ti->card = spec_.base_size + 1;
    ti->card_text = std::to_string(ti->card);
  } else {
    ti->dom = &info_locked(ty.domain());
    ti->cod = &info_locked(ty.codomain());
    std::optional<std::uint64_t> card;
    if (!ti->dom->too_large && !ti->cod->too_large) card = checked_pow(ti->cod->card, ti->dom->card);
    if (card) {
      ti->card = *card;
      ti->card_text = std::to_string(*card);
    } else {
      ti->too_large = true;
      ti->card_text = ti->cod->card_text + "^" + ti->dom->card_text;
    }
    if (!ti->too_large && ti->card <= spec_.size_cap) {
      ti->place.resize(ti->dom->card);
      std::uint64_t p = 1;
      for (std::uint64_t i = ti->dom->card; i-- > 0;) {
        ti->place[i] = p;
        p *= ti->cod->card;
      }
    }
  }
  if (!ti->too_large && ti->card > spec_.size_cap) ti->too_large = true;
  auto& ref = *ti;
  types_.emplace(ty, std::move(ti));
  return ref;
}

std::uint64_t FiniteModel::cardinality(FinType ty) const {
  auto& ti = info(ty);
  if (ti.too_large) throw DomainTooLarge(ty.pretty(), ti.card_text);
  return ti.card;
}

bool FiniteModel::within_cap(FinType ty) const { return !info(ty).too_large; }

std::vector<Element> FiniteModel::domain(FinType ty) const {
  const auto n = cardinality(ty);
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Element{ty, i});
  return out;
}

Element FiniteModel::apply(const Element& f, const Element& a) const {
  if (f.type.is_base() || f.type.domain() != a.type) throw ModelError("ill-typed application");
  auto& ti = info(f.type);
  if (ti.too_large) throw DomainTooLarge(f.type.pretty(), ti.card_text);
  return Element{f.type.codomain(), ti.digit(f.index, a.index)};
}

std::vector<Element> FiniteModel::table(const Element& f) const {
  auto& ti = info(f.type);
  if (ti.too_large) throw DomainTooLarge(f.type.pretty(), ti.card_text);
  std::vector<Element> out;
  for (std::uint64_t u = 0; u < ti.dom->card; ++u)
    out.push_back(Element{f.type.codomain(), ti.digit(f.index, u)});
  return out;
}

Element FiniteModel::from_table(FinType ty, std::span<const Element> values) const {
  auto& ti = info(ty);
  if (ti.too_large) throw DomainTooLarge(ty.pretty(), ti.card_text);
  if (ty.is_base() || values.size() != ti.dom->card)
    throw ModelError("table for " + ty.pretty() + " has the wrong number of entries");
  std::uint64_t index = 0;
  for (std::size_t u = 0; u < values.size(); ++u) {
    if (values[u].type != ty.codomain() || values[u].index >= ti.cod->card)
      throw ModelError("table entry outside " + ty.codomain().pretty());
    index += values[u].index * ti.place[u];
  }
  return Element{ty, index};
}

void FiniteModel::build_index(TypeInfo& ti) const {
  std::call_once(ti.index_once, [&] {
    if (ti.base) return;
    TypeInfo& d = *ti.dom;
    TypeInfo& c = *ti.cod;
    const std::uint64_t nd = d.card, nc = c.card;
    const std::size_t words = (nc + 63) / 64;
    // below[z] = { z' : z' ⊴ z } at the codomain
    std::vector<std::uint64_t> below(nc * words, 0);
    for (std::uint64_t z = 0; z < nc; ++z)
      for (std::uint64_t w = 0; w < nc; ++w)
        if (maj(c, w, z)) below[z * words + w / 64] |= std::uint64_t{1} << (w % 64);
    // up[u] = { v : u ⊴ v } at the domain
    std::vector<std::vector<std::uint64_t>> up(nd);
    for (std::uint64_t u = 0; u < nd; ++u)
      for (std::uint64_t v = 0; v < nd; ++v)
        if (maj(d, u, v)) up[u].push_back(v);

    ti.words = words;
    ti.self.assign(ti.card, 0);
    ti.allowed.assign(ti.card * nd * words, 0);
    std::vector<std::uint64_t> digits(nd);
    for (std::uint64_t b = 0; b < ti.card; ++b) {
      for (std::uint64_t u = 0; u < nd; ++u) digits[u] = ti.digit(b, u);
      bool self = true;
      for (std::uint64_t u = 0; u < nd; ++u) {
        std::uint64_t* mask = &ti.allowed[(b * nd + u) * words];
        std::fill(mask, mask + words, ~std::uint64_t{0});
        for (auto v : up[u]) {
          const std::uint64_t* bv = &below[digits[v] * words];
          for (std::size_t w = 0; w < words; ++w) mask[w] &= bv[w];
        }
        if (!((mask[digits[u] / 64] >> (digits[u] % 64)) & 1)) self = false;
      }
      ti.self[b] = self;
    }
    ti.indexed.store(true, std::memory_order_release);
  });
}

bool FiniteModel::maj(TypeInfo& ti, std::uint64_t a, std::uint64_t b) const {
  if (ti.base) return a <= b;
  if (!ti.indexed.load(std::memory_order_acquire)) build_index(ti);
  if (!ti.self[b]) return false;
  const std::uint64_t nd = ti.dom->card;
  const std::uint64_t* row = &ti.allowed[b * nd * ti.words];
  for (std::uint64_t u = 0; u < nd; ++u) {
    const auto z = ti.digit(a, u);
    if (!((row[u * ti.words + z / 64] >> (z % 64)) & 1)) return false;
  }
  return true;
}

const std::vector<std::pair<std::uint64_t, std::uint64_t>>& FiniteModel::pairs(TypeInfo& ti) const {
  std::call_once(ti.pairs_once, [&] {
    if (ti.too_large) throw DomainTooLarge(ti.type.pretty(), ti.card_text);
    if (ti.base) {
      for (std::uint64_t u = 0; u < ti.card; ++u)
        for (std::uint64_t v = u; v < ti.card; ++v) ti.pairs.emplace_back(u, v);
      return;
    }
    for (std::uint64_t b = 0; b < ti.card; ++b)
      for (const auto& a : majorized_by(Element{ti.type, b})) ti.pairs.emplace_back(a.index, b);
    std::ranges::sort(ti.pairs);
  });
  return ti.pairs;
}

bool FiniteModel::majorizes(const Element& a, const Element& b) const {
  if (a.type != b.type) throw ModelError("majorizes: elements of different types");
  auto& ti = info(a.type);
  if (ti.too_large) throw DomainTooLarge(a.type.pretty(), ti.card_text);
  if (a.index >= ti.card || b.index >= ti.card) throw ModelError("element outside its domain");
  return maj(ti, a.index, b.index);
}

std::vector<Element> FiniteModel::majorized_by(const Element& b) const {
  auto& ti = info(b.type);
  if (ti.too_large) throw DomainTooLarge(b.type.pretty(), ti.card_text);
  if (b.index >= ti.card) throw ModelError("element outside its domain");
  std::vector<Element> out;
  if (ti.base) {
    for (std::uint64_t a = 0; a <= b.index; ++a) out.push_back(Element{b.type, a});
    return out;
  }
  build_index(ti);
  if (!ti.self[b.index]) return out;
  // product of allowed(b, u), first coordinate most significant
  const std::uint64_t nd = ti.dom->card, nc = ti.cod->card;
  std::vector<std::vector<std::uint64_t>> choice(nd);
  for (std::uint64_t u = 0; u < nd; ++u) {
    const std::uint64_t* mask = &ti.allowed[(b.index * nd + u) * ti.words];
    for (std::uint64_t z = 0; z < nc; ++z)
      if ((mask[z / 64] >> (z % 64)) & 1) choice[u].push_back(z * ti.place[u]);
    if (choice[u].empty()) return out;
  }
  std::vector<std::size_t> at(nd, 0);
  while (true) {
    std::uint64_t a = 0;
    for (std::uint64_t u = 0; u < nd; ++u) a += choice[u][at[u]];
    out.push_back(Element{b.type, a});
    std::uint64_t u = nd;
    while (u > 0 && ++at[u - 1] == choice[u - 1].size()) at[--u] = 0;
    if (u == 0) return out;
  }
}

const std::vector<Element>& FiniteModel::self_majorizing(FinType ty) const {
  auto& ti = info(ty);
  if (ti.too_large) throw DomainTooLarge(ty.pretty(), ti.card_text);
  std::call_once(ti.selfmaj_once, [&] {
    for (std::uint64_t i = 0; i < ti.card; ++i)
      if (maj(ti, i, i)) ti.selfmaj.push_back(Element{ty, i});
  });
  return ti.selfmaj;
}

const std::vector<std::pair<Element, Element>>& FiniteModel::majorizing_pairs(FinType ty) const {
  auto& ti = info(ty);
  if (ti.too_large) throw DomainTooLarge(ty.pretty(), ti.card_text);
  std::call_once(ti.element_pairs_once, [&] {
    for (const auto& [u, v] : pairs(ti)) ti.element_pairs.emplace_back(Element{ty, u}, Element{ty, v});
  });
  return ti.element_pairs;
}

std::optional<Element> FiniteModel::find_upper_bound(FinType ty, std::span<const Element> es) const {
  const auto& sm = self_majorizing(ty);
  auto& ti = info(ty);
  for (const auto& e : es)
    if (e.type != ty || e.index >= ti.card) throw ModelError("find_upper_bound: element outside " + ty.pretty());
  std::call_once(ti.above_once, [&] {
    const std::size_t n = sm.size(), words = (n + 63) / 64;
    ti.above_words = words;
    ti.above.assign(n * words, 0);
    ti.selfmaj_pos.assign(ti.card, -1);
    for (std::size_t i = 0; i < n; ++i) ti.selfmaj_pos[sm[i].index] = static_cast<std::int64_t>(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (maj(ti, sm[i].index, sm[j].index)) ti.above[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
  });
  // candidates in enumeration order, narrowed by each bounded element
  const std::size_t words = ti.above_words;
  std::vector<std::uint64_t> live(words, ~std::uint64_t{0});
  if (sm.size() % 64) live.back() = (std::uint64_t{1} << (sm.size() % 64)) - 1;
  for (const auto& e : es) {
    if (auto pos = ti.selfmaj_pos[e.index]; pos >= 0) {
      const std::uint64_t* row = &ti.above[static_cast<std::size_t>(pos) * words];
      for (std::size_t w = 0; w < words; ++w) live[w] &= row[w];
    } else {
      for (std::size_t j = 0; j < sm.size(); ++j)
        if (!maj(ti, e.index, sm[j].index)) live[j / 64] &= ~(std::uint64_t{1} << (j % 64));
    }
  }
  for (std::size_t w = 0; w < words; ++w)
    if (live[w]) return sm[w * 64 + static_cast<std::size_t>(std::countr_zero(live[w]))];
  return std::nullopt;
}

std::optional<Element> FiniteModel::constant(const std::string& name) const {
  if (auto it = constants_.find(name); it != constants_.end()) return it->second;
  return std::nullopt;
}

std::map<std::string, FinType> FiniteModel::constant_signature() const {
  std::map<std::string, FinType> out;
  for (const auto& [name, e] : constants_) out.emplace(name, e.type);
  return out;
}

bool FiniteModel::predicate(const std::string& name, std::span<const Element> args) const {
  auto it = spec_.predicates.find(name);
  if (it == spec_.predicates.end()) throw ModelError("no table for predicate " + name);
  const auto& p = it->second;
  if (p.argtypes.size() != args.size()) throw ModelError("predicate " + name + ": wrong arity");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type != p.argtypes[i])
      throw ModelError("predicate " + name + ": argument " + std::to_string(i + 1) + " has type " +
                       args[i].type.pretty() + ", table expects " + p.argtypes[i].pretty());
    index = index * cardinality(p.argtypes[i]) + args[i].index;
  }
  return p.table[index];
}

ValueTree FiniteModel::to_tree(const Element& e) const {
  if (e.type.is_base()) return ValueTree{e.index};
  std::vector<ValueTree> entries;
  for (const auto& v : table(e)) entries.push_back(to_tree(v));
  return ValueTree{std::move(entries)};
}

Element FiniteModel::from_tree(FinType ty, const ValueTree& tree) const {
  if (ty.is_base()) {
    const auto* n = std::get_if<std::uint64_t>(&tree.value);
    if (!n || *n > spec_.base_size)
      throw ModelError("expected a number in [0, " + std::to_string(spec_.base_size) + "]");
    return Element{ty, *n};
  }
  const auto* entries = std::get_if<std::vector<ValueTree>>(&tree.value);
  if (!entries) throw ModelError("expected a table for type " + ty.pretty());
  std::vector<Element> values;
  for (const auto& t : *entries) values.push_back(from_tree(ty.codomain(), t));
  return from_table(ty, values);
}

std::string to_string(const ValueTree& t) {
  if (const auto* n = std::get_if<std::uint64_t>(&t.value)) return std::to_string(*n);
  std::string out = "[";
  const auto& entries = std::get<std::vector<ValueTree>>(t.value);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += to_string(entries[i]);
  }
  return out + "]";
}

}  // namespace kbu
