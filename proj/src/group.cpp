#include "admiss/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace admiss {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;

// Closure of `seeds` under right multiplication by `gens`; `mask` is updated.
void grow_closure(const std::vector<std::uint16_t>& table, std::size_t n,
                  const std::vector<Element>& gens, std::vector<Element>& members,
                  std::vector<bool>& mask) {
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    Element x = members[idx];
    for (Element g : gens) {
      Element y = table[static_cast<std::size_t>(x) * n + g];
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
}

// Re-scan all members with the full generator list (needed after adding a generator).
std::size_t closure_size(const std::vector<std::uint16_t>& table, std::size_t n, Element identity,
                         const std::vector<Element>& gens, std::vector<bool>& mask) {
  mask.assign(n, false);
  std::vector<Element> members{identity};
  mask[identity] = true;
  grow_closure(table, n, gens, members, mask);
  return members.size();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::size_t order, std::span<const Element> table,
                                    const GroupOptions& options, std::vector<std::string> labels,
                                    std::vector<Element> generator_hints) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > options.max_order)
    throw InputError("group order " + std::to_string(order) + " exceeds cap " +
                     std::to_string(options.max_order));
  if (order > kMaxRepresentableOrder)
    throw InputError("group order " + std::to_string(order) + " exceeds representable maximum " +
                     std::to_string(kMaxRepresentableOrder));
  if (table.size() != order * order) throw InputError("table size does not match order");
  FiniteGroup g;
  g.order_ = order;
  g.table_.resize(order * order);
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] >= order) throw InputError("table entry out of range");
    g.table_[k] = static_cast<std::uint16_t>(table[k]);
  }
  g.labels_ = std::move(labels);
  g.generator_hints_ = std::move(generator_hints);
  g.finish(options);
  return g;
}

FiniteGroup FiniteGroup::from_product(std::size_t order,
                                      const std::function<Element(Element, Element)>& product,
                                      const GroupOptions& options, std::vector<std::string> labels,
                                      std::vector<Element> generator_hints) {
  if (order == 0) throw InputError("group order must be positive");
  if (order > options.max_order)
    throw InputError("group order " + std::to_string(order) + " exceeds cap " +
                     std::to_string(options.max_order));
  if (order > kMaxRepresentableOrder)
    throw InputError("group order " + std::to_string(order) + " exceeds representable maximum " +
                     std::to_string(kMaxRepresentableOrder));
  FiniteGroup g;
  g.order_ = order;
  g.table_.resize(order * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      Element c = product(a, b);
      if (c >= order) throw InputError("product out of range");
      g.table_[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(c);
    }
  }
  g.labels_ = std::move(labels);
  g.generator_hints_ = std::move(generator_hints);
  g.finish(options);
  return g;
}

void FiniteGroup::finish(const GroupOptions& options) {
  const std::size_t n = order_;
  if (!labels_.empty() && labels_.size() != n) throw InputError("label count does not match order");
  for (Element h : generator_hints_)
    if (h >= n) throw InputError("generator hint out of range");

  // Latin square.
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t r = 0; r < n; ++r) {
    ++stamp;
    for (std::size_t c = 0; c < n; ++c) {
      auto v = table_[r * n + c];
      if (seen[v] == stamp) throw InputError("table is not a Latin square (row " + std::to_string(r) + ")");
      seen[v] = stamp;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    ++stamp;
    for (std::size_t r = 0; r < n; ++r) {
      auto v = table_[r * n + c];
      if (seen[v] == stamp)
        throw InputError("table is not a Latin square (column " + std::to_string(c) + ")");
      seen[v] = stamp;
    }
  }

  // Identity: the unique row acting trivially.
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = table_[e * n + x] == x && table_[x * n + e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("table has no two-sided identity");

  inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    Element b = 0;
    while (table_[a * n + b] != identity_) ++b;
    if (table_[b * n + a] != identity_) throw InputError("element has no two-sided inverse");
    inverse_[a] = b;
  }

  // Generating set: hints first, then greedy additions in index order.
  std::vector<bool> mask;
  generators_ = generator_hints_;
  std::size_t reached = closure_size(table_, n, identity_, generators_, mask);
  for (Element e = 0; e < n && reached < n; ++e) {
    if (mask[e]) continue;
    generators_.push_back(e);
    reached = closure_size(table_, n, identity_, generators_, mask);
  }

  AssociativityCheck mode = options.associativity;
  if (mode == AssociativityCheck::automatic)
    mode = n <= kExhaustiveAssociativityLimit ? AssociativityCheck::exhaustive
                                              : AssociativityCheck::light;
  if (mode == AssociativityCheck::exhaustive) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]])
            throw InputError("associativity fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
      }
  } else {
    // Light's test: the associative elements form a submagma, so checking a
    // generating set suffices.
    for (Element g : generators_) {
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t xg = table_[x * n + g];
        const std::uint16_t* row_x = &table_[x * n];
        const std::uint16_t* row_xg = &table_[xg * n];
        const std::uint16_t* row_g = &table_[static_cast<std::size_t>(g) * n];
        for (std::size_t y = 0; y < n; ++y)
          if (row_xg[y] != row_x[row_g[y]])
            throw InputError("associativity fails for generator " + std::to_string(g));
      }
    }
  }

  orders_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = a;
    while (x != identity_) {
      x = table_[static_cast<std::size_t>(x) * n + a];
      ++k;
    }
    orders_[a] = k;
  }
}

Element FiniteGroup::pow(Element a, std::int64_t e) const noexcept {
  const std::int64_t ord = orders_[a];
  std::int64_t k = e % ord;
  if (k < 0) k += ord;
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::string FiniteGroup::label(Element a) const {
  if (a < labels_.size()) return labels_[a];
  return "e" + std::to_string(a);
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element g : generators_)
    for (Element h : generators_)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

Subgroup make_subgroup_unchecked(std::size_t parent_order, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.mask_.assign(parent_order, false);
  for (Element e : members) s.mask_[e] = true;
  s.members_ = std::move(members);
  return s;
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<Element> members) {
  for (Element e : members)
    if (e >= parent.order()) throw InputError("subgroup member out of range");
  Subgroup s = make_subgroup_unchecked(parent.order(), std::move(members));
  if (!s.contains(parent.identity())) throw InputError("subgroup does not contain the identity");
  for (Element a : s.members_) {
    if (!s.contains(parent.inv(a))) throw InputError("subgroup not closed under inverses");
    for (Element b : s.members_)
      if (!s.contains(parent.mul(a, b))) throw InputError("subgroup not closed under products");
  }
  return s;
}

}  // namespace admiss
