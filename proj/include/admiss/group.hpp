#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "admiss/error.hpp"

namespace admiss {

using Element = std::uint32_t;

// Hard ceiling imposed by the 16-bit table storage.
inline constexpr std::size_t kMaxRepresentableOrder = 65536;
inline constexpr std::size_t kDefaultOrderCap = 4096;

enum class AssociativityCheck {
  automatic,   // exhaustive up to order 256, Light's test above
  exhaustive,  // all triples
  light,       // Light's test against a generating set
};

struct GroupOptions {
  std::size_t max_order = kDefaultOrderCap;
  AssociativityCheck associativity = AssociativityCheck::automatic;
};

/// A finite group stored as a complete multiplication table.
///
/// Values are immutable after construction. Construction verifies the Latin
/// square property, the identity, two-sided inverses and associativity.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  static FiniteGroup from_table(std::size_t order, std::span<const Element> table,
                                const GroupOptions& options = {},
                                std::vector<std::string> labels = {},
                                std::vector<Element> generator_hints = {});

  // Builds the table by calling `product(a, b)` for every pair.
  static FiniteGroup from_product(std::size_t order,
                                  const std::function<Element(Element, Element)>& product,
                                  const GroupOptions& options = {},
                                  std::vector<std::string> labels = {},
                                  std::vector<Element> generator_hints = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, std::int64_t e) const noexcept;
  // u^-1 v^-1 u v
  Element commutator(Element u, Element v) const noexcept {
    return mul(mul(inv(u), inv(v)), mul(u, v));
  }
  // v^-1 u v
  Element conjugate(Element u, Element v) const noexcept { return mul(mul(inv(v), u), v); }

  std::size_t element_order(Element a) const noexcept { return orders_[a]; }
  const std::vector<std::uint32_t>& element_orders() const noexcept { return orders_; }

  std::string label(Element a) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Element>& generator_hints() const noexcept { return generator_hints_; }

  // A generating set: the hints when they generate, otherwise a greedy set.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  bool is_abelian() const noexcept;

 private:
  void finish(const GroupOptions& options);

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::string> labels_;
  std::vector<Element> generator_hints_;
  std::vector<Element> generators_;
};

/// A subgroup of a fixed parent group, stored as a sorted member list plus a
/// membership mask indexed by parent elements.
class Subgroup {
 public:
  Subgroup() = default;

  // Validates closure, identity and inverses against `parent`.
  static Subgroup from_members(const FiniteGroup& parent, std::vector<Element> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Element e) const noexcept { return e < mask_.size() && mask_[e]; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t parent_order() const noexcept { return mask_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.members_ < b.members_;
  }

 private:
  friend Subgroup make_subgroup_unchecked(std::size_t parent_order, std::vector<Element> members);

  std::vector<Element> members_;
  std::vector<bool> mask_;
};

// For internal use when closure is already guaranteed.
Subgroup make_subgroup_unchecked(std::size_t parent_order, std::vector<Element> members);

}  // namespace admiss
