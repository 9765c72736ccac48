#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "admiss/group.hpp"

namespace admiss {

/// Cheap isomorphism invariants compared before any backtracking.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> order_profile;  // (element order, count)
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t frattini_order = 0;  // 0 unless G is a p-group
  std::vector<std::uint64_t> abelianization;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& g);

// Extends gens[k] -> images[k] to a homomorphism on <gens>; nullopt when the
// assignment is inconsistent. Entries outside <gens> are left as nullopt.
std::optional<std::vector<std::optional<Element>>> extend_homomorphism(
    const FiniteGroup& source, std::span<const Element> gens, const FiniteGroup& target,
    std::span<const Element> images);

// An isomorphism source -> target as an element map, if one exists. The
// search tries generator images in increasing index order.
std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& source, const FiniteGroup& target);
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

std::uint64_t automorphism_count(const FiniteGroup& g);

}  // namespace admiss
