#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "admiss/group.hpp"

namespace admiss {

// Subgroup generated by `gens`.
Subgroup closure(const FiniteGroup& g, std::span<const Element> gens);
// Smallest normal subgroup containing `elems`.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> elems);

bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

// The prime p when |G| = p^k with k >= 1; nullopt for the trivial group and
// for groups whose order has two distinct prime factors.
std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, std::uint32_t p);

// G^p [G,G]; requires a p-group (throws PreconditionFailed otherwise).
Subgroup frattini_subgroup(const FiniteGroup& g);
// Rank of G / Phi(G); requires a p-group. The trivial group has rank 0.
std::size_t minimal_generator_count(const FiniteGroup& g);

// Quotient by a normal subgroup; element k of the result is the k-th coset in
// order of first appearance. `coset_of`, when given, receives the projection.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, std::vector<Element>* coset_of = nullptr,
                     const GroupOptions& options = {});

// The subgroup as a group in its own right; element k is members()[k].
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const GroupOptions& options = {});

std::uint64_t exponent(const FiniteGroup& g);

// Invariant factors in primary form (sorted prime powers) of an abelian group.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);
std::vector<std::uint64_t> abelianization_invariants(const FiniteGroup& g);

// Sylow p-subgroup; the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p);

// Basis-like helpers for the Frattini quotient of a p-group.
struct FrattiniCoordinates {
  std::uint32_t p = 0;
  std::size_t rank = 0;
  // Coordinates packed as an integer in base p, one per element.
  std::vector<std::uint32_t> coords;
  // Elements whose coordinates are the unit vectors.
  std::vector<Element> basis;
};
FrattiniCoordinates frattini_coordinates(const FiniteGroup& g);

// Rank over F_p of a set of packed coordinate vectors.
std::size_t span_rank(std::span<const std::uint32_t> packed, std::uint32_t p, std::size_t dim);

}  // namespace admiss
