#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "admiss/group.hpp"

namespace admiss {

/// Parameters of the metacyclic group <x, y | x^m = y^i, y^n = 1, x^-1 y x = y^t>.
struct MetacyclicParams {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t i = 0;  // residue mod n
  std::uint64_t t = 1;  // unit mod n

  friend auto operator<=>(const MetacyclicParams&, const MetacyclicParams&) = default;
};

// Reduces i and t modulo n and checks t^m = 1, i(t-1) = 0 (mod n), gcd(t,n) = 1.
// Throws InputError naming the failing congruence.
MetacyclicParams normalized(MetacyclicParams params);
std::string to_string(const MetacyclicParams& params);

/// Data for a central extension of (Z/p)^rank by a finite abelian group Z.
///
/// Elements are written x_1^{v_1} ... x_r^{v_r} z with 0 <= v_k < p. The
/// commutators [x_j, x_i] (j > i) and the powers x_k^p are central and given
/// as exponent vectors over the cyclic factors of Z.
struct CentralExtensionSpec {
  struct Commutator {
    std::size_t j = 0;
    std::size_t i = 0;
    std::vector<std::int64_t> value;
  };

  std::uint32_t p = 2;
  std::size_t rank = 0;
  std::vector<std::uint32_t> center;  // cyclic invariants of Z
  std::vector<Commutator> commutators;
  std::vector<std::vector<std::int64_t>> powers;  // per base generator; empty = trivial
  std::vector<std::string> generator_names;
  std::vector<std::string> center_names;
};

FiniteGroup cyclic_group(std::uint64_t n, const GroupOptions& options = {});
// Direct product of cyclic groups Z/n_1 x ... x Z/n_k (mixed radix, first
// coordinate least significant).
FiniteGroup abelian_group(const std::vector<std::uint64_t>& invariants, const GroupOptions& options = {});
FiniteGroup symmetric_group(unsigned degree, const GroupOptions& options = {});
FiniteGroup build_metacyclic(MetacyclicParams params, const GroupOptions& options = {});
FiniteGroup build_central_extension(const CentralExtensionSpec& spec, const GroupOptions& options = {});

// Action of H on N as a permutation of N's elements for each listed element of H.
struct ActionGenerator {
  Element acting;
  std::vector<Element> permutation;
};

/// N x| H with product (n1, h1)(n2, h2) = (n1 * phi_{h1}(n2), h1 h2). The listed
/// elements must generate H and extend to a homomorphism H -> Aut(N).
/// Element (n, h) has index h * |N| + n.
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<ActionGenerator>& action,
                               const GroupOptions& options = {});
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& options = {});

// Linear action on (Z/p)^k given by one k x k matrix (row-major) per generator
// of `acting`; `normal` must be abelian_group({p,...,p}).
std::vector<ActionGenerator> linear_action(std::uint32_t p, std::size_t k, const FiniteGroup& acting,
                                           const std::vector<Element>& acting_gens,
                                           const std::vector<std::vector<std::int64_t>>& matrices);

CentralExtensionSpec heisenberg_spec(std::uint32_t p);
FiniteGroup heisenberg_group(std::uint32_t p, const GroupOptions& options = {});
// (Z/p)^p x| Z/p, the generator cycling the coordinates.
FiniteGroup wreath_fp_cp(std::uint32_t p, const GroupOptions& options = {});
// (Z/p)^k x| Z/k with the cyclic coordinate shift.
FiniteGroup coordinate_shift_product(std::uint32_t p, std::size_t k, const GroupOptions& options = {});
// (Z/p)^3 x| (Z/p)^3 with e1 -> (a,b,c) -> (a+b,b,c), e2 -> (a+c,b,c), e3 -> id,
// an abelian image inside the unitriangular group.
FiniteGroup heisenberg_action_product(std::uint32_t p, const GroupOptions& options = {});

// The group of order 2^10: generators a, b, c with [b,a] = gamma, [c,a] = beta,
// [c,b] = alpha central of order 2, a^2 = alpha and b^2, c^2 central of order 4.
CentralExtensionSpec order_1024_spec();
FiniteGroup order_1024_group(const GroupOptions& options = {});

}  // namespace admiss
