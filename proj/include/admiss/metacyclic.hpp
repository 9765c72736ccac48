#pragma once

#include <optional>
#include <vector>

#include "admiss/group.hpp"
#include "admiss/group_builders.hpp"

namespace admiss {

// Every tuple (m, n, i, t) with m*n = |G| such that M(m,n,i,t) is isomorphic
// to G, sorted. Found by scanning pairs (x, y) with <y> normal of order n and
// G/<y> cyclic generated by x<y>.
std::vector<MetacyclicParams> enumerate_metacyclic_presentations(const FiniteGroup& g);

// The least tuple from enumerate_metacyclic_presentations, if any.
std::optional<MetacyclicParams> is_metacyclic(const FiniteGroup& g);

}  // namespace admiss

namespace admiss {

// The exponent s with s(t^2 + 1) = (1 - t)/t^2 (mod n), for odd t and n a
// power of 2. With it, (x^-2 y^s)^2 x^4 [x, y] = 1 in M(m, n, i, t).
std::uint64_t two_group_relation_exponent(const MetacyclicParams& params);

struct RelationSweepReport {
  std::size_t groups_checked = 0;
  std::vector<MetacyclicParams> failures;
};

// How [x, y] is expanded in the relation word. With x^-1 y x = y^t the
// first reading gives [x, y] = y^(t-1), the one the exponent s is built
// for; the second is the library-wide u^-1 v^-1 u v = y^(1-t), for which
// the sweep uses -s instead.
enum class CommutatorReading {
  conjugate_then_inverse,  // x^-1 y x y^-1
  standard,                // x^-1 y^-1 x y
};

// Evaluates (x^-2 y^s)^2 x^4 [x, y] in every consistent M(m, n, i, t) with
// m and n powers of 2 up to `bound`.
RelationSweepReport two_group_relation_sweep(std::uint64_t bound,
                                             CommutatorReading reading = CommutatorReading::conjugate_then_inverse);

}  // namespace admiss
