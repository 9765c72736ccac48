#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admiss/group.hpp"
#include "admiss/group_builders.hpp"

namespace admiss {

/// An abelian number field: the fixed field of H inside Q(mu_conductor),
/// with H a subgroup of (Z/conductor)^x stored as its sorted member list.
///
/// The conductor need not be minimal; every computation below is
/// insensitive to that.
class AbelianFieldSpec {
 public:
  static AbelianFieldSpec rationals();
  static AbelianFieldSpec cyclotomic(std::uint64_t m);
  static AbelianFieldSpec gaussian();
  // Q(sqrt d) for squarefree d != 0, 1, via the kernel of the Kronecker character.
  static AbelianFieldSpec quadratic(std::int64_t d);
  // Fixed field of the subgroup generated by `generators` (units mod conductor).
  static AbelianFieldSpec from_generators(std::uint64_t conductor, const std::vector<std::uint64_t>& generators,
                                          std::string name = {});
  static AbelianFieldSpec compositum(const AbelianFieldSpec& a, const AbelianFieldSpec& b);

  std::uint64_t conductor() const noexcept { return conductor_; }
  const std::vector<std::uint64_t>& subgroup() const noexcept { return subgroup_; }
  const std::string& name() const noexcept { return name_; }
  // [K : Q] = phi(conductor) / |H|
  std::uint64_t degree() const;

 private:
  std::uint64_t conductor_ = 1;
  std::vector<std::uint64_t> subgroup_{0};
  std::string name_ = "Q";
};

/// "Q", "rationals", "gaussian", "cyclotomic:m", "quadratic:d",
/// "abelian:f:g1,g2,...", and composita written "A + B".
AbelianFieldSpec parse_abelian_field(std::string_view text);

// Kronecker symbol (d / a) for a >= 1.
int kronecker_symbol(std::int64_t d, std::uint64_t a);

// H_n <= (Z/n)^x with fixed field K cap Q(mu_n): the image mod n of the
// units a mod lcm(f_K, n) whose reduction mod f_K lies in H. Sorted.
std::vector<std::uint64_t> cyclotomic_intersection(const AbelianFieldSpec& k, std::uint64_t n);

struct LiedahlVerdict {
  bool holds = false;
  std::optional<MetacyclicParams> witness;
  std::size_t presentations_scanned = 0;  // all of them when the verdict is false
};

// Throws PreconditionFailed unless G is a metacyclic p-group (or trivial).
LiedahlVerdict liedahl_condition(const FiniteGroup& g, const AbelianFieldSpec& k);

struct TameAdmissibilityVerdict {
  bool holds = false;
  std::optional<std::uint32_t> offending_prime;
  std::string reason;
  std::vector<std::pair<std::uint32_t, LiedahlVerdict>> per_prime;
};

// Conjunction of Liedahl's condition over the Sylow subgroups of a solvable
// G. A non-metacyclic Sylow makes the verdict false with that prime named.
// Solvability is the caller's assertion, not checked.
TameAdmissibilityVerdict tame_admissibility_criterion(const FiniteGroup& g, const AbelianFieldSpec& k);

}  // namespace admiss
