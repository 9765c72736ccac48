#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "admiss/group.hpp"
#include "admiss/presentation.hpp"

namespace admiss {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

enum class QuotientStrategy {
  automatic,          // cheapest applicable method within budget
  backtracking,       // search over element tuples with Frattini pruning
  central_reduction,  // search over coset tuples modulo a central subgroup
};

/// Limits and parallelism for the search kernels.
///
/// The budget counts candidate tuples: a search whose estimate exceeds it is
/// refused with BudgetExceeded before any work is done. Results do not depend
/// on `workers`.
struct SearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned workers = 1;
  QuotientStrategy strategy = QuotientStrategy::automatic;
};

struct EpimorphismCount {
  std::uint64_t epimorphisms = 0;
  std::uint64_t search_space = 0;  // product of per-generator candidate counts
};

// Number of generator assignments into G that satisfy every relator and
// torsion bound and generate G. Requires abstract-finite mode.
EpimorphismCount count_epimorphisms(const Presentation& pr, const FiniteGroup& g, const SearchOptions& options = {});

struct NormalSubgroupCount {
  std::uint64_t epimorphisms = 0;
  std::uint64_t automorphisms = 0;
  std::uint64_t normal_subgroups = 0;  // epimorphisms / automorphisms
};

NormalSubgroupCount count_normal_subgroups_with_quotient(const Presentation& pr, const FiniteGroup& g,
                                                         const SearchOptions& options = {});

struct QuotientResult {
  bool is_quotient = false;
  std::optional<std::vector<Element>> witness;  // generator images when true
  std::string method;                           // "free-rank", "backtracking" or "central-reduction"
  std::string note;                             // why a method was skipped, if any
  std::uint64_t search_space = 0;               // tuples the chosen method could visit
  std::uint64_t tuples_examined = 0;            // complete tuples tested, lexicographic up to the witness
  std::size_t reduction_subgroup_order = 1;     // |C| for central reduction
};

// Decides whether the p-group G is a quotient of the presentation (pro-p or
// abstract; for finite p-group targets the two agree).
QuotientResult is_prop_quotient(const Presentation& pr, const FiniteGroup& g, const SearchOptions& options = {});

/// The central subgroup C used by the reduction: elements z of Z(G) with
/// z^g = 1, where g is the gcd of all relator exponent sums, that also lie in
/// the Frattini subgroup. Replacing a generator image a by a*z with z in C
/// changes neither relator values nor whether the images generate.
struct CentralReductionPlan {
  std::int64_t exponent_gcd = 0;
  std::vector<Element> subgroup;  // members of C
};

// nullopt with `reason` filled when the reduction does not apply.
std::optional<CentralReductionPlan> central_reduction_plan(const Presentation& pr, const FiniteGroup& g,
                                                           std::string* reason = nullptr);

// Scans every tuple of coset representatives of G/C. Throws
// PreconditionFailed when the reduction does not apply.
QuotientResult central_reduction_quotient_test(const Presentation& pr, const FiniteGroup& g,
                                               const SearchOptions& options = {});

}  // namespace admiss
