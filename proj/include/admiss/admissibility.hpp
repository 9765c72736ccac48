#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "admiss/brauer.hpp"
#include "admiss/group.hpp"
#include "admiss/local_field.hpp"

namespace admiss {

/// The subgroups of a fixed G known to be realizable over the completion at
/// one place. `tame[k]` marks subgroups realizable within the tame part.
struct LocalFact {
  PlaceId place;
  std::vector<Subgroup> realizable_subgroups;
  std::vector<bool> tame;  // empty, or one flag per subgroup
};

/// Two (place, subgroup) choices for one prime dividing |G|.
struct PrimeAssignment {
  std::uint32_t prime = 0;
  std::array<PlaceId, 2> places;
  std::array<Subgroup, 2> subgroups;
};

struct AdmissibilityCertificate {
  std::vector<PrimeAssignment> assignments;  // one per prime, increasing

  std::string to_string() const;
};

// A subgroup H contains a p-Sylow of G (up to conjugacy) exactly when |G|_p
// divides |H|.
bool contains_sylow(const FiniteGroup& g, const Subgroup& h, std::uint32_t p);

// TRUE iff every prime of |G| has an assignment whose two places differ and
// whose two subgroups contain a p-Sylow.
bool schacher_check(const FiniteGroup& g, const AdmissibilityCertificate& cert);

enum class Distinctness {
  all_distinct,  // the 2k chosen places are pairwise different
  pairwise,      // only the two places of each prime must differ
};

struct MatchingOptions {
  Distinctness distinctness = Distinctness::all_distinct;
  // Drop edges from a prime p to places of residue characteristic p.
  bool avoid_residue_characteristic = false;
};

// Facts are merged by place label and sorted first, so the outcome does not
// depend on their order. Absence is a result, not an error.
std::optional<AdmissibilityCertificate> preadmissibility_search(const FiniteGroup& g, const std::vector<LocalFact>& facts,
                                                                const MatchingOptions& options = {});

enum class Wildness { non_wild_available, wild, not_preadmissible };
std::string to_string(Wildness w);

struct WildnessVerdict {
  Wildness kind = Wildness::not_preadmissible;
  std::optional<AdmissibilityCertificate> certificate;  // tame one when available
};

// non-wild-available iff a certificate exists avoiding, for every p, places
// of residue characteristic p; wild iff only certificates using them exist.
WildnessVerdict classify_wildness(const FiniteGroup& g, const std::vector<LocalFact>& facts,
                                  Distinctness distinctness = Distinctness::all_distinct);

/// Per-prime data for the transfer theorem, supplied by the caller.
struct PrimeTransferData {
  std::uint32_t prime = 0;
  std::uint32_t divisors_in_m = 1;
  bool sylow_metacyclic = false;
  bool liedahl_over_m = false;
};

struct TransferInput {
  std::uint64_t group_order = 1;
  bool k_admissible = true;
  bool gn_over_m = false;  // hypothesis flag, never computed
  bool sensitive = false;
  std::vector<PrimeTransferData> primes;
};

enum class TransferVerdictKind { m_admissible, not_m_admissible, out_of_theorem };
std::string to_string(TransferVerdictKind k);

struct TransferVerdict {
  TransferVerdictKind kind = TransferVerdictKind::out_of_theorem;
  std::string reason;
  // For an admissible verdict: per prime, "divisors" or "metacyclic".
  std::vector<std::pair<std::uint32_t, std::string>> routes;
};

// Applies the transfer theorem literally. Input that leaves its hypotheses
// (even order, sensitive M/K, missing GN-property, G not K-admissible) gets
// out-of-theorem.
TransferVerdict extension_admissibility_verdict(const TransferInput& input);

}  // namespace admiss
