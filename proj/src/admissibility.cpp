#include "admiss/admissibility.hpp"

#include <algorithm>
#include <map>

#include "admiss/error.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

struct Offer {
  PlaceId place;
  std::vector<Subgroup> subgroups;  // sorted, deduplicated
  std::vector<bool> tame;
};

std::vector<Offer> normalize_facts(const FiniteGroup& g, const std::vector<LocalFact>& facts) {
  std::map<std::string, Offer> merged;
  for (const auto& fact : facts) {
    if (!fact.tame.empty() && fact.tame.size() != fact.realizable_subgroups.size())
      throw InputError("place '" + fact.place.label + "': tame flags do not match the subgroup list");
    auto [it, fresh] = merged.try_emplace(fact.place.label, Offer{fact.place, {}, {}});
    if (!fresh && it->second.place.residue_characteristic != fact.place.residue_characteristic)
      throw InputError("place '" + fact.place.label + "' given two residue characteristics");
    for (std::size_t k = 0; k < fact.realizable_subgroups.size(); ++k) {
      const Subgroup& h = fact.realizable_subgroups[k];
      if (h.parent_order() != g.order())
        throw InputError("place '" + fact.place.label + "' lists a subgroup of a different group");
      it->second.subgroups.push_back(h);
      it->second.tame.push_back(!fact.tame.empty() && fact.tame[k]);
    }
  }
  std::vector<Offer> out;
  for (auto& [label, offer] : merged) {
    std::vector<std::size_t> order(offer.subgroups.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (offer.subgroups[a] == offer.subgroups[b]) return offer.tame[a] > offer.tame[b];
      return offer.subgroups[a] < offer.subgroups[b];
    });
    Offer clean{offer.place, {}, {}};
    for (auto k : order) {
      if (!clean.subgroups.empty() && clean.subgroups.back() == offer.subgroups[k]) continue;
      clean.subgroups.push_back(offer.subgroups[k]);
      clean.tame.push_back(offer.tame[k]);
    }
    out.push_back(std::move(clean));
  }
  return out;
}

std::vector<std::uint32_t> primes_of(const FiniteGroup& g) {
  std::vector<std::uint32_t> out;
  for (auto [p, k] : factorize(g.order())) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

// Index of the first subgroup at `offer` containing a p-Sylow, or -1.
int qualifying_subgroup(const FiniteGroup& g, const Offer& offer, std::uint32_t p, const MatchingOptions& options) {
  if (options.avoid_residue_characteristic && offer.place.residue_characteristic == p) return -1;
  for (std::size_t k = 0; k < offer.subgroups.size(); ++k)
    if (contains_sylow(g, offer.subgroups[k], p)) return static_cast<int>(k);
  return -1;
}

// Kuhn's augmenting paths; slots and places are visited in fixed order.
class SlotMatcher {
 public:
  SlotMatcher(const std::vector<std::vector<std::size_t>>& adjacency, std::size_t places)
      : adjacency_(adjacency), owner_(places, kFree) {}

  bool run() {
    for (std::size_t slot = 0; slot < adjacency_.size(); ++slot) {
      std::vector<bool> seen(owner_.size(), false);
      if (!augment(slot, seen)) return false;
    }
    return true;
  }

  std::vector<std::size_t> assignment() const {
    std::vector<std::size_t> out(adjacency_.size());
    for (std::size_t place = 0; place < owner_.size(); ++place)
      if (owner_[place] != kFree) out[owner_[place]] = place;
    return out;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t slot, std::vector<bool>& seen) {
    for (auto place : adjacency_[slot]) {
      if (seen[place]) continue;
      seen[place] = true;
      if (owner_[place] == kFree || augment(owner_[place], seen)) {
        owner_[place] = slot;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::size_t>>& adjacency_;
  std::vector<std::size_t> owner_;
};

}  // namespace

std::string AdmissibilityCertificate::to_string() const {
  std::string out;
  for (const auto& a : assignments) {
    if (!out.empty()) out += "; ";
    out += "p=" + std::to_string(a.prime) + ": " + a.places[0].label + " (order " +
           std::to_string(a.subgroups[0].size()) + "), " + a.places[1].label + " (order " +
           std::to_string(a.subgroups[1].size()) + ")";
  }
  return out.empty() ? "(empty)" : out;
}

bool contains_sylow(const FiniteGroup& g, const Subgroup& h, std::uint32_t p) {
  if (h.parent_order() != g.order()) return false;
  std::uint64_t sylow_order = ipow(p, static_cast<unsigned>(valuation(g.order(), p)));
  return h.size() % sylow_order == 0;
}

bool schacher_check(const FiniteGroup& g, const AdmissibilityCertificate& cert) {
  for (auto p : primes_of(g)) {
    auto it = std::find_if(cert.assignments.begin(), cert.assignments.end(),
                           [&](const PrimeAssignment& a) { return a.prime == p; });
    if (it == cert.assignments.end()) return false;
    if (it->places[0].label == it->places[1].label) return false;
    if (!contains_sylow(g, it->subgroups[0], p) || !contains_sylow(g, it->subgroups[1], p)) return false;
  }
  return true;
}

std::optional<AdmissibilityCertificate> preadmissibility_search(const FiniteGroup& g, const std::vector<LocalFact>& facts,
                                                                const MatchingOptions& options) {
  const auto offers = normalize_facts(g, facts);
  const auto primes = primes_of(g);
  AdmissibilityCertificate cert;
  if (primes.empty()) return cert;

  // choice[i][place] = qualifying subgroup index for primes[i], or -1.
  std::vector<std::vector<int>> choice(primes.size(), std::vector<int>(offers.size(), -1));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t v = 0; v < offers.size(); ++v) choice[i][v] = qualifying_subgroup(g, offers[v], primes[i], options);

  auto make_assignment = [&](std::size_t i, std::size_t v0, std::size_t v1) {
    PrimeAssignment a;
    a.prime = primes[i];
    a.places = {offers[v0].place, offers[v1].place};
    a.subgroups = {offers[v0].subgroups[static_cast<std::size_t>(choice[i][v0])],
                   offers[v1].subgroups[static_cast<std::size_t>(choice[i][v1])]};
    return a;
  };

  if (options.distinctness == Distinctness::pairwise) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      std::vector<std::size_t> hits;
      for (std::size_t v = 0; v < offers.size() && hits.size() < 2; ++v)
        if (choice[i][v] >= 0) hits.push_back(v);
      if (hits.size() < 2) return std::nullopt;
      cert.assignments.push_back(make_assignment(i, hits[0], hits[1]));
    }
    return cert;
  }

  std::vector<std::vector<std::size_t>> adjacency;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::vector<std::size_t> edges;
    for (std::size_t v = 0; v < offers.size(); ++v)
      if (choice[i][v] >= 0) edges.push_back(v);
    adjacency.push_back(edges);
    adjacency.push_back(edges);
  }
  SlotMatcher matcher(adjacency, offers.size());
  if (!matcher.run()) return std::nullopt;
  auto slots = matcher.assignment();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::size_t a = slots[2 * i], b = slots[2 * i + 1];
    if (a > b) std::swap(a, b);
    cert.assignments.push_back(make_assignment(i, a, b));
  }
  return cert;
}

std::string to_string(Wildness w) {
  switch (w) {
    case Wildness::non_wild_available: return "non-wild-available";
    case Wildness::wild: return "wild";
    case Wildness::not_preadmissible: return "not-preadmissible";
  }
  return "?";
}

WildnessVerdict classify_wildness(const FiniteGroup& g, const std::vector<LocalFact>& facts, Distinctness distinctness) {
  WildnessVerdict out;
  MatchingOptions tame{distinctness, true};
  if (auto cert = preadmissibility_search(g, facts, tame)) {
    for (const auto& a : cert->assignments)
      for (const auto& place : a.places)
        if (place.residue_characteristic == a.prime) throw Error("tame certificate uses a place above its prime");
    out.kind = Wildness::non_wild_available;
    out.certificate = std::move(cert);
    return out;
  }
  MatchingOptions any{distinctness, false};
  if (auto cert = preadmissibility_search(g, facts, any)) {
    out.kind = Wildness::wild;
    out.certificate = std::move(cert);
  }
  return out;
}

std::string to_string(TransferVerdictKind k) {
  switch (k) {
    case TransferVerdictKind::m_admissible: return "M-admissible";
    case TransferVerdictKind::not_m_admissible: return "not-M-admissible";
    case TransferVerdictKind::out_of_theorem: return "out-of-theorem";
  }
  return "?";
}

TransferVerdict extension_admissibility_verdict(const TransferInput& input) {
  if (input.group_order == 0) throw InputError("group order must be positive");
  std::vector<std::uint32_t> expected;
  for (auto [p, k] : factorize(input.group_order)) expected.push_back(static_cast<std::uint32_t>(p));
  std::vector<std::uint32_t> given;
  for (const auto& d : input.primes) {
    if (d.divisors_in_m == 0) throw InputError("prime " + std::to_string(d.prime) + " needs at least one divisor in M");
    given.push_back(d.prime);
  }
  std::vector<std::uint32_t> sorted_given = given;
  std::sort(sorted_given.begin(), sorted_given.end());
  if (sorted_given != expected) throw InputError("per-prime data must cover exactly the primes dividing |G|");

  TransferVerdict out;
  if (input.group_order % 2 == 0) {
    out.reason = "G has even order";
    return out;
  }
  if (input.sensitive) {
    out.reason = "M/K is sensitive";
    return out;
  }
  if (!input.gn_over_m) {
    out.reason = "GN-property over M not asserted";
    return out;
  }
  if (!input.k_admissible) {
    out.reason = "G is not asserted K-admissible";
    return out;
  }
  std::vector<PrimeTransferData> data = input.primes;
  std::sort(data.begin(), data.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  for (const auto& d : data) {
    if (d.divisors_in_m > 1) {
      out.routes.emplace_back(d.prime, "divisors");
    } else if (d.sylow_metacyclic && d.liedahl_over_m) {
      out.routes.emplace_back(d.prime, "metacyclic");
    } else {
      out.kind = TransferVerdictKind::not_m_admissible;
      out.routes.clear();
      out.reason = std::to_string(d.prime) + " has a unique divisor in M and G(" + std::to_string(d.prime) + ") is " +
                   (d.sylow_metacyclic ? "metacyclic but fails Liedahl's condition over M" : "not metacyclic");
      return out;
    }
  }
  out.kind = TransferVerdictKind::m_admissible;
  return out;
}

}  // namespace admiss
