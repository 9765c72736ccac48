#pragma once

// Brute-force reference implementations used only by the tests.
//
// Each routine here works from definitions with the plainest possible loop,
// touching nothing in the library beyond the multiplication table of a
// FiniteGroup and the shape of a Word tree. They are slow on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "admiss/admissibility.hpp"
#include "admiss/group.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/presentation.hpp"
#include "admiss/word.hpp"

namespace oracle {

using admiss::Element;
using admiss::FiniteGroup;
using admiss::Word;

inline Element power(const FiniteGroup& g, Element a, std::int64_t e) {
  Element base = e < 0 ? g.inv(a) : a;
  std::int64_t k = e < 0 ? -e : e;
  Element out = g.identity();
  for (std::int64_t s = 0; s < k; ++s) out = g.mul(out, base);
  return out;
}

inline std::uint64_t element_order(const FiniteGroup& g, Element a) {
  std::uint64_t k = 1;
  for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++k;
  return k;
}

// Recursive evaluation straight from the tree.
inline Element evaluate(const Word& w, const std::vector<Element>& images, const FiniteGroup& g) {
  switch (w.kind()) {
    case Word::Kind::generator:
      return power(g, images.at(w.generator_index()), w.exponent());
    case Word::Kind::product: {
      Element out = g.identity();
      for (const auto& c : w.children()) out = g.mul(out, evaluate(c, images, g));
      return out;
    }
    case Word::Kind::commutator: {
      Element u = evaluate(w.children()[0], images, g);
      Element v = evaluate(w.children()[1], images, g);
      return g.mul(g.mul(g.inv(u), g.inv(v)), g.mul(u, v));
    }
    case Word::Kind::power:
      return power(g, evaluate(w.children()[0], images, g), w.exponent());
  }
  return g.identity();
}

// Subgroup generated by `gens`, by breadth-first multiplication.
inline std::vector<bool> generated(const FiniteGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Element s : gens) {
      Element x = g.mul(queue[head], s);
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  return seen;
}

inline std::size_t generated_order(const FiniteGroup& g, const std::vector<Element>& gens) {
  auto s = generated(g, gens);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

// Counts tuples in G^k that satisfy every relator and explicit torsion bound
// and generate G.
inline std::uint64_t count_epimorphisms(const admiss::Presentation& pr, const FiniteGroup& g) {
  const std::size_t k = pr.generator_count();
  std::vector<Element> images(k, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; ok && j < pr.torsion.size(); ++j)
      if (pr.torsion[j] && *pr.torsion[j] % element_order(g, images[j]) != 0) ok = false;
    for (const auto& r : pr.relators)
      if (ok && evaluate(r, images, g) != g.identity()) ok = false;
    if (ok && generated_order(g, images) == g.order()) ++count;
    std::size_t pos = 0;
    while (pos < k && ++images[pos] == g.order()) images[pos++] = 0;
    if (pos == k) break;
  }
  return count;
}

inline std::size_t center_order(const FiniteGroup& g) {
  std::size_t n = 0;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; central && x < g.order(); ++x) central = g.mul(z, x) == g.mul(x, z);
    n += central;
  }
  return n;
}

// Order of G^p [G, G] from every p-th power and commutator.
inline std::size_t frattini_order_p_group(const FiniteGroup& g, std::uint32_t p) {
  std::set<Element> gens;
  for (Element x = 0; x < g.order(); ++x) {
    gens.insert(power(g, x, p));
    for (Element y = 0; y < g.order(); ++y) gens.insert(g.commutator(x, y));
  }
  return generated_order(g, {gens.begin(), gens.end()});
}

// Smallest number of elements that generate G, by trying every subset size.
inline std::size_t minimal_generators(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  for (std::size_t d = 1;; ++d) {
    std::vector<Element> pick(d, 0);
    while (true) {
      if (generated_order(g, pick) == g.order()) return d;
      std::size_t pos = 0;
      while (pos < d && ++pick[pos] == g.order()) pick[pos++] = 0;
      if (pos == d) break;
    }
  }
}

inline std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (Element x = 0; x < g.order(); ++x) e = std::lcm(e, element_order(g, x));
  return e;
}

// The quaternion group from its 8-element multiplication rule on
// {1, i, j, k} x {+, -}: index 2a + s stands for (-1)^s unit_a.
inline FiniteGroup quaternion_table() {
  // unit product table: unit[a][b] = (sign, unit)
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup::from_product(8, [&](Element x, Element y) {
    int a = static_cast<int>(x / 2), sa = static_cast<int>(x % 2);
    int b = static_cast<int>(y / 2), sb = static_cast<int>(y % 2);
    int s = (sa + sb + sign[a][b]) % 2;
    return static_cast<Element>(2 * unit[a][b] + s);
  });
}

// Every bijection G -> H that respects multiplication, tried exhaustively
// on small orders through generator images.
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::uint64_t> oa, ob;
  for (Element x = 0; x < a.order(); ++x) oa.push_back(element_order(a, x));
  for (Element x = 0; x < b.order(); ++x) ob.push_back(element_order(b, x));
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  if (oa != ob) return false;
  const auto& gens = a.generators();
  const std::size_t k = gens.size();
  std::vector<Element> images(k, 0);
  while (true) {
    // extend gens -> images along a BFS of a, checking consistency
    std::vector<std::int64_t> map(a.order(), -1);
    map[a.identity()] = b.identity();
    std::vector<Element> queue{a.identity()};
    bool ok = true;
    for (std::size_t h = 0; ok && h < queue.size(); ++h)
      for (std::size_t s = 0; ok && s < k; ++s) {
        Element x = a.mul(queue[h], gens[s]);
        Element y = b.mul(static_cast<Element>(map[queue[h]]), images[s]);
        if (map[x] < 0) {
          map[x] = y;
          queue.push_back(x);
        } else if (map[x] != y) {
          ok = false;
        }
      }
    if (ok) {
      std::set<std::int64_t> img(map.begin(), map.end());
      if (img.size() == a.order()) {
        bool hom = true;
        for (Element x = 0; hom && x < a.order(); ++x)
          for (Element y = 0; hom && y < a.order(); ++y)
            hom = map[a.mul(x, y)] == b.mul(static_cast<Element>(map[x]), static_cast<Element>(map[y]));
        if (hom) return true;
      }
    }
    std::size_t pos = 0;
    while (pos < k && ++images[pos] == b.order()) images[pos++] = 0;
    if (pos == k) return false;
  }
}

// All (m, n, i, t) realized by some pair (x, y) with G = <x, y>, <y> normal,
// n = |y|, m = |G|/n, x^m = y^i and x^-1 y x = y^t.
inline std::set<admiss::MetacyclicParams> metacyclic_presentations(const FiniteGroup& g) {
  std::set<admiss::MetacyclicParams> out;
  for (Element y = 0; y < g.order(); ++y) {
    const std::uint64_t n = element_order(g, y);
    std::vector<std::int64_t> log(g.order(), -1);
    for (std::uint64_t k = 0; k < n; ++k) log[power(g, y, static_cast<std::int64_t>(k))] = static_cast<std::int64_t>(k);
    bool normal = true;
    for (Element z = 0; normal && z < g.order(); ++z) normal = log[g.conjugate(y, z)] >= 0;
    if (!normal) continue;
    const std::uint64_t m = g.order() / n;
    for (Element x = 0; x < g.order(); ++x) {
      if (generated_order(g, {x, y}) != g.order()) continue;
      Element xm = power(g, x, static_cast<std::int64_t>(m));
      if (log[xm] < 0) continue;
      out.insert({m, n, static_cast<std::uint64_t>(log[xm]), static_cast<std::uint64_t>(log[g.conjugate(y, x)])});
    }
  }
  return out;
}

// Largest element order in the sum-zero subgroup of the direct sum of
// (1/d_v) Z / Z, scanning every tuple of numerators.
inline std::uint64_t max_order_sum_zero(const std::vector<std::uint64_t>& d) {
  std::uint64_t l = 1;
  for (auto x : d) l = std::lcm(l, x);
  std::vector<std::uint64_t> a(d.size(), 0);
  std::uint64_t best = 1;
  if (d.empty()) return 1;
  while (true) {
    std::uint64_t sum = 0, ord = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      sum += a[k] * (l / d[k]);
      ord = std::lcm(ord, d[k] / std::gcd(a[k], d[k]));
    }
    if (sum % l == 0) best = std::max(best, ord);
    std::size_t pos = 0;
    while (pos < d.size() && ++a[pos] == d[pos]) a[pos++] = 0;
    if (pos == d.size()) break;
  }
  return best;
}

// Preadmissibility by trying every way to give each prime two places.
inline bool exhaustive_preadmissible(const FiniteGroup& g, const std::vector<admiss::LocalFact>& facts,
                                     const admiss::MatchingOptions& options) {
  std::vector<std::uint32_t> primes;
  std::uint64_t n = g.order();
  for (std::uint32_t p = 2; n > 1; ++p)
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  // merge facts by label
  std::map<std::string, std::pair<std::uint32_t, std::vector<std::size_t>>> places;
  for (const auto& f : facts) {
    auto& slot = places[f.place.label];
    slot.first = f.place.residue_characteristic;
    for (const auto& h : f.realizable_subgroups) slot.second.push_back(h.size());
  }
  std::vector<std::string> labels;
  for (const auto& [label, data] : places) labels.push_back(label);
  auto qualifies = [&](const std::string& label, std::uint32_t p) {
    const auto& [residue, sizes] = places.at(label);
    if (options.avoid_residue_characteristic && residue == p) return false;
    std::uint64_t part = 1, m = g.order();
    while (m % p == 0) {
      m /= p;
      part *= p;
    }
    return std::any_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s % part == 0; });
  };
  const std::size_t np = labels.size();
  // choice[k] in [0, np*np): an ordered pair of place indices for prime k
  std::vector<std::size_t> choice(primes.size(), 0);
  if (primes.empty()) return true;
  while (true) {
    bool ok = true;
    std::set<std::size_t> used;
    for (std::size_t k = 0; ok && k < primes.size(); ++k) {
      std::size_t a = choice[k] / np, b = choice[k] % np;
      if (a >= b) ok = false;
      else if (!qualifies(labels[a], primes[k]) || !qualifies(labels[b], primes[k])) ok = false;
      else if (options.distinctness == admiss::Distinctness::all_distinct) {
        ok = used.insert(a).second && used.insert(b).second;
      }
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == np * np) choice[pos++] = 0;
    if (pos == choice.size()) return false;
  }
}

// Deterministic random words over `rank` generators.
class WordSource {
 public:
  explicit WordSource(std::uint32_t seed) : rng_(seed) {}

  Word next(std::size_t rank, int depth = 2) {
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 0);
    std::uniform_int_distribution<std::size_t> gen(0, rank - 1);
    std::uniform_int_distribution<int> exp(-4, 4);
    switch (kind(rng_)) {
      case 1: {
        std::vector<Word> f{next(rank, depth - 1), next(rank, depth - 1)};
        return Word::product(std::move(f));
      }
      case 2:
        return Word::commutator(next(rank, depth - 1), next(rank, depth - 1));
      case 3: {
        int e = exp(rng_);
        return Word::power(next(rank, depth - 1), e == 0 ? 2 : e);
      }
      default: {
        int e = exp(rng_);
        return Word::generator(gen(rng_), e == 0 ? 1 : e);
      }
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace oracle
