#include "admiss/metacyclic.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "admiss/error.hpp"
#include "admiss/numtheory.hpp"
#include "admiss/word.hpp"

namespace admiss {

std::vector<MetacyclicParams> enumerate_metacyclic_presentations(const FiniteGroup& g) {
  const std::size_t order = g.order();
  std::set<MetacyclicParams> found;
  std::vector<std::int64_t> log(order);
  for (Element y = 0; y < order; ++y) {
    const std::uint64_t n = g.element_order(y);
    if (order % n != 0) continue;
    const std::uint64_t m = order / n;
    // log_y on <y>, -1 outside
    std::fill(log.begin(), log.end(), -1);
    Element pw = g.identity();
    for (std::uint64_t k = 0; k < n; ++k) {
      log[pw] = static_cast<std::int64_t>(k);
      pw = g.mul(pw, y);
    }
    bool normal = true;
    for (Element s : g.generators())
      if (log[g.conjugate(y, s)] < 0) {
        normal = false;
        break;
      }
    if (!normal) continue;
    for (Element x = 0; x < order; ++x) {
      // order of x modulo <y> must be m
      Element xp = x;
      std::uint64_t k = 1;
      while (log[xp] < 0) {
        xp = g.mul(xp, x);
        ++k;
      }
      if (k != m) continue;
      MetacyclicParams params{m, n, static_cast<std::uint64_t>(log[xp]),
                              static_cast<std::uint64_t>(log[g.conjugate(y, x)])};
      found.insert(params);
    }
  }
  return {found.begin(), found.end()};
}

std::optional<MetacyclicParams> is_metacyclic(const FiniteGroup& g) {
  auto all = enumerate_metacyclic_presentations(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace admiss

namespace admiss {

std::uint64_t two_group_relation_exponent(const MetacyclicParams& params) {
  const auto n = static_cast<std::int64_t>(params.n);
  if (n == 1) return 0;
  if ((n & (n - 1)) != 0) throw InputError("relation exponent needs n a power of 2");
  const auto t = static_cast<std::int64_t>(params.t % params.n);
  if (t % 2 == 0) throw InputError("relation exponent needs odd t");
  const std::int64_t half_sum = mod((t * t + 1) / 2, n);
  const std::int64_t t2 = mod(t * t, n);
  const std::int64_t half_diff = (1 - t) / 2;  // exact, t is odd
  std::int64_t s = mod(mod_inverse(half_sum, n) * mod_inverse(t2, n), n);
  return static_cast<std::uint64_t>(mod(s * mod(half_diff, n), n));
}

RelationSweepReport two_group_relation_sweep(std::uint64_t bound, CommutatorReading reading) {
  RelationSweepReport report;
  GroupOptions options;
  options.associativity = AssociativityCheck::light;
  const std::vector<std::string> names = {"x", "y"};
  for (std::uint64_t m = 1; m <= bound; m *= 2)
    for (std::uint64_t n = 1; n <= bound; n *= 2)
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t t = n == 1 ? 0 : 1; t < std::max<std::uint64_t>(n, 1); t += 2) {
          MetacyclicParams params{m, n, i, t};
          try {
            params = normalized(params);
          } catch (const InputError&) {
            continue;  // inconsistent data
          }
          FiniteGroup g = build_metacyclic(params, options);
          const Element x = m == 1 ? static_cast<Element>(i) : static_cast<Element>(n);
          const Element y = static_cast<Element>(1 % n);
          auto s = static_cast<std::int64_t>(two_group_relation_exponent(params));
          Word bracket = Word::commutator(Word::generator(0), Word::generator(1));
          if (reading == CommutatorReading::conjugate_then_inverse) {
            bracket = Word::product({Word::generator(0, -1), Word::generator(1), Word::generator(0), Word::generator(1, -1)});
          } else {
            s = -s;
          }
          Word a = Word::product({Word::generator(0, -2), Word::generator(1, s)});
          Word w = Word::product({Word::power(a, 2), Word::generator(0, 4), bracket});
          const std::array<Element, 2> images = {x, y};
          ++report.groups_checked;
          if (evaluate_word(w, images, g) != g.identity()) report.failures.push_back(params);
        }
  return report;
}

}  // namespace admiss
