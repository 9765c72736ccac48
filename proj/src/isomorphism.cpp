#include "admiss/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "admiss/group_queries.hpp"

namespace admiss {

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  std::map<std::uint32_t, std::size_t> profile;
  for (auto o : g.element_orders()) ++profile[o];
  f.order_profile.assign(profile.begin(), profile.end());
  f.center_order = center(g).size();
  f.derived_order = commutator_subgroup(g).size();
  if (p_group_prime(g)) f.frattini_order = frattini_subgroup(g).size();
  f.abelianization = abelianization_invariants(g);
  return f;
}

std::optional<std::vector<std::optional<Element>>> extend_homomorphism(
    const FiniteGroup& source, std::span<const Element> gens, const FiniteGroup& target,
    std::span<const Element> images) {
  if (gens.size() != images.size()) throw InputError("extend_homomorphism: size mismatch");
  std::vector<std::optional<Element>> map(source.order());
  map[source.identity()] = target.identity();
  std::vector<Element> reached{source.identity()};
  for (std::size_t idx = 0; idx < reached.size(); ++idx) {
    Element x = reached[idx];
    Element fx = *map[x];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = source.mul(x, gens[k]);
      Element fy = target.mul(fx, images[k]);
      if (!map[y]) {
        map[y] = fy;
        reached.push_back(y);
      } else if (*map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  return map;
}

namespace {

// Backtracking over images of source.generators(); `on_bijection` returns
// false to stop the search.
void search_isomorphisms(const FiniteGroup& source, const FiniteGroup& target,
                         const std::function<bool(const std::vector<Element>&)>& on_bijection) {
  if (source.order() != target.order()) return;
  const auto& gens = source.generators();
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Element y = 0; y < target.order(); ++y)
      if (target.element_order(y) == source.element_order(gens[k])) candidates[k].push_back(y);

  std::vector<Element> images;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (stop) return;
    auto partial = extend_homomorphism(source, std::span(gens).first(depth), target, images);
    if (!partial) return;
    // Injective on the generated subgroup: only the identity maps to the identity.
    std::size_t mapped = 0;
    for (Element x = 0; x < source.order(); ++x) {
      if (!(*partial)[x]) continue;
      ++mapped;
      if (x != source.identity() && *(*partial)[x] == target.identity()) return;
    }
    if (depth == gens.size()) {
      if (mapped != source.order()) return;
      std::vector<Element> full(source.order());
      for (Element x = 0; x < source.order(); ++x) full[x] = *(*partial)[x];
      if (!on_bijection(full)) stop = true;
      return;
    }
    for (Element y : candidates[depth]) {
      images.push_back(y);
      rec(depth + 1);
      images.pop_back();
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteGroup& source, const FiniteGroup& target) {
  if (source.order() != target.order()) return std::nullopt;
  if (!(fingerprint(source) == fingerprint(target))) return std::nullopt;
  std::optional<std::vector<Element>> found;
  search_isomorphisms(source, target, [&](const std::vector<Element>& m) {
    found = m;
    return false;
  });
  return found;
}

bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b) { return find_isomorphism(a, b).has_value(); }

std::uint64_t automorphism_count(const FiniteGroup& g) {
  std::uint64_t count = 0;
  search_isomorphisms(g, g, [&](const std::vector<Element>&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace admiss
