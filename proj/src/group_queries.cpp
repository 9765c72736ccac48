#include "admiss/group_queries.hpp"

#include <algorithm>
#include <numeric>

#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

// Incrementally maintained subgroup closure.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const FiniteGroup& g) : g_(g), mask_(g.order(), false) {
    members_.push_back(g.identity());
    mask_[g.identity()] = true;
  }

  bool contains(Element e) const { return mask_[e]; }

  void add_generator(Element x) {
    if (mask_[x]) return;
    gens_.push_back(x);
    for (std::size_t idx = 0; idx < members_.size(); ++idx) {
      Element m = members_[idx];
      for (Element s : gens_) {
        Element y = g_.mul(m, s);
        if (!mask_[y]) {
          mask_[y] = true;
          members_.push_back(y);
        }
      }
    }
  }

  const std::vector<Element>& members() const { return members_; }
  const std::vector<Element>& gens() const { return gens_; }
  Subgroup take() { return make_subgroup_unchecked(g_.order(), std::move(members_)); }

 private:
  const FiniteGroup& g_;
  std::vector<bool> mask_;
  std::vector<Element> members_;
  std::vector<Element> gens_;
};

}  // namespace

Subgroup closure(const FiniteGroup& g, std::span<const Element> gens) {
  ClosureBuilder b(g);
  for (Element x : gens) {
    if (x >= g.order()) throw InputError("element out of range");
    b.add_generator(x);
  }
  return b.take();
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Element> elems) {
  ClosureBuilder b(g);
  for (Element x : elems) b.add_generator(x);
  bool changed = true;
  while (changed) {
    changed = false;
    // Conjugating the generators of the current subgroup suffices.
    std::vector<Element> current = b.gens();
    for (Element h : current) {
      for (Element x : g.generators()) {
        Element c = g.conjugate(h, x);
        if (!b.contains(c)) {
          b.add_generator(c);
          changed = true;
        }
      }
    }
  }
  return b.take();
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order()) throw InputError("subgroup belongs to a different group");
  for (Element m : h.members())
    for (Element x : g.generators())
      if (!h.contains(g.conjugate(m, x))) return false;
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Element m : h.members())
      if (!h.contains(g.conjugate(m, x))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return make_subgroup_unchecked(g.order(), std::move(out));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return make_subgroup_unchecked(g.order(), {g.identity()});
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return make_subgroup_unchecked(g.order(), std::move(all));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x : g.generators())
      if (g.mul(z, x) != g.mul(x, z)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return make_subgroup_unchecked(g.order(), std::move(out));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::optional<std::uint32_t> p_group_prime(const FiniteGroup& g) {
  auto f = factorize(g.order());
  if (f.size() != 1) return std::nullopt;
  return static_cast<std::uint32_t>(f.front().first);
}

bool is_p_group(const FiniteGroup& g, std::uint32_t p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  auto p = p_group_prime(g);
  if (!p) throw PreconditionFailed("Frattini subgroup is only computed for p-groups");
  Subgroup derived = commutator_subgroup(g);
  std::vector<Element> gens = derived.members();
  for (Element x : g.generators()) gens.push_back(g.pow(x, *p));
  return closure(g, gens);
}

std::size_t minimal_generator_count(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  auto p = p_group_prime(g);
  if (!p) throw PreconditionFailed("d(G) is only defined here for p-groups");
  std::size_t index = g.order() / frattini_subgroup(g).size();
  std::size_t d = 0;
  while (index > 1) {
    index /= *p;
    ++d;
  }
  return d;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n, std::vector<Element>* coset_of,
                     const GroupOptions& options) {
  if (!is_normal(g, n)) throw InputError("quotient requires a normal subgroup");
  const Element unset = static_cast<Element>(-1);
  std::vector<Element> cid(g.order(), unset);
  std::vector<Element> reps;
  for (Element e = 0; e < g.order(); ++e) {
    if (cid[e] != unset) continue;
    Element k = static_cast<Element>(reps.size());
    reps.push_back(e);
    for (Element h : n.members()) cid[g.mul(e, h)] = k;
  }
  const std::size_t m = reps.size();
  GroupOptions opts = options;
  opts.max_order = std::max(opts.max_order, m);
  std::vector<Element> hints;
  for (Element x : g.generators()) hints.push_back(cid[x]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Element r : reps) labels.push_back(g.label(r));
  FiniteGroup q = FiniteGroup::from_product(
      m, [&](Element a, Element b) { return cid[g.mul(reps[a], reps[b])]; }, opts, std::move(labels),
      std::move(hints));
  if (coset_of) *coset_of = std::move(cid);
  return q;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const GroupOptions& options) {
  if (h.parent_order() != g.order()) throw InputError("subgroup belongs to a different group");
  const auto& members = h.members();
  std::vector<Element> index_of(g.order(), 0);
  for (std::size_t k = 0; k < members.size(); ++k) index_of[members[k]] = static_cast<Element>(k);
  GroupOptions opts = options;
  opts.max_order = std::max(opts.max_order, members.size());
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Element x : members) labels.push_back(g.label(x));
  return FiniteGroup::from_product(
      members.size(), [&](Element a, Element b) { return index_of[g.mul(members[a], members[b])]; }, opts,
      std::move(labels));
}

std::uint64_t exponent(const FiniteGroup& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  if (!g.is_abelian()) throw PreconditionFailed("abelian invariants requested for a non-abelian group");
  std::vector<std::uint64_t> out;
  for (auto [p, mult] : factorize(g.order())) {
    // a[k] = log_p #{x : x^{p^k} = 1}
    std::vector<std::size_t> a{0};
    std::uint64_t pk = 1;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(mult); ++k) {
      pk *= p;
      std::size_t count = 0;
      for (auto o : g.element_orders())
        if (pk % o == 0) ++count;
      std::size_t lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      a.push_back(lg);
      if (lg == static_cast<std::size_t>(mult)) break;
    }
    // Number of cyclic factors of order >= p^k is a[k] - a[k-1].
    std::size_t kmax = a.size() - 1;
    std::uint64_t pj = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      pj *= p;
      std::size_t ge_k = a[k] - a[k - 1];
      std::size_t ge_next = k + 1 <= kmax ? a[k + 1] - a[k] : 0;
      for (std::size_t r = 0; r < ge_k - ge_next; ++r) out.push_back(pj);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> abelianization_invariants(const FiniteGroup& g) {
  GroupOptions opts;
  opts.max_order = g.order();
  return abelian_invariants(quotient(g, commutator_subgroup(g), nullptr, opts));
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("sylow_subgroup requires a prime");
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  ClosureBuilder b(g);
  // A p-subgroup P that is not Sylow has some g in N(P) \ P with g^p in P, so
  // the first such element in index order extends P by a factor p.
  while (b.members().size() < target) {
    bool extended = false;
    for (Element x = 0; x < g.order() && !extended; ++x) {
      if (b.contains(x) || !b.contains(g.pow(x, p))) continue;
      bool normalizes = true;
      for (Element s : b.gens())
        if (!b.contains(g.conjugate(s, x))) {
          normalizes = false;
          break;
        }
      if (!normalizes) continue;
      b.add_generator(x);
      extended = true;
    }
    if (!extended) throw Error("internal: Sylow extension step failed");
  }
  return b.take();
}

FrattiniCoordinates frattini_coordinates(const FiniteGroup& g) {
  FrattiniCoordinates fc;
  if (g.order() == 1) {
    fc.coords.assign(1, 0);
    return fc;
  }
  auto p = p_group_prime(g);
  if (!p) throw PreconditionFailed("Frattini coordinates require a p-group");
  fc.p = *p;
  Subgroup phi = frattini_subgroup(g);
  std::vector<Element> cid;
  GroupOptions opts;
  opts.max_order = g.order();
  FiniteGroup q = quotient(g, phi, &cid, opts);
  // Greedy basis of the elementary abelian quotient.
  std::vector<bool> in_span(q.order(), false);
  std::vector<Element> span{q.identity()};
  in_span[q.identity()] = true;
  for (Element e = 0; e < g.order() && span.size() < q.order(); ++e) {
    Element c = cid[e];
    if (in_span[c]) continue;
    fc.basis.push_back(e);
    std::vector<Element> next;
    for (Element s : span) {
      Element t = s;
      for (std::uint32_t k = 0; k < *p; ++k) {
        if (!in_span[t]) {
          in_span[t] = true;
          next.push_back(t);
        }
        t = q.mul(t, c);
      }
    }
    span.insert(span.end(), next.begin(), next.end());
  }
  fc.rank = fc.basis.size();
  std::vector<std::uint32_t> coset_coord(q.order(), 0);
  std::size_t total = q.order();
  for (std::uint32_t packed = 0; packed < total; ++packed) {
    Element x = g.identity();
    std::uint32_t rest = packed;
    for (std::size_t i = 0; i < fc.rank; ++i) {
      x = g.mul(x, g.pow(fc.basis[i], rest % *p));
      rest /= *p;
    }
    coset_coord[cid[x]] = packed;
  }
  fc.coords.resize(g.order());
  for (Element e = 0; e < g.order(); ++e) fc.coords[e] = coset_coord[cid[e]];
  return fc;
}

std::size_t span_rank(std::span<const std::uint32_t> packed, std::uint32_t p, std::size_t dim) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint32_t v : packed) {
    std::vector<std::uint32_t> r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      r[i] = v % p;
      v /= p;
    }
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    std::uint32_t inv = static_cast<std::uint32_t>(mod_inverse(rows[rank][col], p));
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::uint32_t f = rows[r][col];
      for (std::size_t i = 0; i < dim; ++i) rows[r][i] = (rows[r][i] + p * p - f * rows[rank][i] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace admiss
