#include "admiss/epimorphism.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "admiss/group_queries.hpp"
#include "admiss/isomorphism.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Row-reduced vectors over F_p, grown one vector at a time.
class FpEchelon {
 public:
  FpEchelon(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}

  std::size_t rank() const { return rows_.size(); }

  // Returns true when `packed` increased the rank.
  bool insert(std::uint32_t packed) {
    std::vector<std::uint32_t> v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      v[k] = packed % p_;
      packed /= p_;
    }
    for (const auto& [pivot, row] : rows_) {
      std::uint32_t c = v[pivot];
      if (c == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) v[k] = (v[k] + (p_ - c) * row[k]) % p_;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (it == v.end()) return false;
    auto pivot = static_cast<std::size_t>(it - v.begin());
    auto inv = static_cast<std::uint32_t>(mod_inverse(v[pivot], p_));
    for (auto& x : v) x = static_cast<std::uint32_t>((static_cast<std::uint64_t>(x) * inv) % p_);
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  void pop() { rows_.pop_back(); }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> rows_;
};

// Depth-first search over tuples (c_0, ..., c_{r-1}) with c_k drawn from
// candidates[k]. Relators are checked as soon as all their generators are
// assigned; generation is checked at the leaves.
class TupleSearch {
 public:
  TupleSearch(const FiniteGroup& g, std::vector<std::vector<Element>> candidates,
              const std::vector<Word>& relators, bool prune)
      : g_(g), candidates_(std::move(candidates)), prune_(prune) {
    const std::size_t r = candidates_.size();
    checks_.resize(r);
    for (const auto& w : relators) {
      CompiledWord c(w);
      if (c.arity() == 0) {
        if (c.evaluate(g_, {}) != g_.identity()) constant_fails_ = true;
        continue;
      }
      std::size_t depth = prune_ ? c.arity() - 1 : r - 1;
      checks_[depth].push_back(std::move(c));
    }
    if (auto p = p_group_prime(g_)) {
      frattini_ = frattini_coordinates(g_);
    }
    space_ = 1;
    for (const auto& c : candidates_) space_ = saturating_mul(space_, c.size());
  }

  std::uint64_t search_space() const { return space_; }

  std::uint64_t count(unsigned workers) {
    if (trivial_outcome()) return leaf_for_empty() ? 1 : 0;
    auto per_outer = run(workers, false);
    std::uint64_t total = 0;
    for (const auto& o : per_outer) total += o.found;
    return total;
  }

  struct FirstResult {
    std::optional<std::vector<Element>> witness;
    std::uint64_t examined = 0;
  };

  FirstResult first(unsigned workers) {
    FirstResult out;
    if (trivial_outcome()) {
      if (leaf_for_empty()) out.witness = std::vector<Element>{};
      out.examined = candidates_.empty() ? 1 : 0;
      return out;
    }
    auto per_outer = run(workers, true);
    for (auto& o : per_outer) {
      out.examined += o.examined;
      if (o.witness) {
        out.witness = std::move(o.witness);
        break;
      }
    }
    return out;
  }

 private:
  struct OuterResult {
    std::uint64_t found = 0;
    std::uint64_t examined = 0;
    std::optional<std::vector<Element>> witness;
  };

  bool trivial_outcome() const {
    if (constant_fails_) return true;
    if (candidates_.empty()) return true;
    return std::any_of(candidates_.begin(), candidates_.end(), [](const auto& c) { return c.empty(); });
  }
  // With no generators the only tuple is empty; it generates only the trivial group.
  bool leaf_for_empty() const { return !constant_fails_ && candidates_.empty() && g_.order() == 1; }

  bool generates(const std::vector<Element>& a, std::vector<bool>& mask, std::vector<Element>& members) const {
    if (frattini_) {
      FpEchelon e(frattini_->p, frattini_->rank);
      for (Element x : a) e.insert(frattini_->coords[x]);
      return e.rank() == frattini_->rank;
    }
    mask.assign(g_.order(), false);
    members.assign(1, g_.identity());
    mask[g_.identity()] = true;
    for (std::size_t idx = 0; idx < members.size(); ++idx)
      for (Element s : a) {
        Element y = g_.mul(members[idx], s);
        if (!mask[y]) {
          mask[y] = true;
          members.push_back(y);
        }
      }
    return members.size() == g_.order();
  }

  struct Worker {
    std::vector<Element> assignment;
    std::vector<bool> mask;
    std::vector<Element> members;
    std::optional<FpEchelon> echelon;
  };

  // Returns false to abort (first-witness mode found one).
  bool descend(Worker& w, std::size_t depth, OuterResult& out, bool stop_at_first) const {
    const std::size_t r = candidates_.size();
    for (Element c : candidates_[depth]) {
      w.assignment[depth] = c;
      bool ok = true;
      for (const auto& check : checks_[depth])
        if (check.evaluate(g_, w.assignment) != g_.identity()) {
          ok = false;
          break;
        }
      if (depth + 1 == r) ++out.examined;
      if (!ok) continue;
      bool pushed = false;
      if (prune_ && w.echelon) {
        pushed = w.echelon->insert(frattini_->coords[c]);
        if (w.echelon->rank() + (r - depth - 1) < frattini_->rank) {
          if (pushed) w.echelon->pop();
          continue;
        }
      }
      bool keep_going = true;
      if (depth + 1 == r) {
        bool gen = (prune_ && w.echelon) ? w.echelon->rank() == frattini_->rank
                                         : generates(w.assignment, w.mask, w.members);
        if (gen) {
          ++out.found;
          if (stop_at_first) {
            out.witness = w.assignment;
            keep_going = false;
          }
        }
      } else {
        keep_going = descend(w, depth + 1, out, stop_at_first);
      }
      if (pushed) w.echelon->pop();
      if (!keep_going) return false;
    }
    return true;
  }

  std::vector<OuterResult> run(unsigned workers, bool stop_at_first) const {
    const auto& outer = candidates_.front();
    std::vector<OuterResult> results(outer.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto body = [&]() {
      Worker w;
      w.assignment.assign(candidates_.size(), g_.identity());
      if (prune_ && frattini_) w.echelon.emplace(frattini_->p, frattini_->rank);
      while (true) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= outer.size()) break;
        if (stop_at_first && idx > best.load()) break;
        OuterResult& out = results[idx];
        // Restrict the first level to this single outer candidate.
        const std::size_t r = candidates_.size();
        Element c = outer[idx];
        w.assignment[0] = c;
        bool ok = true;
        for (const auto& check : checks_[0])
          if (check.evaluate(g_, w.assignment) != g_.identity()) {
            ok = false;
            break;
          }
        if (r == 1) ++out.examined;
        if (!ok) continue;
        bool pushed = false;
        if (w.echelon) {
          pushed = w.echelon->insert(frattini_->coords[c]);
          if (w.echelon->rank() + (r - 1) < frattini_->rank) {
            if (pushed) w.echelon->pop();
            continue;
          }
        }
        if (r == 1) {
          bool gen = w.echelon ? w.echelon->rank() == frattini_->rank : generates(w.assignment, w.mask, w.members);
          if (gen) {
            ++out.found;
            if (stop_at_first) out.witness = w.assignment;
          }
        } else {
          descend(w, 1, out, stop_at_first);
        }
        if (pushed) w.echelon->pop();
        if (stop_at_first && out.witness) {
          std::size_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
        }
      }
    };
    unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(outer.size())));
    if (n == 1) {
      body();
    } else {
      std::vector<std::thread> threads;
      for (unsigned k = 0; k < n; ++k) threads.emplace_back(body);
      for (auto& t : threads) t.join();
    }
    if (stop_at_first) {
      // Keep only outer slots up to the first witness; later ones may be partial.
      std::size_t b = best.load();
      if (b != std::numeric_limits<std::size_t>::max()) results.resize(b + 1);
    }
    return results;
  }

  const FiniteGroup& g_;
  std::vector<std::vector<Element>> candidates_;
  bool prune_;
  std::vector<std::vector<CompiledWord>> checks_;
  bool constant_fails_ = false;
  std::optional<FrattiniCoordinates> frattini_;
  std::uint64_t space_ = 0;
};

std::vector<std::vector<Element>> torsion_candidates(const Presentation& pr, const FiniteGroup& g) {
  auto bounds = pr.effective_torsion();
  std::vector<std::vector<Element>> out(pr.generator_count());
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Element x = 0; x < g.order(); ++x)
      if (!bounds[k] || *bounds[k] % g.element_order(x) == 0) out[k].push_back(x);
  return out;
}

void check_budget(std::uint64_t estimate, const SearchOptions& options) {
  if (estimate > options.budget) throw BudgetExceeded(estimate, options.budget);
}

std::uint32_t require_p_group(const Presentation& pr, const FiniteGroup& g) {
  auto p = p_group_prime(g);
  if (!p && g.order() != 1) throw PreconditionFailed("quotient test needs a p-group target");
  if (pr.mode == PresentationMode::pro_p && p && *p != pr.p)
    throw PreconditionFailed("target is a " + std::to_string(*p) + "-group but the presentation is pro-" +
                             std::to_string(pr.p));
  return p.value_or(pr.p);
}

}  // namespace

EpimorphismCount count_epimorphisms(const Presentation& pr, const FiniteGroup& g, const SearchOptions& options) {
  pr.validate();
  if (pr.mode != PresentationMode::abstract_finite)
    throw PreconditionFailed("epimorphism counting needs an abstract-finite presentation, got " + to_string(pr.mode));
  TupleSearch search(g, torsion_candidates(pr, g), pr.relators, true);
  check_budget(search.search_space(), options);
  return {search.count(options.workers), search.search_space()};
}

NormalSubgroupCount count_normal_subgroups_with_quotient(const Presentation& pr, const FiniteGroup& g,
                                                         const SearchOptions& options) {
  NormalSubgroupCount out;
  out.epimorphisms = count_epimorphisms(pr, g, options).epimorphisms;
  out.automorphisms = automorphism_count(g);
  if (out.epimorphisms % out.automorphisms != 0)
    throw Error("epimorphism count " + std::to_string(out.epimorphisms) + " is not divisible by |Aut(G)| = " +
                std::to_string(out.automorphisms));
  out.normal_subgroups = out.epimorphisms / out.automorphisms;
  return out;
}

std::optional<CentralReductionPlan> central_reduction_plan(const Presentation& pr, const FiniteGroup& g,
                                                           std::string* reason) {
  auto fail = [&](std::string why) -> std::optional<CentralReductionPlan> {
    if (reason) *reason = std::move(why);
    return std::nullopt;
  };
  if (!p_group_prime(g)) return fail("target is not a nontrivial p-group");
  if (std::any_of(pr.torsion.begin(), pr.torsion.end(), [](const auto& t) { return t.has_value(); }))
    return fail("explicit torsion bounds are not compatible with coset representatives");
  std::int64_t gcd_all = 0;
  for (const auto& r : pr.relators)
    for (auto e : r.exponent_sums(pr.generator_count())) gcd_all = std::gcd(gcd_all, e < 0 ? -e : e);
  Subgroup z = center(g);
  Subgroup phi = frattini_subgroup(g);
  CentralReductionPlan plan;
  plan.exponent_gcd = gcd_all;
  for (Element x : z.members())
    if (phi.contains(x) && g.pow(x, gcd_all) == g.identity()) plan.subgroup.push_back(x);
  if (plan.subgroup.size() <= 1)
    return fail("no nontrivial central Frattini element is killed by the exponent-sum gcd " +
                std::to_string(gcd_all));
  return plan;
}

QuotientResult central_reduction_quotient_test(const Presentation& pr, const FiniteGroup& g,
                                               const SearchOptions& options) {
  pr.validate();
  require_p_group(pr, g);
  std::string reason;
  auto plan = central_reduction_plan(pr, g, &reason);
  if (!plan) throw PreconditionFailed("central reduction does not apply: " + reason);
  std::vector<Element> coset_of;
  Subgroup c = Subgroup::from_members(g, plan->subgroup);
  quotient(g, c, &coset_of, GroupOptions{g.order(), AssociativityCheck::light});
  std::vector<Element> reps;
  std::vector<bool> seen(g.order() / c.size(), false);
  for (Element x = 0; x < g.order(); ++x)
    if (!seen[coset_of[x]]) {
      seen[coset_of[x]] = true;
      reps.push_back(x);
    }
  TupleSearch search(g, std::vector<std::vector<Element>>(pr.generator_count(), reps), pr.relators, false);
  check_budget(search.search_space(), options);
  auto first = search.first(options.workers);
  QuotientResult out;
  out.method = "central-reduction";
  out.is_quotient = first.witness.has_value();
  out.witness = std::move(first.witness);
  out.search_space = search.search_space();
  out.tuples_examined = first.examined;
  out.reduction_subgroup_order = c.size();
  return out;
}

QuotientResult is_prop_quotient(const Presentation& pr, const FiniteGroup& g, const SearchOptions& options) {
  pr.validate();
  require_p_group(pr, g);
  const bool has_torsion = std::any_of(pr.torsion.begin(), pr.torsion.end(), [](const auto& t) { return t.has_value(); });

  if (options.strategy == QuotientStrategy::automatic && pr.is_free() && !has_torsion) {
    QuotientResult out;
    out.method = "free-rank";
    const std::size_t r = pr.generator_count();
    if (g.order() == 1) {
      out.is_quotient = true;
      out.witness = std::vector<Element>(r, g.identity());
      return out;
    }
    auto fc = frattini_coordinates(g);
    out.is_quotient = fc.rank <= r;
    if (out.is_quotient) {
      std::vector<Element> w(r, g.identity());
      std::copy(fc.basis.begin(), fc.basis.end(), w.begin());
      out.witness = std::move(w);
    }
    return out;
  }
  if (options.strategy == QuotientStrategy::central_reduction) return central_reduction_quotient_test(pr, g, options);

  TupleSearch search(g, torsion_candidates(pr, g), pr.relators, true);
  std::string note;
  if (options.strategy == QuotientStrategy::automatic) {
    if (auto plan = central_reduction_plan(pr, g, &note)) {
      std::uint64_t cosets = g.order() / plan->subgroup.size();
      std::uint64_t estimate = 1;
      for (std::size_t k = 0; k < pr.generator_count(); ++k) estimate = saturating_mul(estimate, cosets);
      if (estimate <= options.budget && estimate < search.search_space())
        return central_reduction_quotient_test(pr, g, options);
      note = "central reduction estimate " + std::to_string(estimate) + " not better than backtracking";
    }
  }
  check_budget(search.search_space(), options);
  auto first = search.first(options.workers);
  QuotientResult out;
  out.method = "backtracking";
  out.note = note;
  out.is_quotient = first.witness.has_value();
  out.witness = std::move(first.witness);
  out.search_space = search.search_space();
  out.tuples_examined = first.examined;
  return out;
}

}  // namespace admiss
