#include <doctest.h>

#include <string>
#include <vector>

#include "admiss/epimorphism.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/local_field.hpp"
#include "admiss/metacyclic.hpp"
#include "admiss/presentation.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace admiss;

namespace {

bool verifies(const Presentation& pr, const FiniteGroup& g, const std::vector<Element>& images) {
  for (const auto& r : pr.relators)
    if (oracle::evaluate(r, images, g) != g.identity()) return false;
  return oracle::generated_order(g, images) == g.order();
}

}  // namespace

TEST_CASE("word parsing and printing") {
  Presentation pr = parse_presentation("<a, b, c | a^2 b^4 [b, c]>");
  CHECK(pr.generator_count() == 3);
  CHECK(pr.relators.size() == 1);
  CHECK(pr.to_string() == "<a,b,c | a^2 b^4 [b,c]>");
  Presentation implicit = parse_presentation("x1^9 [x1,x2] [x3,x4]");
  CHECK(implicit.generator_count() == 4);
  CHECK(parse_presentation("free:3").is_free());
  CHECK_THROWS_AS(parse_presentation("<a | b>"), InputError);
  CHECK_THROWS_AS(parse_presentation("<a | a^>"), InputError);
  CHECK_THROWS_AS(parse_presentation("<a | (a>"), InputError);
  Presentation eq = parse_presentation("<a, b | a^b = a^2>");
  CHECK(eq.relators.size() == 1);
}

TEST_CASE("word evaluation matches the tree oracle") {
  FiniteGroup s4 = symmetric_group(4);
  oracle::WordSource source(7);
  for (int k = 0; k < 200; ++k) {
    Word w = source.next(3, 3);
    std::vector<Element> images = {static_cast<Element>(k % 24), static_cast<Element>((k * 7) % 24),
                                   static_cast<Element>((k * 13 + 5) % 24)};
    CHECK(evaluate_word(w, images, s4) == oracle::evaluate(w, images, s4));
    CompiledWord compiled(w);
    CHECK(compiled.evaluate(s4, images) == oracle::evaluate(w, images, s4));
  }
  CHECK_THROWS_AS(evaluate_word(Word::generator(2), std::vector<Element>{0, 1}, s4), InputError);
}

TEST_CASE("commutators vanish in abelian groups") {
  FiniteGroup g = abelian_group({4, 6});
  Word w = Word::commutator(Word::generator(0), Word::generator(1));
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) CHECK(evaluate_word(w, std::vector<Element>{x, y}, g) == g.identity());
}

TEST_CASE("fourth powers in the order-1024 group") {
  FiniteGroup g = order_1024_group();
  const auto& gens = g.generators();
  REQUIRE(gens.size() == 3);
  const Element a = gens[0], b = gens[1], c = gens[2];
  Subgroup z = center(g);
  // every x is a^i b^j c^k z with z central; x^4 = b^(4j) c^(4k)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Element base = g.mul(g.mul(oracle::power(g, a, i), oracle::power(g, b, j)), oracle::power(g, c, k));
        Element expected = g.mul(oracle::power(g, b, 4 * j), oracle::power(g, c, 4 * k));
        for (Element zz : z.members()) CHECK(oracle::power(g, g.mul(base, zz), 4) == expected);
      }
}

TEST_CASE("epimorphism counts") {
  SUBCASE("free group of rank 2 onto C2") {
    CHECK(count_epimorphisms(free_presentation(2), cyclic_group(2)).epimorphisms == 3);
  }
  SUBCASE("reduced presentation onto S3") {
    auto c = count_normal_subgroups_with_quotient(q3_s3_reduced_presentation(), symmetric_group(3));
    CHECK(c.epimorphisms == 36);
    CHECK(c.automorphisms == 6);
    CHECK(c.normal_subgroups == 6);
    CHECK(oracle::count_epimorphisms(q3_s3_reduced_presentation(), symmetric_group(3)) == 36);
  }
  SUBCASE("budget refusal reports the estimate") {
    SearchOptions tight;
    tight.budget = 10;
    try {
      count_epimorphisms(free_presentation(3), symmetric_group(4), tight);
      FAIL("expected a refusal");
    } catch (const BudgetExceeded& e) {
      CHECK(e.estimate() > 10);
      CHECK(e.budget() == 10);
    }
  }
}

TEST_CASE("pruned epimorphism search equals naive enumeration") {
  auto groups = oracle::corpus();
  auto presentations = oracle::one_relator_presentations();
  std::size_t compared = 0;
  for (const auto& [name, g] : groups)
    for (const auto& pr : presentations) {
      CAPTURE(name);
      CAPTURE(pr.to_string());
      CHECK(count_epimorphisms(pr, g).epimorphisms == oracle::count_epimorphisms(pr, g));
      ++compared;
    }
  CHECK(compared == groups.size() * presentations.size());
}

TEST_CASE("pro-p quotient tests equal naive enumeration on p-groups") {
  auto presentations = oracle::one_relator_presentations();
  for (const auto& [name, g] : oracle::corpus()) {
    auto p = p_group_prime(g);
    if (!p || g.order() == 1) continue;
    for (Presentation pr : presentations) {
      pr.mode = PresentationMode::pro_p;
      pr.p = *p;
      CAPTURE(name);
      CAPTURE(pr.to_string());
      const bool expected = oracle::count_epimorphisms(pr, g) > 0;
      for (auto strategy : {QuotientStrategy::automatic, QuotientStrategy::backtracking}) {
        SearchOptions opts;
        opts.strategy = strategy;
        auto q = is_prop_quotient(pr, g, opts);
        CHECK(q.is_quotient == expected);
        if (q.is_quotient) {
          REQUIRE(q.witness);
          CHECK(verifies(pr, g, *q.witness));
        }
      }
      if (central_reduction_plan(pr, g)) {
        auto q = central_reduction_quotient_test(pr, g);
        CHECK(q.is_quotient == expected);
        if (q.witness) CHECK(verifies(pr, g, *q.witness));
      }
    }
  }
}

TEST_CASE("results do not depend on the worker count") {
  Presentation pr = parse_presentation("<x1, x2, x3 | x1^2 x2^4 [x2, x3]>", PresentationMode::pro_p, 2);
  FiniteGroup g = abelian_group({2, 4, 4});
  SearchOptions one, four;
  four.workers = 4;
  auto a = is_prop_quotient(pr, g, one);
  auto b = is_prop_quotient(pr, g, four);
  CHECK(a.is_quotient == b.is_quotient);
  CHECK(a.witness == b.witness);
  CHECK(a.tuples_examined == b.tuples_examined);
  CHECK(count_epimorphisms(free_presentation(2), symmetric_group(4), one).epimorphisms ==
        count_epimorphisms(free_presentation(2), symmetric_group(4), four).epimorphisms);
}

TEST_CASE("the order-1024 group against the two local relators") {
  FiniteGroup g = order_1024_group();
  SUBCASE("three-generator relator: quotient with a verified witness") {
    Presentation pr = parse_presentation("<a, b, c | a^2 b^4 [b, c]>", PresentationMode::pro_p, 2);
    auto q = is_prop_quotient(pr, g);
    REQUIRE(q.is_quotient);
    REQUIRE(q.witness);
    CHECK(verifies(pr, g, *q.witness));
  }
  SUBCASE("four-generator relator: no quotient after 4096 coset tuples") {
    Presentation pr = parse_presentation("<x0, x1, x2, x3 | x0^4 [x0, x1] [x2, x3]>", PresentationMode::pro_p, 2);
    auto plan = central_reduction_plan(pr, g);
    REQUIRE(plan);
    CHECK(plan->subgroup.size() == 128);
    auto q = central_reduction_quotient_test(pr, g);
    CHECK_FALSE(q.is_quotient);
    CHECK(q.search_space == 4096);
    CHECK(q.tuples_examined == 4096);
    CHECK(q.method == "central-reduction");
  }
  SUBCASE("Heisenberg group is 2-generated") {
    auto q = is_prop_quotient(free_presentation(2, PresentationMode::pro_p, 3), heisenberg_group(3));
    CHECK(q.is_quotient);
  }
  SUBCASE("rank bounds") {
    FiniteGroup e = abelian_group({3, 3, 3});
    CHECK(is_prop_quotient(free_presentation(3, PresentationMode::pro_p, 3), e).is_quotient);
    CHECK_FALSE(is_prop_quotient(free_presentation(2, PresentationMode::pro_p, 3), e).is_quotient);
  }
}
