#include <doctest.h>

#include <vector>

#include "admiss/group.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/group_spec.hpp"
#include "admiss/isomorphism.hpp"
#include "admiss/metacyclic.hpp"
#include "oracles.hpp"

using namespace admiss;

TEST_CASE("tables that are not groups are rejected") {
  // x*y = x is associative but has no two-sided identity
  std::vector<Element> left_zero = {0, 0, 1, 1};
  CHECK_THROWS_AS(FiniteGroup::from_table(2, left_zero), InputError);
  // a Latin square that fails associativity: x*y = (-x - y) mod 3
  std::vector<Element> latin(9);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) latin[x * 3 + y] = (6 - x - y) % 3;
  CHECK_THROWS_AS(FiniteGroup::from_table(3, latin), InputError);
  CHECK_THROWS_AS(cyclic_group(5000), InputError);
}

TEST_CASE("metacyclic construction") {
  SUBCASE("m = 1 gives a cyclic group") {
    FiniteGroup g = build_metacyclic({1, 7, 0, 1});
    CHECK(g.order() == 7);
    CHECK(g.is_abelian());
    CHECK(oracle::exponent(g) == 7);
  }
  SUBCASE("M(2,4,2,3) is the quaternion group") {
    FiniteGroup g = build_metacyclic({2, 4, 2, 3});
    FiniteGroup q8 = oracle::quaternion_table();
    CHECK(oracle::isomorphic(g, q8));
    CHECK(are_isomorphic(g, q8));
    CHECK_FALSE(are_isomorphic(build_metacyclic({2, 4, 0, 3}), q8));
  }
  SUBCASE("M(3,9,9,4) is nonabelian of order 27 and exponent 9") {
    FiniteGroup g = build_metacyclic({3, 9, 9, 4});
    CHECK(g.order() == 27);
    CHECK_FALSE(g.is_abelian());
    CHECK(oracle::exponent(g) == 9);
    CHECK(exponent(g) == 9);
  }
  SUBCASE("inconsistent data names the congruence") {
    CHECK_THROWS_WITH_AS(build_metacyclic({2, 5, 0, 2}), doctest::Contains("t^m"), InputError);
    CHECK_THROWS_AS(build_metacyclic({2, 4, 1, 3}), InputError);
    CHECK_THROWS_AS(build_metacyclic({2, 4, 0, 2}), InputError);
  }
}

TEST_CASE("central extensions") {
  SUBCASE("trivial cocycle gives an elementary abelian direct product") {
    CentralExtensionSpec s;
    s.p = 3;
    s.rank = 2;
    s.center = {3};
    FiniteGroup g = build_central_extension(s);
    CHECK(g.order() == 27);
    CHECK(g.is_abelian());
    CHECK(oracle::exponent(g) == 3);
  }
  SUBCASE("Heisenberg group of order 27") {
    FiniteGroup h = heisenberg_group(3);
    CHECK(h.order() == 27);
    CHECK(oracle::center_order(h) == 3);
    CHECK(center(h).size() == 3);
    CHECK(oracle::exponent(h) == 3);
  }
  SUBCASE("the order-1024 group") {
    FiniteGroup g = order_1024_group();
    CHECK(g.order() == 1024);
    Subgroup z = center(g);
    CHECK(z.size() == 128);
    CHECK(oracle::center_order(g) == 128);
    CHECK(frattini_subgroup(g) == z);
    CHECK(oracle::frattini_order_p_group(g, 2) == 128);
    CHECK(minimal_generator_count(g) == 3);
  }
}

TEST_CASE("semidirect products") {
  SUBCASE("trivial action gives the direct product") {
    FiniteGroup n = cyclic_group(3), h = cyclic_group(4);
    FiniteGroup sd = semidirect_product(n, h, {{1, {0, 1, 2}}});
    CHECK(sd.order() == 12);
    CHECK(sd.is_abelian());
    CHECK(are_isomorphic(sd, cyclic_group(12)));
  }
  SUBCASE("an action that is not a homomorphism is rejected") {
    FiniteGroup n = cyclic_group(3), h = cyclic_group(3);
    // inversion has order 2, so it cannot be the image of a generator of order 3
    CHECK_THROWS_AS(semidirect_product(n, h, {{1, {0, 2, 1}}}), InputError);
  }
  SUBCASE("wreath product of order 81") {
    FiniteGroup w = wreath_fp_cp(3);
    CHECK(w.order() == 81);
    CHECK_FALSE(w.is_abelian());
    CHECK(oracle::minimal_generators(w) == 2);
    CHECK(minimal_generator_count(w) == 2);
  }
  SUBCASE("the Heisenberg action needs at least four generators") {
    GroupOptions big;
    big.max_order = 15625;
    FiniteGroup g = heisenberg_action_product(5, big);
    CHECK(g.order() == 15625);
    CHECK(minimal_generator_count(g) >= 4);
  }
}

TEST_CASE("Sylow subgroups") {
  FiniteGroup c12 = cyclic_group(12);
  Subgroup s2 = sylow_subgroup(c12, 2);
  CHECK(s2.size() == 4);
  CHECK(are_isomorphic(subgroup_as_group(c12, s2), cyclic_group(4)));
  FiniteGroup h = heisenberg_group(3);
  CHECK(sylow_subgroup(h, 3) == whole_group(h));
  FiniteGroup s3 = symmetric_group(3);
  Subgroup s = sylow_subgroup(s3, 3);
  CHECK(s.size() == 3);
  CHECK(is_normal(s3, s));
  // deterministic
  FiniteGroup s4 = symmetric_group(4);
  CHECK(sylow_subgroup(s4, 2) == sylow_subgroup(s4, 2));
  CHECK(sylow_subgroup(s4, 2).size() == 8);
  CHECK(sylow_subgroup(s4, 5).size() == 1);
}

TEST_CASE("generator counts agree with subset search") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    FiniteGroup g = abelian_group({p, p, p});
    CHECK(minimal_generator_count(g) == 3);
  }
  for (const FiniteGroup& g : {heisenberg_group(3), build_metacyclic({2, 8, 0, 3}), abelian_group({2, 4}),
                               abelian_group({2, 2, 2, 2})}) {
    CHECK(minimal_generator_count(g) == oracle::minimal_generators(g));
    auto p = p_group_prime(g);
    REQUIRE(p);
    CHECK(frattini_subgroup(g).size() == oracle::frattini_order_p_group(g, *p));
  }
}

TEST_CASE("metacyclic detection matches exhaustive pair search") {
  SUBCASE("elementary abelian of rank 3 is not metacyclic") {
    CHECK_FALSE(is_metacyclic(abelian_group({3, 3, 3})));
  }
  SUBCASE("quaternion group") {
    FiniteGroup q8 = oracle::quaternion_table();
    auto all = enumerate_metacyclic_presentations(q8);
    auto brute = oracle::metacyclic_presentations(q8);
    CHECK(std::set<MetacyclicParams>(all.begin(), all.end()) == brute);
    CHECK(brute.count({2, 4, 2, 3}) == 1);
  }
  SUBCASE("Heisenberg group") {
    FiniteGroup h = heisenberg_group(3);
    CHECK(oracle::metacyclic_presentations(h).empty());
    CHECK_FALSE(is_metacyclic(h));
  }
  SUBCASE("several metacyclic groups") {
    for (MetacyclicParams p : {MetacyclicParams{2, 8, 0, 3}, {4, 8, 4, 5}, {3, 9, 0, 4}, {2, 9, 0, 8}, {5, 25, 0, 6}}) {
      FiniteGroup g = build_metacyclic(p);
      auto all = enumerate_metacyclic_presentations(g);
      CHECK(std::set<MetacyclicParams>(all.begin(), all.end()) == oracle::metacyclic_presentations(g));
      CHECK(std::count(all.begin(), all.end(), normalized(p)) == 1);
    }
  }
}

TEST_CASE("group specs") {
  CHECK(parse_group_spec("metacyclic:5,25,25,6").order() == 125);
  CHECK(parse_group_spec(R"({"abelian": [3, 3, 3]})").order() == 27);
  CHECK(parse_group_spec(R"({"direct_product": [{"cyclic": 2}, {"symmetric": 3}]})").order() == 12);
  CHECK(parse_group_spec("paper_2_10").order() == 1024);
  CHECK_THROWS_AS(parse_group_spec("nosuch:3"), InputError);
  CHECK_THROWS_AS(parse_group_spec("{\"cyclic\": "), InputError);
  CHECK_THROWS_AS(parse_group_spec(R"({"cyclic": 5000})"), InputError);
  CHECK(parse_group_spec(R"({"cyclic": 5000, "max_order": 8000})").order() == 5000);
}
