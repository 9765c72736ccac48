#include <doctest.h>

#include <string>

#include "admiss/group_builders.hpp"
#include "admiss/local_field.hpp"
#include "admiss/metacyclic.hpp"
#include "admiss/numtheory.hpp"
#include "oracles.hpp"

using namespace admiss;

namespace {

// M(m, n, i, t) from the normal form x^a y^b, independent of the library
// builder: (x^a y^b)(x^c y^d) = x^(a+c) y^(b t^c + d), with x^m = y^i.
FiniteGroup metacyclic_by_normal_form(std::uint64_t m, std::uint64_t n, std::uint64_t i, std::uint64_t t) {
  return FiniteGroup::from_product(m * n, [=](Element u, Element v) {
    std::uint64_t a = u / n, b = u % n, c = v / n, d = v % n;
    std::uint64_t tc = 1;
    for (std::uint64_t k = 0; k < c; ++k) tc = tc * t % n;
    std::uint64_t e = (b * tc + d) % n;
    std::uint64_t x = a + c;
    if (x >= m) {
      x -= m;
      e = (e + i) % n;
    }
    return static_cast<Element>(x * n + e);
  });
}

LocalExtensionSpec ext(LocalFieldParams base, std::uint32_t e, std::uint32_t f,
                       DistinguishedField tag = DistinguishedField::none) {
  LocalExtensionSpec out;
  out.base = base;
  out.rel_e = e;
  out.rel_f = f;
  out.tag = tag;
  return out;
}

}  // namespace

TEST_CASE("local field parameters") {
  CHECK(rational_padic(2).s0 == 1);
  CHECK(rational_padic(5).s0 == 0);
  auto k = parse_local_field("p=3,n=2,e=2,f=1,s0=1");
  CHECK(k.n == 2);
  CHECK(k.q == 3);
  CHECK(parse_local_field("Qp(sqrtp):5") == make_local_field(5, 2, 1, 0));
  CHECK(parse_local_field("Q2(i)").s0 == 2);
  CHECK_THROWS_AS(parse_local_field("p=4,e=1,f=1,s0=0"), InputError);
  CHECK_THROWS_AS(parse_local_field("p=3,n=3,e=2,f=1,s0=0"), InputError);
  CHECK_THROWS_AS(parse_local_field("p=5,e=2,f=1,s0=1"), InputError);  // phi(5) does not divide 2
  CHECK_THROWS_AS(parse_local_field("p=2,e=2,f=1,s0=0"), InputError);
  CHECK_THROWS_AS(parse_local_field("Qx"), InputError);
}

TEST_CASE("presentations of maximal p-extensions") {
  SUBCASE("Qp for odd p is free of rank 2") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      auto pr = presentation_of_max_p_extension(rational_padic(p));
      CHECK(pr.is_free());
      CHECK(pr.generator_count() == 2);
      CHECK(pr.mode == PresentationMode::pro_p);
      CHECK(pr.p == p);
    }
  }
  SUBCASE("Q2") {
    auto pr = presentation_of_max_p_extension(rational_padic(2));
    CHECK(pr.to_string() == "<x1,x2,x3 | x1^2 x2^4 [x2,x3]>");
  }
  SUBCASE("Qp(sqrt p) is free of rank 3") {
    for (std::uint32_t p : {3u, 5u, 13u}) {
      auto pr = presentation_of_max_p_extension(parse_local_field("Qp(sqrtp):" + std::to_string(p)));
      CHECK(pr.is_free());
      CHECK(pr.generator_count() == 3);
    }
  }
  SUBCASE("Q2(i) has the fourth-power relator") {
    auto pr = presentation_of_max_p_extension(parse_local_field("Q2(i)"));
    CHECK(pr.to_string() == "<x1,x2,x3,x4 | x1^4 [x1,x2] [x3,x4]>");
  }
  SUBCASE("p^s0 = 2 with n even is refused") {
    CHECK_THROWS_AS(presentation_of_max_p_extension(make_local_field(2, 1, 2, 1)), PreconditionFailed);
  }
}

TEST_CASE("local realizability") {
  for (std::uint32_t p : {3u, 5u}) {
    FiniteGroup g = abelian_group({p, p, p});
    CHECK(is_realizable_local(g, parse_local_field("Qp(sqrtp):" + std::to_string(p))).is_quotient);
    CHECK_FALSE(is_realizable_local(g, rational_padic(p)).is_quotient);
  }
  FiniteGroup big = order_1024_group();
  CHECK(is_realizable_local(big, rational_padic(2)).is_quotient);
  auto over_i = is_realizable_local(big, parse_local_field("Q2(i)"));
  CHECK_FALSE(over_i.is_quotient);
  CHECK(over_i.tuples_examined == 4096);
}

TEST_CASE("power classes and abelianization ranks") {
  CHECK(power_class_count(rational_padic(3), 2) == 4);
  CHECK(power_class_count(rational_padic(5), 2) == 4);
  CHECK(power_class_count(rational_padic(2), 2) == 8);
  CHECK(power_class_count(rational_padic(3), 3) == 9);
  CHECK(power_class_count(parse_local_field("Q2(i)"), 4) == 4 * 4 * 16);
  CHECK(abelianization_rank_mod_p(presentation_of_max_p_extension(rational_padic(2)), 2) == 3);
  CHECK(abelianization_rank_mod_p(presentation_of_max_p_extension(parse_local_field("Q2(i)")), 2) == 4);
  CHECK(abelianization_rank_mod_p(parse_presentation("<a, b | a^3 b^6>"), 3) == 2);
  CHECK(abelianization_rank_mod_p(parse_presentation("<a, b | a b^3>"), 3) == 1);
}

TEST_CASE("sensitivity and transfer routes") {
  const auto q3 = rational_padic(3), q5 = rational_padic(5);
  SUBCASE("p = 7 is never sensitive") {
    for (std::uint32_t e : {1u, 7u})
      for (std::uint32_t f : {1u, 7u}) CHECK_FALSE(classify_extension(ext(rational_padic(7), e, f)).sensitive);
  }
  SUBCASE("the distinguished fields") {
    auto a = classify_extension(ext(q3, 3, 1, DistinguishedField::q3_zeta9_real));
    CHECK(a.sensitive);
    CHECK(a.sensitive_case == 1);
    auto b = classify_extension(ext(q5, 1, 5, DistinguishedField::q5_rho11));
    CHECK(b.sensitive);
    CHECK(b.sensitive_case == 2);
    auto c = classify_extension(ext(q3, 1, 6, DistinguishedField::q3_rho7));
    CHECK(c.sensitive);
    CHECK(c.sensitive_case == 4);
  }
  SUBCASE("a tag on the wrong data is rejected") {
    CHECK_THROWS_AS(classify_extension(ext(q3, 1, 3, DistinguishedField::q3_zeta9_real)), InputError);
    CHECK_THROWS_AS(classify_extension(ext(q3, 1, 5, DistinguishedField::q5_rho11)), InputError);
  }
  SUBCASE("degree prime to p") {
    auto r = transfer_route(ext(rational_padic(5), 2, 1));
    CHECK(r.route == "prime-to-p");
  }
  SUBCASE("other totally ramified cubics keep the parameters") {
    auto v = classify_extension(ext(q3, 3, 1));
    CHECK_FALSE(v.sensitive);
    REQUIRE(v.route);
    CHECK(v.route->route == "totally-ramified, parameters preserved");
  }
  SUBCASE("general inequality") {
    auto r = transfer_route(ext(make_local_field(3, 2, 1, 0), 2, 3));
    CHECK(r.route == "general");
    CHECK(r.has_inequality);
    CHECK(r.lhs == 6);
    CHECK(r.rhs == 4);
    CHECK(r.inequality_holds);
  }
  SUBCASE("sensitive input and p = 2 are outside the route analysis") {
    CHECK_THROWS_AS(transfer_route(ext(q3, 3, 1, DistinguishedField::q3_zeta9_real)), PreconditionFailed);
    CHECK_THROWS_AS(transfer_route(ext(rational_padic(2), 1, 2)), PreconditionFailed);
  }
}

TEST_CASE("census of sensitive extensions") {
  auto c = count_sensitive_extensions();
  CHECK(c.case3_quadratic == 3);
  CHECK(c.case3_cyclic_cubic == 4);
  CHECK(c.s3_epimorphisms == 36);
  CHECK(c.s3_automorphisms == 6);
  CHECK(c.s3_extensions == 6);
  CHECK(c.case3_noncyclic_cubic == 18);
  CHECK(c.total == 29);
  CHECK(c.breakdown() == "1 + 1 + (1 + 3 + (4 + 18)) + 1");
  auto all = list_sensitive_extensions();
  CHECK(all.size() == 29);
  for (const auto& ext : all) CHECK(classify_extension(ext).sensitive);
}

TEST_CASE("relation identity in small metacyclic 2-groups") {
  auto own = two_group_relation_sweep(16, CommutatorReading::conjugate_then_inverse);
  CHECK(own.groups_checked > 0);
  CHECK(own.failures.empty());
  auto standard = two_group_relation_sweep(16, CommutatorReading::standard);
  CHECK(standard.groups_checked == own.groups_checked);
  CHECK(standard.failures.empty());

  // Independent check: every consistent M(m,n,i,t) built from the normal form,
  // s from the library, the word evaluated by hand with [x,y] = x^-1 y x y^-1.
  std::size_t checked = 0;
  for (std::uint64_t m = 1; m <= 16; m *= 2)
    for (std::uint64_t n = 2; n <= 16; n *= 2)
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t t = 1; t < n; t += 2) {
          if (powmod(t, m, n) != 1 || (i * (t - 1)) % n != 0) continue;
          // conjugation by x must fix y^i = x^m: automatic once i(t-1) = 0
          FiniteGroup g = metacyclic_by_normal_form(m, n, i, t);
          const Element x = m == 1 ? static_cast<Element>(i) : static_cast<Element>(n), y = 1;
          const std::uint64_t s = two_group_relation_exponent({m, n, i, t});
          // s (t^2 + 1) t^2 = 1 - t (mod n)
          CHECK((s * (t * t + 1) % n) * (t * t % n) % n == (n + 1 - t % n) % n);
          Element inner = g.mul(oracle::power(g, x, -2), oracle::power(g, y, static_cast<std::int64_t>(s)));
          Element bracket = g.mul(g.mul(g.inv(x), y), g.mul(x, g.inv(y)));
          Element word = g.mul(g.mul(oracle::power(g, inner, 2), oracle::power(g, x, 4)), bracket);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(t);
          CHECK(word == g.identity());
          ++checked;
        }
  CHECK(checked > 100);
}
