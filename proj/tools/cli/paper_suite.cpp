#include "admiss/admissibility.hpp"
#include "admiss/brauer.hpp"
#include "admiss/diagram.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/liedahl.hpp"
#include "admiss/local_field.hpp"
#include "admiss/metacyclic.hpp"
#include "commands.hpp"

namespace admiss::cli {

namespace {

void sensitive_count(Report& r, const Context& ctx) {
  Stopwatch sw;
  auto c = count_sensitive_extensions(ctx.search);
  r.verdict("total", c.total);
  r.verdict("breakdown", c.breakdown());
  r.detail("case1_zeta9", c.case1);
  r.detail("case2_rho11", c.case2);
  r.detail("case3_degree1", c.case3_degree1);
  r.detail("case3_quadratic", c.case3_quadratic);
  r.detail("case3_cyclic_cubic", c.case3_cyclic_cubic);
  r.detail("s3_epimorphisms", c.s3_epimorphisms);
  r.detail("s3_automorphisms", c.s3_automorphisms);
  r.detail("s3_extensions", c.s3_extensions);
  r.detail("s3_involutions", c.s3_involutions);
  r.detail("case3_noncyclic_cubic", c.case3_noncyclic_cubic);
  r.detail("case4_rho7", c.case4);
  r.timing("census", sw.ms());
}

void s3_epimorphisms(Report& r, const Context& ctx) {
  Stopwatch sw;
  auto pr = q3_s3_reduced_presentation();
  auto c = count_normal_subgroups_with_quotient(pr, symmetric_group(3, ctx.group), ctx.search);
  r.verdict("epimorphisms", c.epimorphisms);
  r.verdict("automorphisms", c.automorphisms);
  r.verdict("normal_subgroups", c.normal_subgroups);
  r.detail("presentation", pr.to_string());
  r.timing("count", sw.ms());
}

void order_1024(Report& r, const Context& ctx, const char* field) {
  Stopwatch sw;
  auto k = parse_local_field(field);
  auto pr = presentation_of_max_p_extension(k);
  FiniteGroup g = order_1024_group(ctx.group);
  auto q = is_prop_quotient(pr, g, ctx.search);
  r.detail("field", to_string(k));
  report_quotient(r, pr, g, q);
  r.timing("search", sw.ms());
}

void local_realizability(Report& r, const Context& ctx) {
  Stopwatch sw;
  for (std::uint32_t p : {3u, 5u}) {
    FiniteGroup g = abelian_group({p, p, p}, ctx.group);
    const std::string suffix = "_" + std::to_string(p);
    auto ramified = parse_local_field("Qp(sqrtp):" + std::to_string(p));
    r.verdict("elementary_rank3_over_Qp(sqrtp)" + suffix, is_realizable_local(g, ramified, ctx.search).is_quotient);
    r.verdict("elementary_rank3_over_Qp" + suffix, is_realizable_local(g, rational_padic(p), ctx.search).is_quotient);
  }
  FiniteGroup big = order_1024_group(ctx.group);
  r.verdict("order_1024_over_Q2", is_realizable_local(big, parse_local_field("Q2"), ctx.search).is_quotient);
  r.verdict("order_1024_over_Q2(i)", is_realizable_local(big, parse_local_field("Q2(i)"), ctx.search).is_quotient);
  r.timing("total", sw.ms());
}

void liedahl_fixture(Report& r, const Context& ctx, const std::string& tag, MetacyclicParams params,
                     std::uint64_t holds_over, std::uint64_t fails_over) {
  FiniteGroup g = build_metacyclic(params, ctx.group);
  auto yes = liedahl_condition(g, AbelianFieldSpec::cyclotomic(holds_over));
  auto no = liedahl_condition(g, AbelianFieldSpec::cyclotomic(fails_over));
  const std::string base = tag + "_over_Q(mu_";
  r.verdict(base + std::to_string(holds_over) + ")", yes.holds);
  r.witness(base + std::to_string(holds_over) + ")", yes.witness ? Json(to_string(*yes.witness)) : Json(false));
  r.verdict(base + std::to_string(fails_over) + ")", no.holds);
  r.detail(tag + "_presentations_scanned", no.presentations_scanned);
}

void liedahl_fixtures(Report& r, const Context& ctx) {
  Stopwatch sw;
  liedahl_fixture(r, ctx, "M(5,25,25,6)", {5, 25, 25, 6}, 5, 100);
  liedahl_fixture(r, ctx, "M(3,9,9,4)", {3, 9, 9, 4}, 3, 36);
  r.timing("total", sw.ms());
}

void relation_identity(Report& r, const Context&) {
  Stopwatch sw;
  auto own = two_group_relation_sweep(16, CommutatorReading::conjugate_then_inverse);
  auto standard = two_group_relation_sweep(16, CommutatorReading::standard);
  r.verdict("groups_checked", own.groups_checked);
  r.verdict("failures", own.failures.size());
  r.verdict("failures_standard_bracket_with_minus_s", standard.failures.size());
  r.detail("range", "m, n powers of 2 up to 16");
  r.timing("sweep", sw.ms());
}

void brauer_fixtures(Report& r, const Context&) {
  const std::int64_t p = 5, p3 = p * p * p;
  const PlaceId nu{"nu", 5}, w{"w", 13};

  // Split place: p divisors of degree 1. Inert place: one divisor of degree p.
  ExtensionPlaceData split_inert;
  std::vector<DivisorData> above_nu;
  for (int k = 1; k <= p; ++k) above_nu.push_back({PlaceId{"nu" + std::to_string(k), 5}, 1, 1, 1});
  split_inert.places = {{nu, above_nu}, {w, {{PlaceId{"w'", 13}, 5, 1, 5}}}};
  auto d0 = make_class({{nu, QZ(1, p3)}, {w, QZ(-1, p3)}});
  auto restricted = restrict(d0, split_inert);
  r.detail("D0", d0.to_string());
  r.verdict("index_D0", index(d0));
  r.verdict("restriction_D0", restricted.to_string());
  r.verdict("index_restriction", index(restricted));

  // Two places with a unique divisor each, of full degree p^3.
  ExtensionPlaceData uniform;
  uniform.places = {{PlaceId{"nu1", 5}, {{PlaceId{"pi1", 5}, static_cast<std::uint64_t>(p3), 1, static_cast<std::uint64_t>(p3)}}},
                    {PlaceId{"nu2", 5}, {{PlaceId{"pi2", 5}, static_cast<std::uint64_t>(p3), 1, static_cast<std::uint64_t>(p3)}}}};
  auto d = make_class({{PlaceId{"pi1", 5}, QZ(1, p3)}, {PlaceId{"pi2", 5}, QZ(-1, p3)}});
  auto in = in_restriction_image(d, uniform);
  r.verdict("uniform_in_image", in.in_image);
  r.witness("uniform_base_class", in.witness ? Json(in.witness->to_string()) : Json(false));

  // One place of K with two divisors of degree 1 in M.
  ExtensionPlaceData same_place;
  same_place.places = {{PlaceId{"nu", 5}, {{PlaceId{"nu1", 5}, 1, 1, 1}, {PlaceId{"nu2", 5}, 1, 1, 1}}}};
  auto mixed = make_class({{PlaceId{"nu1", 5}, QZ(1, p3)}, {PlaceId{"nu2", 5}, QZ(-1, p3)}});
  auto out = in_restriction_image(mixed, same_place);
  r.verdict("distinct_m_in_image", out.in_image);
  r.verdict("distinct_m_obstruction", out.obstruction);
  try {
    make_class({{PlaceId{"nu1", 5}, QZ(1, p3)}, {PlaceId{"nu2", 5}, QZ(1, p3)}});
    r.verdict("equal_m_class", "accepted");
  } catch (const std::exception& e) {
    r.verdict("equal_m_class", std::string("rejected: ") + e.what());
  }
}

void diagram(Report& r, const Context&) {
  auto closure = diagram_closure();
  auto report = ledger_check(separation_ledger(), closure);
  r.verdict("acyclic", is_acyclic(closure));
  r.verdict("consistent", report.consistent);
  r.verdict("closure_pairs", closure.pairs().size());
  r.verdict("refuted_pairs", report.refuted.size());
  r.verdict("unrefuted_pairs", report.unrefuted.size());
  for (std::size_t k = 0; k < report.refuted.size(); ++k) {
    auto [a, b] = report.refuted[k];
    r.witness(std::to_string(a) + "=/=>" + std::to_string(b), report.refuting_example[k]);
  }
}

void heisenberg_wildness(Report& r, const Context& ctx) {
  FiniteGroup g = heisenberg_group(3, ctx.group);
  std::vector<LocalFact> facts = {
      {PlaceId{"v1", 3}, {whole_group(g)}, {false}},
      {PlaceId{"v2", 3}, {whole_group(g)}, {false}},
  };
  auto v = classify_wildness(g, facts);
  r.verdict("wildness", to_string(v.kind));
  r.verdict("metacyclic", is_metacyclic(g).has_value());
  if (v.certificate) r.witness("certificate", v.certificate->to_string());
}

void transfer_example(Report& r, const Context&) {
  // Metacyclic G of order p^3 with p = 13; p has exactly two divisors in M.
  TransferInput divisors{2197, true, true, false, {{13, 2, true, false}}};
  TransferInput unique_divisor{2197, true, true, false, {{13, 1, false, false}}};
  TransferInput sensitive{2197, true, true, true, {{13, 2, true, false}}};
  auto a = extension_admissibility_verdict(divisors);
  auto b = extension_admissibility_verdict(unique_divisor);
  auto c = extension_admissibility_verdict(sensitive);
  r.verdict("two_divisors", to_string(a.kind));
  r.witness("two_divisors_route", a.routes.empty() ? Json(false) : Json(a.routes.front().second));
  r.verdict("unique_divisor_nonmetacyclic", to_string(b.kind));
  r.detail("unique_divisor_reason", b.reason);
  r.verdict("sensitive_extension", to_string(c.kind));
  r.detail("sensitive_reason", c.reason);
}

}  // namespace

const std::vector<Preset>& paper_suite_presets() {
  static const std::vector<Preset> presets = {
      {"sensitive-count", "Census of the sensitive local extensions", sensitive_count},
      {"s3-q3", "Epimorphisms from the reduced presentation onto S3", s3_epimorphisms},
      {"q2-2to10", "Order-1024 group as a quotient over Q2",
       [](Report& r, const Context& c) { order_1024(r, c, "Q2"); }},
      {"q2i-2to10", "Order-1024 group as a quotient over Q2(i)",
       [](Report& r, const Context& c) { order_1024(r, c, "Q2(i)"); }},
      {"local-realizability", "Elementary abelian rank 3 and the order-1024 group over small fields",
       local_realizability},
      {"liedahl-fixtures", "Liedahl's condition for M(5,25,25,6) and M(3,9,9,4)", liedahl_fixtures},
      {"relation-identity", "Metacyclic relation word over every small 2-group", relation_identity},
      {"brauer-fixtures", "Restriction and image of explicit Brauer classes", brauer_fixtures},
      {"diagram", "Implication closure against the separation ledger", diagram},
      {"heisenberg-wildness", "Heisenberg group of order 27 with 3-adic facts only", heisenberg_wildness},
      {"transfer-example", "Transfer verdicts for a metacyclic group of order 13^3", transfer_example},
  };
  return presets;
}

}  // namespace admiss::cli
