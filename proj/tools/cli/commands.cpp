#include "commands.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "admiss/admissibility.hpp"
#include "admiss/brauer.hpp"
#include "admiss/diagram.hpp"
#include "admiss/error.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/group_spec.hpp"
#include "admiss/io.hpp"
#include "admiss/liedahl.hpp"
#include "admiss/local_field.hpp"
#include "admiss/metacyclic.hpp"
#include "admiss/numtheory.hpp"
#include "admiss/word.hpp"

namespace admiss::cli {

namespace {

template <typename T>
std::shared_ptr<T> slot(T init = T{}) {
  return std::make_shared<T>(std::move(init));
}

// Inline JSON is used as is; anything else names a file.
std::string read_input(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PresentationMode parse_mode(const std::string& s) {
  if (s == "abstract" || s == "abstract-finite") return PresentationMode::abstract_finite;
  if (s == "pro-p") return PresentationMode::pro_p;
  if (s == "pro-prime-to-2") return PresentationMode::pro_prime_to_2;
  throw InputError("unknown presentation mode '" + s + "'");
}

QuotientStrategy parse_strategy(const std::string& s) {
  if (s == "auto") return QuotientStrategy::automatic;
  if (s == "backtracking") return QuotientStrategy::backtracking;
  if (s == "central-reduction") return QuotientStrategy::central_reduction;
  throw InputError("unknown strategy '" + s + "'");
}

FiniteGroup group_from_json_file(const Json& root, const Context& ctx) {
  if (!root.contains("group")) throw InputError("input needs a \"group\" entry");
  const auto& g = root.at("group");
  return parse_group_spec(g.is_string() ? g.get<std::string>() : g.dump(), ctx.group);
}

Json parse_json_input(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

bool witness_verified(const Presentation& pr, const FiniteGroup& g, const std::vector<Element>& images) {
  for (const auto& rel : pr.relators)
    if (evaluate_word(rel, images, g) != g.identity()) return false;
  auto torsion = pr.effective_torsion();
  for (std::size_t k = 0; k < images.size(); ++k)
    if (torsion[k] && *torsion[k] % g.element_order(images[k]) != 0) return false;
  return closure(g, images).size() == g.order();
}

void describe_group(Report& r, const FiniteGroup& g, bool list_presentations, std::uint32_t sylow_prime) {
  r.verdict("order", g.order());
  r.verdict("abelian", g.is_abelian());
  auto p = p_group_prime(g);
  r.verdict("p_group", p ? Json(*p) : Json(false));
  auto presentations = enumerate_metacyclic_presentations(g);
  r.verdict("metacyclic", presentations.empty() ? Json(false) : Json(to_string(presentations.front())));
  r.detail("generators", element_labels(g, g.generators()));
  r.detail("center_order", center(g).size());
  r.detail("derived_order", commutator_subgroup(g).size());
  r.detail("exponent", exponent(g));
  r.detail("abelianization", abelianization_invariants(g));
  if (p && g.order() > 1) {
    r.detail("frattini_order", frattini_subgroup(g).size());
    r.detail("generator_rank", minimal_generator_count(g));
  }
  if (list_presentations) {
    Json all = Json::array();
    for (const auto& m : presentations) all.push_back(to_string(m));
    r.detail("metacyclic_presentations", all);
  }
  if (sylow_prime) {
    if (!is_prime(sylow_prime)) throw InputError("--sylow needs a prime");
    FiniteGroup s = subgroup_as_group(g, sylow_subgroup(g, sylow_prime));
    auto m = is_metacyclic(s);
    r.verdict("sylow_order", s.order());
    r.verdict("sylow_metacyclic", m ? Json(to_string(*m)) : Json(false));
  }
}

void add_group_command(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("group", "Describe a finite group given by a spec");
  auto spec = slot<std::string>();
  auto list = slot<bool>(false);
  auto sylow = slot<std::uint32_t>(0);
  cmd->add_option("spec", *spec, "Group spec, e.g. metacyclic:5,25,0,6 or a JSON object")->required();
  cmd->add_flag("--presentations", *list, "List every metacyclic presentation");
  cmd->add_option("--sylow", *sylow, "Also report the Sylow subgroup for this prime");
  cmd->callback([&action, spec, list, sylow] {
    action = [=](Report& r, const Context& ctx) {
      Stopwatch sw;
      FiniteGroup g = parse_group_spec(*spec, ctx.group);
      r.timing("build", sw.ms());
      describe_group(r, g, *list, *sylow);
      r.timing("total", sw.ms());
    };
  });
}

void add_epi_count_command(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("epi-count", "Count epimorphisms from a finitely presented group onto a finite group");
  auto preset = slot<std::string>();
  auto presentation = slot<std::string>();
  auto target = slot<std::string>();
  auto normal = slot<bool>(false);
  cmd->add_option("--preset", *preset, "s3-q3 or free2-c2");
  cmd->add_option("--presentation", *presentation, "Presentation, e.g. \"<a,b | a^2, b^3>\"");
  cmd->add_option("--target", *target, "Target group spec");
  cmd->add_flag("--normal-subgroups", *normal, "Also divide by |Aut(G)|");
  cmd->callback([&action, preset, presentation, target, normal] {
    action = [=](Report& r, const Context& ctx) {
      Presentation pr;
      FiniteGroup g;
      bool with_normal = *normal;
      if (!preset->empty()) {
        if (*preset == "s3-q3") {
          pr = q3_s3_reduced_presentation();
          g = symmetric_group(3, ctx.group);
          with_normal = true;
        } else if (*preset == "free2-c2") {
          pr = free_presentation(2);
          g = cyclic_group(2, ctx.group);
        } else {
          throw InputError("unknown epi-count preset '" + *preset + "'");
        }
      } else {
        if (presentation->empty() || target->empty()) throw InputError("give --preset or both --presentation and --target");
        pr = parse_presentation(*presentation);
        g = parse_group_spec(*target, ctx.group);
      }
      Stopwatch sw;
      r.detail("presentation", pr.to_string());
      r.detail("target_order", g.order());
      if (with_normal) {
        auto c = count_normal_subgroups_with_quotient(pr, g, ctx.search);
        r.verdict("epimorphisms", c.epimorphisms);
        r.verdict("automorphisms", c.automorphisms);
        r.verdict("normal_subgroups", c.normal_subgroups);
      } else {
        auto c = count_epimorphisms(pr, g, ctx.search);
        r.verdict("epimorphisms", c.epimorphisms);
        r.detail("search_space", c.search_space);
      }
      r.timing("count", sw.ms());
    };
  });
}

struct QuotientPreset {
  Presentation presentation;
  FiniteGroup target;
};

QuotientPreset quotient_preset(const std::string& name, const Context& ctx) {
  if (name == "q2-2to10")
    return {presentation_of_max_p_extension(parse_local_field("Q2")), order_1024_group(ctx.group)};
  if (name == "q2i-2to10")
    return {presentation_of_max_p_extension(parse_local_field("Q2(i)")), order_1024_group(ctx.group)};
  throw InputError("unknown quotient-test preset '" + name + "'");
}

void add_quotient_command(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("quotient-test", "Decide whether a finite p-group is a quotient of a presentation");
  auto preset = slot<std::string>();
  auto presentation = slot<std::string>();
  auto target = slot<std::string>();
  auto mode = slot<std::string>("pro-p");
  auto strategy = slot<std::string>("auto");
  cmd->add_option("--preset", *preset, "q2-2to10 or q2i-2to10");
  cmd->add_option("--presentation", *presentation, "Presentation text");
  cmd->add_option("--target", *target, "Target group spec");
  cmd->add_option("--mode", *mode, "abstract-finite, pro-p or pro-prime-to-2");
  cmd->add_option("--strategy", *strategy, "auto, backtracking or central-reduction");
  cmd->callback([&action, preset, presentation, target, mode, strategy] {
    action = [=](Report& r, const Context& ctx) {
      Stopwatch sw;
      Presentation pr;
      FiniteGroup g;
      if (!preset->empty()) {
        auto q = quotient_preset(*preset, ctx);
        pr = std::move(q.presentation);
        g = std::move(q.target);
      } else {
        if (presentation->empty() || target->empty()) throw InputError("give --preset or both --presentation and --target");
        g = parse_group_spec(*target, ctx.group);
        auto p = p_group_prime(g);
        pr = parse_presentation(*presentation, parse_mode(*mode), p ? *p : 0);
      }
      r.timing("build", sw.ms());
      SearchOptions opts = ctx.search;
      opts.strategy = parse_strategy(*strategy);
      auto q = is_prop_quotient(pr, g, opts);
      report_quotient(r, pr, g, q);
      r.timing("search", sw.ms());
    };
  });
}

void add_local_commands(CLI::App& app, Action& action) {
  auto* local = app.add_subcommand("local", "Local fields: presentations, realizability and sensitivity");
  local->require_subcommand(1);

  auto* pres = local->add_subcommand("presentation", "Presentation of the maximal p-extension");
  auto field = slot<std::string>();
  pres->add_option("field", *field, "Q2, Q2(i), Q3, Qp:7, Qp(sqrtp):5 or p=..,e=..,f=..,s0=..")->required();
  pres->callback([&action, field] {
    action = [=](Report& r, const Context&) {
      auto k = parse_local_field(*field);
      auto pr = presentation_of_max_p_extension(k);
      r.verdict("presentation", pr.to_string());
      r.verdict("generators", pr.generator_count());
      r.detail("field", to_string(k));
    };
  });

  auto* realize = local->add_subcommand("realize", "Is G the Galois group of an extension of k (p-groups)");
  auto rfield = slot<std::string>();
  auto rtarget = slot<std::string>();
  realize->add_option("--field", *rfield, "Local field")->required();
  realize->add_option("--target", *rtarget, "Group spec")->required();
  realize->callback([&action, rfield, rtarget] {
    action = [=](Report& r, const Context& ctx) {
      Stopwatch sw;
      auto k = parse_local_field(*rfield);
      FiniteGroup g = parse_group_spec(*rtarget, ctx.group);
      auto q = is_realizable_local(g, k, ctx.search);
      r.verdict("realizable", q.is_quotient);
      r.detail("field", to_string(k));
      report_quotient(r, presentation_of_max_p_extension(k), g, q);
      r.timing("total", sw.ms());
    };
  });

  auto* classify = local->add_subcommand("classify", "Sensitivity and transfer route of l/k");
  auto base = slot<std::string>();
  auto ext = slot<std::string>();
  classify->add_option("--base", *base, "Base field k")->required();
  classify->add_option("--ext", *ext, "Relative data, e.g. e=3,f=1[,tag=zeta9]")->required();
  classify->callback([&action, base, ext] {
    action = [=](Report& r, const Context&) {
      auto spec = parse_local_extension(parse_local_field(*base), *ext);
      auto v = classify_extension(spec);
      r.verdict("sensitive", v.sensitive);
      r.verdict("description", v.description());
      if (v.sensitive) r.verdict("case", v.sensitive_case);
      if (v.route) {
        r.verdict("route", v.route->route);
        if (v.route->has_inequality) r.verdict("inequality", v.route->summary());
        Json steps = Json::array();
        for (const auto& s : v.route->steps) steps.push_back(s);
        r.detail("steps", steps);
      }
      r.detail("base", to_string(spec.base));
      r.detail("degree", spec.degree());
    };
  });

  auto* sensitive = local->add_subcommand("sensitive", "List every sensitive extension");
  sensitive->callback([&action] {
    action = [=](Report& r, const Context& ctx) {
      auto list = list_sensitive_extensions(ctx.search);
      r.verdict("count", list.size());
      Json items = Json::array();
      for (const auto& e : list) items.push_back(e.label);
      r.detail("extensions", items);
    };
  });

  auto* classes = local->add_subcommand("power-classes", "|k^x / (k^x)^m|");
  auto cfield = slot<std::string>();
  auto m = slot<std::uint64_t>(2);
  classes->add_option("field", *cfield, "Local field")->required();
  classes->add_option("m", *m, "Exponent")->required();
  classes->callback([&action, cfield, m] {
    action = [=](Report& r, const Context&) {
      auto k = parse_local_field(*cfield);
      r.verdict("power_classes", power_class_count(k, *m));
      r.detail("field", to_string(k));
    };
  });
}

void add_liedahl_command(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("liedahl", "Liedahl's condition over an abelian number field");
  auto target = slot<std::string>();
  auto field = slot<std::string>();
  auto tame = slot<bool>(false);
  cmd->add_option("--target", *target, "Group spec")->required();
  cmd->add_option("--field", *field, "Q, gaussian, cyclotomic:m, quadratic:d, abelian:f:g1,g2, or A + B")->required();
  cmd->add_flag("--tame", *tame, "Check every Sylow subgroup (solvable G)");
  cmd->callback([&action, target, field, tame] {
    action = [=](Report& r, const Context& ctx) {
      Stopwatch sw;
      FiniteGroup g = parse_group_spec(*target, ctx.group);
      auto k = parse_abelian_field(*field);
      r.detail("field", k.name());
      r.detail("field_degree", k.degree());
      if (*tame) {
        auto v = tame_admissibility_criterion(g, k);
        r.verdict("tame_criterion", v.holds);
        if (!v.holds) r.verdict("reason", v.reason);
        for (const auto& [p, lv] : v.per_prime)
          r.witness("sylow_" + std::to_string(p), lv.witness ? Json(to_string(*lv.witness)) : Json(false));
      } else {
        auto v = liedahl_condition(g, k);
        r.verdict("liedahl", v.holds);
        if (v.witness) r.witness("presentation", to_string(*v.witness));
        r.detail("presentations_scanned", v.presentations_scanned);
      }
      r.timing("total", sw.ms());
    };
  });
}

void add_brauer_commands(CLI::App& app, Action& action) {
  auto* brauer = app.add_subcommand("brauer", "Brauer classes given by local invariants");
  brauer->require_subcommand(1);

  auto* idx = brauer->add_subcommand("index", "Index of a class");
  auto cls = slot<std::string>();
  idx->add_option("class", *cls, "e.g. \"v1@5=1/125, v2@13=-1/125\"")->required();
  idx->callback([&action, cls] {
    action = [=](Report& r, const Context&) {
      auto c = parse_brauer_class(*cls);
      r.verdict("index", index(c));
      r.detail("class", c.to_string());
    };
  });

  auto* res = brauer->add_subcommand("restrict", "Restriction to a larger field");
  auto rcls = slot<std::string>();
  auto rext = slot<std::string>();
  res->add_option("class", *rcls, "Class over K")->required();
  res->add_option("extension", *rext, "e.g. \"v1@5 > w1@5:1, w2@5:1 ; v2@13 > w3@13:5\"")->required();
  res->callback([&action, rcls, rext] {
    action = [=](Report& r, const Context&) {
      auto c = parse_brauer_class(*rcls);
      auto e = parse_extension_data(*rext);
      auto out = restrict(c, e);
      r.verdict("restriction", out.to_string());
      r.verdict("index", index(out));
    };
  });

  auto* img = brauer->add_subcommand("image", "Is a class over M restricted from K");
  auto icls = slot<std::string>();
  auto iext = slot<std::string>();
  img->add_option("class", *icls, "Class over M")->required();
  img->add_option("extension", *iext, "Extension place data")->required();
  img->callback([&action, icls, iext] {
    action = [=](Report& r, const Context&) {
      auto c = parse_brauer_class(*icls);
      auto e = parse_extension_data(*iext);
      auto out = in_restriction_image(c, e);
      r.verdict("in_image", out.in_image);
      if (out.witness) r.witness("base_class", out.witness->to_string());
      if (!out.in_image) r.verdict("obstruction", out.obstruction);
    };
  });

  auto* maxo = brauer->add_subcommand("max-order", "Largest element order with local invariants in (1/d_v)Z/Z");
  auto degrees = slot<std::vector<std::uint64_t>>();
  maxo->add_option("degrees", *degrees, "Local degrees d_v")->required();
  maxo->callback([&action, degrees] {
    action = [=](Report& r, const Context&) { r.verdict("max_order", max_order_in_relative_brauer(*degrees)); };
  });

  auto* adeq = brauer->add_subcommand("adequate", "Adequacy test from local degree data");
  auto order = slot<std::uint64_t>(0);
  auto aext = slot<std::string>();
  auto tame = slot<bool>(false);
  adeq->add_option("--order", *order, "|G| = [L : K]")->required();
  adeq->add_option("extension", *aext, "Extension place data (degrees of L over K)")->required();
  adeq->add_flag("--tame", *tame, "Use tame parts f * (prime-to-p part of e)");
  adeq->callback([&action, order, aext, tame] {
    action = [=](Report& r, const Context&) {
      auto e = parse_extension_data(*aext);
      auto d = relative_brauer_degrees(e, *tame);
      r.verdict("adequate", is_adequate_degree_data(*order, d));
      r.detail("degrees", d);
      r.detail("max_order", max_order_in_relative_brauer(d));
    };
  });
}

Json certificate_json(const AdmissibilityCertificate& cert) {
  Json out = Json::array();
  for (const auto& a : cert.assignments) {
    Json entry = Json::object();
    entry["prime"] = a.prime;
    entry["places"] = {a.places[0].label, a.places[1].label};
    entry["subgroup_orders"] = {a.subgroups[0].size(), a.subgroups[1].size()};
    out.push_back(entry);
  }
  return out;
}

void report_transfer(Report& r, const TransferInput& in) {
  auto v = extension_admissibility_verdict(in);
  r.verdict("verdict", to_string(v.kind));
  if (!v.reason.empty()) r.verdict("reason", v.reason);
  for (const auto& [p, route] : v.routes) r.witness("route_" + std::to_string(p), route);
}

void add_admissible_commands(CLI::App& app, Action& action) {
  auto* adm = app.add_subcommand("admissible", "Certificate-level admissibility");
  adm->require_subcommand(1);

  auto* check = adm->add_subcommand("check", "Schacher's criterion on a given certificate");
  auto cfile = slot<std::string>();
  check->add_option("input", *cfile, "JSON file or inline JSON with group and certificate")->required();
  check->callback([&action, cfile] {
    action = [=](Report& r, const Context& ctx) {
      auto text = read_input(*cfile);
      FiniteGroup g = group_from_json_file(parse_json_input(text), ctx);
      auto cert = parse_certificate(g, text);
      r.verdict("schacher", schacher_check(g, cert));
      r.detail("certificate", cert.to_string());
    };
  });

  auto* search = adm->add_subcommand("search", "Find a preadmissibility certificate by matching");
  auto sfile = slot<std::string>();
  auto pairwise = slot<bool>(false);
  search->add_option("input", *sfile, "JSON file or inline JSON with group and facts")->required();
  search->add_flag("--pairwise", *pairwise, "Only the two places of each prime must differ");
  search->callback([&action, sfile, pairwise] {
    action = [=](Report& r, const Context& ctx) {
      auto text = read_input(*sfile);
      FiniteGroup g = group_from_json_file(parse_json_input(text), ctx);
      auto facts = parse_local_facts(g, text);
      MatchingOptions opts;
      opts.distinctness = *pairwise ? Distinctness::pairwise : Distinctness::all_distinct;
      auto cert = preadmissibility_search(g, facts, opts);
      r.verdict("preadmissible", cert.has_value());
      if (cert) {
        r.witness("certificate", certificate_json(*cert));
        r.verdict("schacher", schacher_check(g, *cert));
      }
    };
  });

  auto* wild = adm->add_subcommand("wildness", "Is a fully tame certificate available");
  auto wfile = slot<std::string>();
  auto wpair = slot<bool>(false);
  wild->add_option("input", *wfile, "JSON file or inline JSON with group and facts")->required();
  wild->add_flag("--pairwise", *wpair, "Only the two places of each prime must differ");
  wild->callback([&action, wfile, wpair] {
    action = [=](Report& r, const Context& ctx) {
      auto text = read_input(*wfile);
      FiniteGroup g = group_from_json_file(parse_json_input(text), ctx);
      auto facts = parse_local_facts(g, text);
      auto v = classify_wildness(g, facts, *wpair ? Distinctness::pairwise : Distinctness::all_distinct);
      r.verdict("wildness", to_string(v.kind));
      if (v.certificate) r.witness("certificate", certificate_json(*v.certificate));
    };
  });

  auto* transfer = adm->add_subcommand("transfer", "Transfer theorem verdict for M/K");
  auto tfile = slot<std::string>();
  transfer->add_option("input", *tfile, "JSON file or inline JSON")->required();
  transfer->callback([&action, tfile] {
    action = [=](Report& r, const Context&) { report_transfer(r, parse_transfer_input(read_input(*tfile))); };
  });

  auto* diagram = adm->add_subcommand("diagram", "Implication closure and separation ledger");
  diagram->callback([&action] {
    action = [=](Report& r, const Context&) {
      auto closure = diagram_closure();
      auto report = ledger_check(separation_ledger(), closure);
      r.verdict("acyclic", is_acyclic(closure));
      r.verdict("consistent", report.consistent);
      r.verdict("complete", report.complete());
      Json pairs = Json::array();
      for (auto [a, b] : closure.pairs()) pairs.push_back(std::to_string(a) + "=>" + std::to_string(b));
      r.detail("closure", pairs);
      r.detail("refuted_pairs", report.refuted.size());
      for (std::size_t k = 0; k < report.refuted.size(); ++k) {
        auto [a, b] = report.refuted[k];
        r.witness(std::to_string(a) + "=/=>" + std::to_string(b), report.refuting_example[k]);
      }
      for (const auto& c : report.conflicts) r.detail("conflict", c);
    };
  });
}

void add_paper_suite_command(CLI::App& app, Action& action) {
  auto* cmd = app.add_subcommand("paper-suite", "Reproduce a named fixture ('list' shows them)");
  auto name = slot<std::string>();
  cmd->add_option("preset", *name, "Preset name, 'list' or 'all'")->required();
  cmd->callback([&action, name] {
    action = [=](Report& r, const Context& ctx) {
      const auto& presets = paper_suite_presets();
      if (*name == "list") {
        for (const auto& p : presets) r.detail(p.name, p.summary);
        return;
      }
      bool found = false;
      for (const auto& p : presets) {
        if (*name != "all" && p.name != *name) continue;
        found = true;
        if (*name == "all") {
          Report sub;
          Stopwatch sw;
          p.run(sub, ctx);
          r.detail(p.name, "done");
          r.timing(p.name, sw.ms());
        } else {
          p.run(r, ctx);
        }
      }
      if (!found) throw InputError("unknown paper-suite preset '" + *name + "'");
    };
  });
}

}  // namespace

Json element_labels(const FiniteGroup& g, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (auto e : elements) out.push_back(g.label(e));
  return out;
}

void report_quotient(Report& r, const Presentation& pr, const FiniteGroup& g, const QuotientResult& q) {
  r.verdict("quotient", q.is_quotient);
  r.verdict("method", q.method);
  if (q.witness) {
    r.witness("images", element_labels(g, *q.witness));
    r.witness("verified", witness_verified(pr, g, *q.witness));
  }
  r.detail("presentation", pr.to_string());
  r.detail("target_order", g.order());
  r.detail("search_space", q.search_space);
  r.detail("tuples_examined", q.tuples_examined);
  if (q.method == "central-reduction") r.detail("reduction_subgroup_order", q.reduction_subgroup_order);
  if (!q.note.empty()) r.detail("note", q.note);
}

void register_commands(CLI::App& app, Action& action) {
  add_group_command(app, action);
  add_epi_count_command(app, action);
  add_quotient_command(app, action);
  add_local_commands(app, action);
  add_liedahl_command(app, action);
  add_brauer_commands(app, action);
  add_admissible_commands(app, action);
  add_paper_suite_command(app, action);
}

}  // namespace admiss::cli
