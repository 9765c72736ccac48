// Python bindings. Inputs use the same text forms as the command line, and
// results come back as plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "admiss/admissibility.hpp"
#include "admiss/brauer.hpp"
#include "admiss/diagram.hpp"
#include "admiss/epimorphism.hpp"
#include "admiss/error.hpp"
#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/group_spec.hpp"
#include "admiss/io.hpp"
#include "admiss/liedahl.hpp"
#include "admiss/local_field.hpp"
#include "admiss/presentation.hpp"

namespace py = pybind11;
using namespace admiss;

namespace {

SearchOptions search_options(std::uint64_t budget, unsigned workers) {
  SearchOptions opts;
  if (budget) opts.budget = budget;
  opts.workers = workers;
  return opts;
}

PresentationMode parse_mode(const std::string& mode) {
  if (mode == "finite") return PresentationMode::abstract_finite;
  if (mode == "pro-p") return PresentationMode::pro_p;
  if (mode == "pro-odd") return PresentationMode::pro_prime_to_2;
  throw InputError("unknown presentation mode '" + mode + "' (finite, pro-p, pro-odd)");
}

py::dict quotient_dict(const QuotientResult& q) {
  py::dict d;
  d["is_quotient"] = q.is_quotient;
  d["method"] = q.method;
  d["note"] = q.note;
  d["search_space"] = q.search_space;
  d["tuples_examined"] = q.tuples_examined;
  d["reduction_subgroup_order"] = q.reduction_subgroup_order;
  if (q.witness)
    d["witness"] = std::vector<std::uint32_t>(q.witness->begin(), q.witness->end());
  else
    d["witness"] = py::none();
  return d;
}

std::vector<std::string> implication_strings(const std::vector<Implication>& edges) {
  std::vector<std::string> out;
  for (auto [a, b] : edges) out.push_back(std::to_string(a) + "=>" + std::to_string(b));
  return out;
}

MatchingOptions matching(const std::string& distinctness, bool avoid_residue) {
  MatchingOptions opts;
  if (distinctness == "pairwise")
    opts.distinctness = Distinctness::pairwise;
  else if (distinctness != "all-distinct")
    throw InputError("unknown distinctness '" + distinctness + "' (all-distinct, pairwise)");
  opts.avoid_residue_characteristic = avoid_residue;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-group admissibility computations";

  static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
  static py::exception<PreconditionFailed> precondition_error(m, "PreconditionFailed", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      py::set_error(budget_error, e.what());
    } catch (const PreconditionFailed& e) {
      py::set_error(precondition_error, e.what());
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("labels", &FiniteGroup::labels)
      .def_property_readonly("generators", &FiniteGroup::generators)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("center_order", [](const FiniteGroup& g) { return center(g).size(); })
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  m.def(
      "group",
      [](const std::string& spec, std::size_t max_order) {
        GroupOptions opts;
        if (max_order) opts.max_order = max_order;
        return parse_group_spec(spec, opts);
      },
      py::arg("spec"), py::arg("max_order") = 0, "Build a group from a spec such as 'cyclic:8' or 'metacyclic:5,25,25,6'.");

  m.def(
      "count_epimorphisms",
      [](const std::string& presentation, const std::string& group, const std::string& mode, std::uint32_t p,
         std::uint64_t budget, unsigned workers) {
        auto pr = parse_presentation(presentation, parse_mode(mode), p);
        auto g = parse_group_spec(group);
        auto c = count_normal_subgroups_with_quotient(pr, g, search_options(budget, workers));
        py::dict d;
        d["epimorphisms"] = c.epimorphisms;
        d["automorphisms"] = c.automorphisms;
        d["normal_subgroups"] = c.normal_subgroups;
        return d;
      },
      py::arg("presentation"), py::arg("group"), py::arg("mode") = "finite", py::arg("p") = 0, py::arg("budget") = 0,
      py::arg("workers") = 1);

  m.def(
      "quotient_test",
      [](const std::string& presentation, const std::string& group, std::uint32_t p, std::uint64_t budget,
         unsigned workers, std::size_t max_order) {
        GroupOptions gopts;
        if (max_order) gopts.max_order = max_order;
        auto pr = parse_presentation(presentation, PresentationMode::pro_p, p);
        return quotient_dict(is_prop_quotient(pr, parse_group_spec(group, gopts), search_options(budget, workers)));
      },
      py::arg("presentation"), py::arg("group"), py::arg("p"), py::arg("budget") = 0, py::arg("workers") = 1,
      py::arg("max_order") = 0, "Is the group a quotient of the pro-p completion of the presentation?");

  m.def(
      "max_p_extension_presentation",
      [](const std::string& field) { return presentation_of_max_p_extension(parse_local_field(field)).to_string(); },
      py::arg("field"));

  m.def(
      "local_realizable",
      [](const std::string& group, const std::string& field, std::uint64_t budget, unsigned workers) {
        return quotient_dict(
            is_realizable_local(parse_group_spec(group), parse_local_field(field), search_options(budget, workers)));
      },
      py::arg("group"), py::arg("field"), py::arg("budget") = 0, py::arg("workers") = 1);

  m.def("sensitive_census", []() {
    auto c = count_sensitive_extensions();
    py::dict d;
    d["total"] = c.total;
    d["breakdown"] = c.breakdown();
    d["case1"] = c.case1;
    d["case2"] = c.case2;
    d["case3_degree1"] = c.case3_degree1;
    d["case3_quadratic"] = c.case3_quadratic;
    d["case3_cyclic_cubic"] = c.case3_cyclic_cubic;
    d["case3_noncyclic_cubic"] = c.case3_noncyclic_cubic;
    d["s3_extensions"] = c.s3_extensions;
    d["case4"] = c.case4;
    return d;
  });

  m.def(
      "liedahl",
      [](const std::string& group, const std::string& field) {
        auto v = liedahl_condition(parse_group_spec(group), parse_abelian_field(field));
        py::dict d;
        d["holds"] = v.holds;
        d["witness"] = v.witness ? py::cast(to_string(*v.witness)) : py::none();
        d["presentations_scanned"] = v.presentations_scanned;
        return d;
      },
      py::arg("group"), py::arg("field"));

  m.def(
      "brauer_index", [](const std::string& cls) { return index(parse_brauer_class(cls)); }, py::arg("cls"));
  m.def(
      "brauer_restrict",
      [](const std::string& cls, const std::string& ext) {
        return restrict(parse_brauer_class(cls), parse_extension_data(ext)).to_string();
      },
      py::arg("cls"), py::arg("extension"));
  m.def(
      "brauer_image",
      [](const std::string& cls, const std::string& ext) {
        auto r = in_restriction_image(parse_brauer_class(cls), parse_extension_data(ext));
        py::dict d;
        d["in_image"] = r.in_image;
        d["witness"] = r.witness ? py::cast(r.witness->to_string()) : py::none();
        d["obstruction"] = r.obstruction;
        return d;
      },
      py::arg("cls"), py::arg("extension"));
  m.def("brauer_max_order", &max_order_in_relative_brauer, py::arg("degrees"));

  m.def(
      "preadmissible",
      [](const std::string& group, const std::string& facts_json, const std::string& distinctness,
         bool avoid_residue) {
        auto g = parse_group_spec(group);
        auto cert = preadmissibility_search(g, parse_local_facts(g, facts_json), matching(distinctness, avoid_residue));
        py::dict d;
        d["preadmissible"] = cert.has_value();
        d["certificate"] = cert ? py::cast(cert->to_string()) : py::none();
        return d;
      },
      py::arg("group"), py::arg("facts_json"), py::arg("distinctness") = "all-distinct",
      py::arg("avoid_residue_characteristic") = false);

  m.def(
      "wildness",
      [](const std::string& group, const std::string& facts_json, const std::string& distinctness) {
        auto g = parse_group_spec(group);
        auto v = classify_wildness(g, parse_local_facts(g, facts_json), matching(distinctness, false).distinctness);
        return to_string(v.kind);
      },
      py::arg("group"), py::arg("facts_json"), py::arg("distinctness") = "all-distinct");

  m.def(
      "transfer_verdict",
      [](const std::string& input_json) {
        auto v = extension_admissibility_verdict(parse_transfer_input(input_json));
        py::dict d;
        d["verdict"] = to_string(v.kind);
        d["reason"] = v.reason;
        d["routes"] = v.routes;
        return d;
      },
      py::arg("input_json"));

  m.def("diagram", []() {
    auto closure = diagram_closure();
    auto report = ledger_check(separation_ledger(), closure);
    py::dict d;
    d["base"] = implication_strings(base_implications());
    d["closure"] = implication_strings(closure.pairs());
    d["acyclic"] = is_acyclic(closure);
    d["consistent"] = report.consistent;
    d["complete"] = report.complete();
    d["unrefuted"] = implication_strings(report.unrefuted);
    return d;
  });
}
