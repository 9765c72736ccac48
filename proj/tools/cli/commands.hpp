#pragma once

#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace admiss::cli {

// A subcommand fills the report once argument parsing has succeeded.
using Action = std::function<void(Report&, const Context&)>;

// Registers every subcommand on `app`; the chosen one stores its action.
void register_commands(CLI::App& app, Action& action);

// Fixed reference computations, in listing order.
struct Preset {
  std::string name;
  std::string summary;
  std::function<void(Report&, const Context&)> run;
};
const std::vector<Preset>& paper_suite_presets();

// Shared formatting for quotient searches.
void report_quotient(Report& r, const Presentation& pr, const FiniteGroup& g, const QuotientResult& q);
Json element_labels(const FiniteGroup& g, const std::vector<Element>& elements);

}  // namespace admiss::cli
