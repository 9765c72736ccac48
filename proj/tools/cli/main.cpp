#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "admiss/error.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::uint64_t budget_from_environment() {
  const char* env = std::getenv("ADMISS_BUDGET");
  if (!env || !*env) return admiss::kDefaultSearchBudget;
  try {
    std::size_t used = 0;
    auto v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw admiss::InputError(std::string("ADMISS_BUDGET must be a positive integer, got '") + env + "'");
}

// The command line minus flags that only affect presentation.
std::string canonical_echo(int argc, char** argv) {
  std::string out;
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    if (a == "--timings") continue;
    if (a == "--format" || a == "--workers") {
      ++k;
      continue;
    }
    if (a.rfind("--format=", 0) == 0 || a.rfind("--workers=", 0) == 0) continue;
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace admiss;
  CLI::App app{"admiss: finite groups, local fields and admissibility certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Context ctx;
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  std::size_t max_order = kDefaultOrderCap;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--budget", budget, "Search budget in candidate tuples (overrides ADMISS_BUDGET)");
  app.add_option("--workers", ctx.search.workers, "Worker threads for search loops")->check(CLI::Range(1u, 256u));
  app.add_option("--max-order", max_order, "Largest group order to build")->check(CLI::Range(1, 65536));
  app.add_flag("--timings", ctx.timings, "Report wall-clock timings");

  cli::Action action;
  cli::register_commands(app, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    ctx.format = format == "structured" ? cli::Format::structured : cli::Format::text;
    ctx.search.budget = budget ? *budget : budget_from_environment();
    ctx.group.max_order = max_order;
    ctx.echo = canonical_echo(argc, argv);
    cli::Report report;
    action(report, ctx);
    report.print(std::cout, ctx);
    return 0;
  } catch (const BudgetExceeded& e) {
    std::cerr << "admiss: budget refusal: " << e.what() << "\n";
    return kExitBudget;
  } catch (const InputError& e) {
    std::cerr << "admiss: input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionFailed& e) {
    std::cerr << "admiss: precondition failed: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "admiss: internal error: " << e.what() << "\n";
    return 1;
  }
}
