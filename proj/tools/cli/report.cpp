#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "admiss/io.hpp"

namespace admiss::cli {

namespace {

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "TRUE" : "FALSE";
  if (v.is_array()) {
    bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (flat) {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + render_value(v[k]);
      return out + "]";
    }
  }
  return v.dump();
}

void print_section(std::ostream& os, const char* title, const std::vector<std::pair<std::string, Json>>& rows) {
  if (rows.empty()) return;
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  os << title << "\n";
  for (const auto& [k, v] : rows) {
    std::string line = "  " + k + std::string(width - k.size() + 2, ' ') + render_value(v);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
}

Json section_json(const std::vector<std::pair<std::string, Json>>& rows) {
  Json out = Json::object();
  for (const auto& [k, v] : rows) out[k] = v;
  return out;
}

}  // namespace

void Report::print(std::ostream& os, const Context& ctx) const {
  const std::string digest = fnv1a_hex(ctx.echo + "\nbudget=" + std::to_string(ctx.search.budget));
  if (ctx.format == Format::structured) {
    Json out = Json::object();
    out["schema"] = "admiss.report";
    out["schema_version"] = kSchemaVersion;
    out["command"] = ctx.echo;
    out["inputs_digest"] = digest;
    out["verdicts"] = section_json(verdicts_);
    out["witnesses"] = section_json(witnesses_);
    out["details"] = section_json(details_);
    if (ctx.timings) {
      Json t = Json::object();
      for (const auto& [k, ms] : timings_) t[k] = ms;
      out["timings_ms"] = t;
    }
    os << out.dump(2) << "\n";
    return;
  }
  os << "command  admiss " << ctx.echo << "\n";
  os << "inputs   " << digest << "\n";
  print_section(os, "verdicts", verdicts_);
  print_section(os, "witnesses", witnesses_);
  print_section(os, "details", details_);
  if (ctx.timings && !timings_.empty()) {
    os << "timings\n";
    for (const auto& [k, ms] : timings_) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f ms", ms);
      os << "  " << k << "  " << buf << "\n";
    }
  }
}

}  // namespace admiss::cli
