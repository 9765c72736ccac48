#include "admiss/group_spec.hpp"

#include <json.hpp>
#include <string>

#include "admiss/group_builders.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

json shorthand_to_json(std::string_view text) {
  std::string s = trim(text);
  auto colon = s.find(':');
  std::string name = trim(s.substr(0, colon));
  if (colon == std::string::npos) {
    if (name == "paper_2_10") return json{{"paper_2_10", true}};
    throw InputError("unknown group spec '" + s + "'");
  }
  std::vector<std::int64_t> args;
  std::string rest = s.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto comma = rest.find(',', pos);
    std::string tok = trim(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (tok.empty()) throw InputError("empty argument in group spec '" + s + "'");
    try {
      std::size_t used = 0;
      args.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("non-integer argument '" + tok + "' in group spec");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (name == "abelian" || name == "metacyclic") return json{{name, args}};
  if (args.size() != 1) throw InputError("group spec '" + name + "' takes one argument");
  if (name == "heisenberg_action") {
    json ab = json{{"abelian", {args[0], args[0], args[0]}}};
    return json{{"semidirect", {{"normal", ab}, {"acting", ab}, {"action", "heisenberg"}}}};
  }
  return json{{name, args[0]}};
}

std::uint64_t positive(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
    throw InputError(std::string("group spec: ") + what + " must be a positive integer");
  return v.get<std::uint64_t>();
}

std::uint32_t prime_arg(const json& v, const char* what) {
  std::uint64_t p = positive(v, what);
  if (!is_prime(p)) throw InputError(std::string("group spec: ") + what + " must be prime");
  return static_cast<std::uint32_t>(p);
}

// Returns p and k when the spec is {"abelian": [p, ..., p]}.
std::pair<std::uint32_t, std::size_t> elementary_abelian(const json& spec) {
  if (!spec.is_object() || !spec.contains("abelian") || !spec["abelian"].is_array() || spec["abelian"].empty())
    throw InputError("group spec: normal factor must be {\"abelian\": [p, ..., p]}");
  std::uint32_t p = prime_arg(spec["abelian"][0], "abelian factor");
  for (const auto& v : spec["abelian"])
    if (positive(v, "abelian factor") != p) throw InputError("group spec: normal factor must be elementary abelian");
  return {p, spec["abelian"].size()};
}

FiniteGroup build(const json& spec, const GroupOptions& options);

FiniteGroup build_semidirect(const json& sd, const GroupOptions& options) {
  if (!sd.is_object() || !sd.contains("normal") || !sd.contains("acting"))
    throw InputError("semidirect spec needs \"normal\" and \"acting\"");
  json action = sd.value("action", json("trivial"));
  if (action.is_string()) {
    std::string kind = action.get<std::string>();
    if (kind == "trivial") return direct_product(build(sd["normal"], options), build(sd["acting"], options), options);
    if (kind == "coordinate_shift") {
      auto [p, k] = elementary_abelian(sd["normal"]);
      const json& acting = sd["acting"];
      if (!acting.contains("cyclic") || positive(acting["cyclic"], "cyclic order") != k)
        throw InputError("coordinate_shift requires acting = {\"cyclic\": k} with k the rank of the normal factor");
      return coordinate_shift_product(p, k, options);
    }
    if (kind == "heisenberg") {
      auto [p, k] = elementary_abelian(sd["normal"]);
      auto [q, l] = elementary_abelian(sd["acting"]);
      if (k != 3 || l != 3 || p != q)
        throw InputError("heisenberg action requires normal = acting = (Z/p)^3");
      return heisenberg_action_product(p, options);
    }
    throw InputError("unknown semidirect action '" + kind + "'");
  }
  if (action.is_object() && action.contains("matrices")) {
    auto [p, k] = elementary_abelian(sd["normal"]);
    FiniteGroup n = build(sd["normal"], options);
    FiniteGroup h = build(sd["acting"], options);
    auto mats = action["matrices"].get<std::vector<std::vector<std::int64_t>>>();
    return semidirect_product(n, h, linear_action(p, k, h, h.generators(), mats), options);
  }
  throw InputError("semidirect action must be a name or {\"matrices\": [...]}");
}

CentralExtensionSpec central_spec(const json& c) {
  CentralExtensionSpec s;
  s.p = prime_arg(c.at("p"), "p");
  s.rank = positive(c.at("rank"), "rank");
  s.center = c.at("center").get<std::vector<std::uint32_t>>();
  if (c.contains("commutators"))
    for (const auto& item : c["commutators"]) {
      auto pair = item.at("pair").get<std::vector<std::size_t>>();
      if (pair.size() != 2) throw InputError("commutator pair must have two entries");
      s.commutators.push_back({pair[0], pair[1], item.at("value").get<std::vector<std::int64_t>>()});
    }
  if (c.contains("powers")) s.powers = c["powers"].get<std::vector<std::vector<std::int64_t>>>();
  if (c.contains("names")) s.generator_names = c["names"].get<std::vector<std::string>>();
  if (c.contains("center_names")) s.center_names = c["center_names"].get<std::vector<std::string>>();
  return s;
}

FiniteGroup build(const json& spec, const GroupOptions& options) {
  if (!spec.is_object()) throw InputError("group spec must be an object");
  GroupOptions opts = options;
  if (spec.contains("max_order")) opts.max_order = positive(spec["max_order"], "max_order");
  for (const auto& [key, value] : spec.items()) {
    if (key == "max_order") continue;
    if (key == "cyclic") return cyclic_group(positive(value, "cyclic order"), opts);
    if (key == "abelian") {
      if (!value.is_array()) throw InputError("abelian spec must be a list");
      std::vector<std::uint64_t> inv;
      for (const auto& v : value) inv.push_back(positive(v, "abelian factor"));
      return abelian_group(inv, opts);
    }
    if (key == "metacyclic") {
      if (!value.is_array() || value.size() != 4) throw InputError("metacyclic spec needs [m, n, i, t]");
      MetacyclicParams mp{positive(value[0], "m"), positive(value[1], "n"), 0, 0};
      std::int64_t i = value[2].get<std::int64_t>(), t = value[3].get<std::int64_t>();
      std::int64_t n = static_cast<std::int64_t>(mp.n);
      mp.i = static_cast<std::uint64_t>(mod(i, n));
      mp.t = static_cast<std::uint64_t>(mod(t, n));
      return build_metacyclic(mp, opts);
    }
    if (key == "heisenberg") return heisenberg_group(prime_arg(value, "heisenberg prime"), opts);
    if (key == "wreath_fp_cp") return wreath_fp_cp(prime_arg(value, "wreath prime"), opts);
    if (key == "symmetric") return symmetric_group(static_cast<unsigned>(positive(value, "degree")), opts);
    if (key == "central_extension") return build_central_extension(central_spec(value), opts);
    if (key == "semidirect") return build_semidirect(value, opts);
    if (key == "direct_product") {
      if (!value.is_array() || value.empty()) throw InputError("direct_product needs a non-empty list");
      FiniteGroup acc = build(value[0], opts);
      for (std::size_t k = 1; k < value.size(); ++k) acc = direct_product(acc, build(value[k], opts), opts);
      return acc;
    }
    if (key == "paper_2_10") return order_1024_group(opts);
    throw InputError("unknown group spec key '" + key + "'");
  }
  throw InputError("empty group spec");
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text, const GroupOptions& options) {
  std::string s = trim(text);
  json spec;
  if (!s.empty() && s.front() == '{') {
    try {
      spec = json::parse(s);
    } catch (const json::exception& e) {
      throw InputError(std::string("group spec is not valid JSON: ") + e.what());
    }
  } else {
    spec = shorthand_to_json(s);
  }
  try {
    return build(spec, options);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
}

}  // namespace admiss
