#include "admiss/io.hpp"

#include <cctype>
#include <cstdio>
#include <json.hpp>

#include "admiss/error.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_positive(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size() && v > 0) return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
  }
  throw InputError(std::string(what) + " must be a positive integer, got '" + s + "'");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(context) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string(context) + ": bad value for \"" + key + "\"");
  }
}

Element element_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= g.order()) throw InputError("element index out of range");
    return static_cast<Element>(v);
  }
  if (j.is_string()) {
    const auto label = j.get<std::string>();
    for (Element e = 0; e < g.order(); ++e)
      if (g.label(e) == label) return e;
    throw InputError("no element labelled '" + label + "'");
  }
  throw InputError("elements are given by index or label");
}

Subgroup subgroup_from_json(const FiniteGroup& g, const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "whole") return whole_group(g);
    if (s == "trivial") return trivial_subgroup(g);
    if (s == "center") return center(g);
    if (s == "frattini") return frattini_subgroup(g);
    if (s == "derived") return commutator_subgroup(g);
    if (s.rfind("sylow:", 0) == 0) {
      auto p = parse_positive(s.substr(6), "Sylow prime");
      if (!is_prime(p)) throw InputError("Sylow prime must be prime");
      return sylow_subgroup(g, static_cast<std::uint32_t>(p));
    }
    throw InputError("unknown subgroup name '" + s + "'");
  }
  if (j.is_object() && j.contains("generators")) {
    std::vector<Element> gens;
    for (const auto& e : j.at("generators")) gens.push_back(element_from_json(g, e));
    return closure(g, gens);
  }
  throw InputError("subgroup must be a name or {\"generators\": [...]}");
}

PlaceId place_from_json(const json& j, const char* context) {
  PlaceId place;
  place.label = field<std::string>(j, "place", context);
  place.residue_characteristic = j.contains("p") ? field<std::uint32_t>(j, "p", context) : 0;
  if (place.residue_characteristic != 0 && !is_prime(place.residue_characteristic))
    throw InputError(std::string(context) + ": residue characteristic must be prime or 0");
  return place;
}

}  // namespace

PlaceId parse_place(std::string_view text) {
  std::string s = trim(text);
  auto at = s.find('@');
  if (at == std::string::npos || at == 0) throw InputError("place must be written label@p, got '" + s + "'");
  PlaceId place;
  place.label = trim(s.substr(0, at));
  std::string p = trim(s.substr(at + 1));
  if (p == "inf" || p == "0") return place;
  auto prime = parse_positive(p, "residue characteristic");
  if (!is_prime(prime)) throw InputError("residue characteristic must be prime, got " + p);
  place.residue_characteristic = static_cast<std::uint32_t>(prime);
  return place;
}

BrauerClass parse_brauer_class(std::string_view text) {
  std::string s = trim(text);
  if (s.empty() || s == "0" || s == "{}") return BrauerClass();
  std::vector<std::pair<PlaceId, QZ>> support;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("class entries are place=invariant, got '" + item + "'");
    support.emplace_back(parse_place(item.substr(0, eq)), parse_qz(trim(item.substr(eq + 1))));
  }
  return make_class(std::move(support));
}

ExtensionPlaceData parse_extension_data(std::string_view text) {
  ExtensionPlaceData ext;
  for (const auto& block : split(text, ';')) {
    if (block.empty()) continue;
    auto gt = block.find('>');
    if (gt == std::string::npos) throw InputError("extension blocks are 'base > divisors', got '" + block + "'");
    PlaceId base = parse_place(block.substr(0, gt));
    std::vector<DivisorData> divisors;
    for (const auto& item : split(block.substr(gt + 1), ',')) {
      // The e,f pair uses a comma too, so re-join "w:6:3" with a trailing "2".
      if (!divisors.empty() && item.find(':') == std::string::npos && item.find('@') == std::string::npos) {
        auto& last = divisors.back();
        if (!last.e || last.f) throw InputError("stray item '" + item + "' in extension data");
        last.f = parse_positive(item, "f");
        continue;
      }
      auto parts = split(item, ':');
      if (parts.size() < 2 || parts.size() > 3) throw InputError("divisor must be place:degree[:e,f], got '" + item + "'");
      DivisorData d;
      d.place = parse_place(parts[0]);
      d.degree = parse_positive(parts[1], "local degree");
      if (parts.size() == 3) d.e = parse_positive(parts[2], "e");
      divisors.push_back(std::move(d));
    }
    for (const auto& d : divisors)
      if (d.e && !d.f) throw InputError("divisor '" + d.place.label + "' gives e without f");
    ext.places.emplace_back(std::move(base), std::move(divisors));
  }
  ext.validate();
  return ext;
}

std::string to_string(const ExtensionPlaceData& ext) {
  auto place = [](const PlaceId& p) {
    return p.label + "@" + (p.archimedean() ? std::string("inf") : std::to_string(p.residue_characteristic));
  };
  std::string out;
  for (const auto& [v, divisors] : ext.places) {
    if (!out.empty()) out += " ; ";
    out += place(v) + " >";
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const auto& d = divisors[k];
      out += (k ? ", " : " ") + place(d.place) + ":" + std::to_string(d.degree);
      if (d.e && d.f) out += ":" + std::to_string(*d.e) + "," + std::to_string(*d.f);
    }
  }
  return out;
}

Subgroup parse_subgroup_json(const FiniteGroup& g, std::string_view json_text) {
  try {
    return subgroup_from_json(g, parse_json(json_text));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what());
  }
}

std::vector<LocalFact> parse_local_facts(const FiniteGroup& g, std::string_view json_text) {
  try {
    json root = parse_json(json_text);
    if (!root.is_object() || !root.contains("facts") || !root.at("facts").is_array())
      throw InputError("facts file needs a \"facts\" array");
    std::vector<LocalFact> out;
    for (const auto& entry : root.at("facts")) {
      LocalFact fact;
      fact.place = place_from_json(entry, "fact");
      if (!entry.contains("subgroups") || !entry.at("subgroups").is_array())
        throw InputError("fact '" + fact.place.label + "' needs a \"subgroups\" array");
      for (const auto& s : entry.at("subgroups")) fact.realizable_subgroups.push_back(subgroup_from_json(g, s));
      if (entry.contains("tame")) {
        for (const auto& t : entry.at("tame")) {
          if (!t.is_boolean()) throw InputError("tame flags must be booleans");
          fact.tame.push_back(t.get<bool>());
        }
      }
      out.push_back(std::move(fact));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what());
  }
}

AdmissibilityCertificate parse_certificate(const FiniteGroup& g, std::string_view json_text) {
  try {
    json root = parse_json(json_text);
    if (!root.is_object() || !root.contains("certificate") || !root.at("certificate").is_array())
      throw InputError("certificate file needs a \"certificate\" array");
    AdmissibilityCertificate cert;
    for (const auto& entry : root.at("certificate")) {
      PrimeAssignment a;
      a.prime = field<std::uint32_t>(entry, "prime", "certificate entry");
      if (!entry.contains("places") || entry.at("places").size() != 2 || !entry.contains("subgroups") ||
          entry.at("subgroups").size() != 2)
        throw InputError("certificate entry needs two places and two subgroups");
      for (std::size_t k = 0; k < 2; ++k) {
        a.places[k] = place_from_json(entry.at("places")[k], "certificate place");
        a.subgroups[k] = subgroup_from_json(g, entry.at("subgroups")[k]);
      }
      cert.assignments.push_back(std::move(a));
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what());
  }
}

TransferInput parse_transfer_input(std::string_view json_text) {
  try {
    json root = parse_json(json_text);
    TransferInput in;
    in.group_order = field<std::uint64_t>(root, "order", "transfer input");
    in.k_admissible = root.value("k_admissible", true);
    in.gn_over_m = root.value("gn_over_m", false);
    in.sensitive = root.value("sensitive", false);
    if (!root.contains("primes") || !root.at("primes").is_array()) throw InputError("transfer input needs \"primes\"");
    for (const auto& entry : root.at("primes")) {
      PrimeTransferData d;
      d.prime = field<std::uint32_t>(entry, "p", "prime entry");
      d.divisors_in_m = field<std::uint32_t>(entry, "divisors", "prime entry");
      d.sylow_metacyclic = entry.value("metacyclic", false);
      d.liedahl_over_m = entry.value("liedahl", false);
      in.primes.push_back(d);
    }
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed input: ") + e.what());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace admiss
