#pragma once

#include <string>
#include <string_view>

#include "admiss/admissibility.hpp"
#include "admiss/brauer.hpp"
#include "admiss/group.hpp"

namespace admiss {

// Text forms shared by the command line and the Python module.
//
//   place       label@p          (p = 0 or "label@inf" for archimedean)
//   class       place=a/b, place=a/b, ...      ("" or "0" is the zero class)
//   extension   base > div, div ; base > div   with div = place:degree[:e,f]
//
// Example: "v1@3 > w1@3:9:3,3 ; v2@5 > w2@5:1, w3@5:8"

PlaceId parse_place(std::string_view text);
BrauerClass parse_brauer_class(std::string_view text);
ExtensionPlaceData parse_extension_data(std::string_view text);
std::string to_string(const ExtensionPlaceData& ext);

// Subgroups of G in JSON: "whole", "trivial", "center", "frattini",
// "derived", "sylow:p", or {"generators": [...]} where each generator is an
// element index or an element label.
Subgroup parse_subgroup_json(const FiniteGroup& g, std::string_view json_text);

// {"facts": [{"place": "v1", "p": 3, "subgroups": [...], "tame": [...]}]}
std::vector<LocalFact> parse_local_facts(const FiniteGroup& g, std::string_view json_text);

// {"certificate": [{"prime": 3, "places": [{"place": "v1", "p": 3}, ...],
//                   "subgroups": [..., ...]}]}
AdmissibilityCertificate parse_certificate(const FiniteGroup& g, std::string_view json_text);

// {"order": 27, "k_admissible": true, "gn_over_m": true, "sensitive": false,
//  "primes": [{"p": 3, "divisors": 2, "metacyclic": true, "liedahl": false}]}
TransferInput parse_transfer_input(std::string_view json_text);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace admiss
