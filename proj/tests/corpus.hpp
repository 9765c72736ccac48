#pragma once

// Inputs shared by the oracle tests and the acceptance run: groups of order
// at most 64 from every constructor family, and one-relator presentations on
// at most three generators.

#include <string>
#include <vector>

#include "admiss/group_builders.hpp"
#include "admiss/presentation.hpp"
#include "oracles.hpp"

namespace oracle {

using admiss::Presentation;

struct CorpusEntry {
  std::string name;
  FiniteGroup group;
};

// Groups of order at most 64 from every constructor family.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (std::uint64_t n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 16}) out.push_back({"C" + std::to_string(n), admiss::cyclic_group(n)});
  out.push_back({"C2xC2", admiss::abelian_group({2, 2})});
  out.push_back({"C2xC4", admiss::abelian_group({2, 4})});
  out.push_back({"C2^3", admiss::abelian_group({2, 2, 2})});
  out.push_back({"C3xC3", admiss::abelian_group({3, 3})});
  out.push_back({"C4xC4", admiss::abelian_group({4, 4})});
  out.push_back({"C2^4", admiss::abelian_group({2, 2, 2, 2})});
  out.push_back({"C8xC8", admiss::abelian_group({8, 8})});
  out.push_back({"S3", admiss::symmetric_group(3)});
  out.push_back({"S4", admiss::symmetric_group(4)});
  out.push_back({"D8", admiss::build_metacyclic({2, 4, 0, 3})});
  out.push_back({"Q8", admiss::build_metacyclic({2, 4, 2, 3})});
  out.push_back({"D10", admiss::build_metacyclic({2, 5, 0, 4})});
  out.push_back({"C7:C3", admiss::build_metacyclic({3, 7, 0, 2})});
  out.push_back({"M(2,8,0,5)", admiss::build_metacyclic({2, 8, 0, 5})});
  out.push_back({"M(3,9,9,4)", admiss::build_metacyclic({3, 9, 9, 4})});
  out.push_back({"M(2,16,0,7)", admiss::build_metacyclic({2, 16, 0, 7})});
  out.push_back({"M(4,16,0,5)", admiss::build_metacyclic({4, 16, 0, 5})});
  out.push_back({"Heis(3)", admiss::heisenberg_group(3)});
  out.push_back({"C2 wr C2", admiss::wreath_fp_cp(2)});
  out.push_back({"S3xC2", admiss::direct_product(admiss::symmetric_group(3), admiss::cyclic_group(2))});
  out.push_back({"Q8xC2", admiss::direct_product(admiss::build_metacyclic({2, 4, 2, 3}), admiss::cyclic_group(2))});
  out.push_back({"D8xC2xC2", admiss::direct_product(admiss::build_metacyclic({2, 4, 0, 3}), admiss::abelian_group({2, 2}))});
  return out;
}

// Fixed relators plus seeded random ones, each over 1, 2 or 3 generators.
inline std::vector<Presentation> one_relator_presentations() {
  std::vector<Presentation> out;
  const std::vector<std::string> fixed = {
      "<x1 | x1^4>",
      "<x1, x2 | [x1, x2]>",
      "<x1, x2 | x1^2>",
      "<x1, x2 | x1^-1 x2 x1 x2^-3>",
      "<x1, x2 | x1^2 x2^2>",
      "<x1, x2, x3 | x1^2 x2^4 [x2, x3]>",
      "<x1, x2, x3 | [x1, x2] x3^2>",
      "<x1, x2, x3 | x1^3 [x1, x2]>",
  };
  for (const auto& s : fixed) out.push_back(admiss::parse_presentation(s));
  WordSource source(20240611);
  for (std::size_t rank = 1; rank <= 3; ++rank)
    for (int k = 0; k < 5; ++k) {
      Presentation pr = admiss::free_presentation(rank);
      pr.relators.push_back(source.next(rank));
      out.push_back(pr);
    }
  return out;
}

}  // namespace oracle
