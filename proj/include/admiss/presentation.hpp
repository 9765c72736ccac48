#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admiss/word.hpp"

namespace admiss {

enum class PresentationMode {
  abstract_finite,   // a discrete finitely presented group
  pro_p,             // pro-p completion for the prime `Presentation::p`
  pro_prime_to_2,    // profinite with only odd-order quotients in mind
};

std::string to_string(PresentationMode mode);

/// Generators, relators and a mode flag.
///
/// `torsion[k]`, when set, bounds the order of the image of generator k: the
/// image must have order dividing it. Relators of the shape x^k add the same
/// bound implicitly (see `effective_torsion`).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  PresentationMode mode = PresentationMode::abstract_finite;
  std::uint32_t p = 0;
  std::vector<std::optional<std::uint64_t>> torsion;

  std::size_t generator_count() const noexcept { return generators.size(); }
  bool is_free() const noexcept { return relators.empty(); }

  // Throws InputError when a relator uses an undeclared generator, the
  // torsion list has the wrong length, or pro-p mode lacks a prime.
  void validate() const;

  // Explicit bounds combined (by gcd) with bounds read off x^k relators.
  std::vector<std::optional<std::uint64_t>> effective_torsion() const;

  std::string to_string() const;
};

Presentation free_presentation(std::size_t rank, PresentationMode mode = PresentationMode::abstract_finite,
                               std::uint32_t p = 0);

/// Parses one of
///   "<a, b, c | a^2 b^4 [b,c], ...>"   explicit generators and relators
///   "x1^9 [x1,x2] [x3,x4]"             one relator, generators in order of appearance
///   "free:3"                           free group on x1, x2, x3
/// Syntax inside words: juxtaposition or '*' multiplies, u^k is a power
/// (k may be negative), u^v is v^-1 u v, [u,v,w] is [[u,v],w], parentheses
/// group, "1" is the identity and "lhs = rhs" stands for lhs rhs^-1.
Presentation parse_presentation(std::string_view text, PresentationMode mode = PresentationMode::abstract_finite,
                                std::uint32_t p = 0);

// Parses a single word over a fixed alphabet.
Word parse_word(std::string_view text, const std::vector<std::string>& generators);

}  // namespace admiss
