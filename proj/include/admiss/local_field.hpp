#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admiss/epimorphism.hpp"
#include "admiss/group.hpp"
#include "admiss/presentation.hpp"

namespace admiss {

/// Numeric invariants of a finite extension k of Q_p.
///
/// Fields are never represented by polynomials; every argument about them
/// consumes only these numbers. `s`, `g` and `h` are the exponents attached
/// to the tame closure in the full absolute Galois group presentation; they
/// are carried as documentation only and never evaluated.
struct LocalFieldParams {
  std::uint32_t p = 0;
  std::uint32_t n = 1;   // [k : Q_p]
  std::uint32_t e = 1;   // ramification index
  std::uint32_t f = 1;   // residue degree
  std::uint32_t s0 = 0;  // largest s with mu_{p^s} in k
  std::uint64_t q = 0;   // residue field size p^f
  std::optional<std::uint32_t> s;
  std::optional<std::int64_t> g;
  std::optional<std::int64_t> h;

  friend bool operator==(const LocalFieldParams&, const LocalFieldParams&) = default;
};

// Builds and validates params with n = e f and q = p^f. Rejects s0 unless
// phi(p^s0) divides e, and s0 = 0 for p = 2 (-1 is always a root of unity).
LocalFieldParams make_local_field(std::uint32_t p, std::uint32_t e, std::uint32_t f, std::uint32_t s0);
void validate(const LocalFieldParams& k);
std::string to_string(const LocalFieldParams& k);

// Q_p itself: n = 1, s0 = 1 for p = 2 and 0 otherwise.
LocalFieldParams rational_padic(std::uint32_t p);

/// Accepts "p=3,n=2,e=2,f=1,s0=1" (n optional but checked) or a name:
/// "Q2", "Q2(i)", "Q3", "Qp:7", "Qp(sqrtp):5".
LocalFieldParams parse_local_field(std::string_view text);

// Presentation of the Galois group of the maximal p-extension of k.
// Throws PreconditionFailed when p^s0 = 2 and n is even.
Presentation presentation_of_max_p_extension(const LocalFieldParams& k);

// G is realizable over k iff it is a quotient of the presentation above.
QuotientResult is_realizable_local(const FiniteGroup& g, const LocalFieldParams& k,
                                   const SearchOptions& options = {});

// |k^x / (k^x)^m| = m * |mu_m(k)| * p^(n v_p(m)), with
// |mu_m(k)| = gcd(m, q-1) * gcd(p-part of m, p^s0).
std::uint64_t power_class_count(const LocalFieldParams& k, std::uint64_t m);

// Rank of the abelianization modulo p of a presentation (generator count
// minus the F_p-rank of the relator exponent-sum matrix).
std::size_t abelianization_rank_mod_p(const Presentation& pr, std::uint32_t p);

enum class DistinguishedField {
  none,
  q3_zeta9_real,  // Q3(zeta_9 + zeta_9^-1), totally ramified cubic over Q3
  q5_rho11,       // Q5(rho_11), unramified quintic over Q5
  q3_rho7,        // Q3(rho_7), unramified sextic over Q3
};

std::string to_string(DistinguishedField tag);

/// A relative extension l/k given by its relative ramification and residue
/// degrees, with an optional tag naming a specific field.
struct LocalExtensionSpec {
  LocalFieldParams base;
  std::uint32_t rel_e = 1;
  std::uint32_t rel_f = 1;
  DistinguishedField tag = DistinguishedField::none;
  std::string label;  // free-form description, ignored by the logic

  std::uint32_t degree() const noexcept { return rel_e * rel_f; }
  // Invariants of l except s0, which the numeric data does not determine.
  LocalFieldParams top_degrees() const;
};

// Checks degrees and that a tag is used only on the data it names.
void validate(const LocalExtensionSpec& ext);

/// "e=3,f=1" or "e=3,f=1,tag=zeta9"; tags are zeta9, rho11 and rho7.
LocalExtensionSpec parse_local_extension(const LocalFieldParams& base, std::string_view text);

/// One named argument with the numeric inequality it rests on.
struct RouteTrace {
  std::string route;  // "trivial", "prime-to-p", "totally-ramified",
                      // "totally-ramified, parameters preserved", "general"
  std::vector<std::string> steps;
  bool has_inequality = false;
  std::int64_t lhs = 0;  // ceil((n r - 1) / 2)
  std::int64_t rhs = 0;  // n + 1 or n + 2
  bool inequality_holds = false;
  LocalFieldParams reduced_base;  // base after removing the prime-to-p unramified part
  std::uint32_t reduced_degree = 1;

  std::string summary() const;
};

struct SensitivityVerdict {
  bool sensitive = false;
  int sensitive_case = 0;        // 1..4 when sensitive
  std::optional<RouteTrace> route;  // when non-sensitive and p is odd
  std::string description() const;
};

SensitivityVerdict classify_extension(const LocalExtensionSpec& ext);

// Throws PreconditionFailed for sensitive input and for p = 2.
RouteTrace transfer_route(const LocalExtensionSpec& ext);

/// Itemized census of the sensitive extensions.
struct SensitiveCensus {
  std::uint64_t case1 = 0;
  std::uint64_t case2 = 0;
  std::uint64_t case3_degree1 = 0;
  std::uint64_t case3_quadratic = 0;      // |Q3^x/(Q3^x)^2| - 1
  std::uint64_t case3_cyclic_cubic = 0;   // (3^rank - 1)/(3 - 1)
  std::uint64_t s3_extensions = 0;        // epimorphisms / |Aut(S3)|
  std::uint64_t s3_epimorphisms = 0;
  std::uint64_t s3_automorphisms = 0;
  std::uint64_t s3_involutions = 0;
  std::uint64_t case3_noncyclic_cubic = 0;  // involutions * S3 extensions
  std::uint64_t case4 = 0;
  std::uint64_t total = 0;

  // "1 + 1 + (1 + 3 + (4 + 18)) + 1"
  std::string breakdown() const;
};

SensitiveCensus count_sensitive_extensions(const SearchOptions& options = {});

// Every sensitive extension, one spec per field, ordered by case.
std::vector<LocalExtensionSpec> list_sensitive_extensions(const SearchOptions& options = {});

// The reduced presentation used to count S3-extensions of Q3.
Presentation q3_s3_reduced_presentation();

}  // namespace admiss
