#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace admiss {

/// An element of Q/Z kept as num/den with 0 <= num < den and gcd(num, den) = 1.
class QZ {
 public:
  QZ() = default;
  // Any integer numerator is reduced into [0, den).
  QZ(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  QZ operator+(const QZ& o) const;
  QZ operator-() const;
  QZ operator-(const QZ& o) const { return *this + (-o); }
  QZ scaled(std::int64_t k) const;

  friend bool operator==(const QZ&, const QZ&) = default;
  std::string to_string() const;  // "0", "1/8", "7/8"

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Parses "a/b", "-a/b" or an integer.
QZ parse_qz(const std::string& text);

struct PlaceId {
  std::string label;
  std::uint32_t residue_characteristic = 0;  // 0 for archimedean places

  bool archimedean() const noexcept { return residue_characteristic == 0; }
  friend bool operator==(const PlaceId&, const PlaceId&) = default;
};

/// A Brauer class given by its finitely many nonzero local invariants,
/// kept sorted by place label. The invariants always sum to zero in Q/Z.
class BrauerClass {
 public:
  BrauerClass() = default;

  const std::vector<std::pair<PlaceId, QZ>>& invariants() const noexcept { return invariants_; }
  QZ invariant(const std::string& label) const;

  friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
  std::string to_string() const;

 private:
  friend BrauerClass make_class(std::vector<std::pair<PlaceId, QZ>> support);
  std::vector<std::pair<PlaceId, QZ>> invariants_;
};

// Drops zero invariants and rejects duplicate labels and a nonzero sum (the
// message names the defect).
BrauerClass make_class(std::vector<std::pair<PlaceId, QZ>> support);
BrauerClass add(const BrauerClass& a, const BrauerClass& b);

// Lcm of the invariant denominators over finite places; archimedean places
// are left out.
std::uint64_t index(const BrauerClass& c);

/// For each base place v, its divisors w in the larger field with local
/// degree [M_w : K_v] and optionally the ramification split (e_w, f_w).
struct DivisorData {
  PlaceId place;
  std::uint64_t degree = 1;
  std::optional<std::uint64_t> e;
  std::optional<std::uint64_t> f;
};

struct ExtensionPlaceData {
  std::vector<std::pair<PlaceId, std::vector<DivisorData>>> places;

  void validate() const;
  const std::vector<DivisorData>* divisors_of(const std::string& base_label) const;
};

// inv_w = [M_w : K_v] inv_v for every listed divisor.
BrauerClass restrict(const BrauerClass& c, const ExtensionPlaceData& ext);

// For each prime l, the second-largest l-adic valuation among the d_v gives
// the l-part; the product over l is the largest element order in the
// sum-zero subgroup of the direct sum of (1/d_v)Z/Z.
std::uint64_t max_order_in_relative_brauer(const std::vector<std::uint64_t>& degrees);

// d_v = gcd over divisors of the local degree, or of its tame part
// f_w * (prime-to-p part of e_w) when `tame` is set.
std::vector<std::uint64_t> relative_brauer_degrees(const ExtensionPlaceData& ext, bool tame);

bool is_adequate_degree_data(std::uint64_t group_order, const std::vector<std::uint64_t>& degrees);
bool is_adequate(std::uint64_t group_order, const ExtensionPlaceData& ext, bool tame);

struct RestrictionImageResult {
  bool in_image = false;
  std::optional<BrauerClass> witness;  // base class whose restriction is the input
  std::string obstruction;             // why not, when not
};

// Membership of a class over M in the image of restriction from K, with the
// listed base places as the only places allowed to carry invariants.
RestrictionImageResult in_restriction_image(const BrauerClass& c, const ExtensionPlaceData& ext);

}  // namespace admiss
