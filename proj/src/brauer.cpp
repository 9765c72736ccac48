#include "admiss/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "admiss/error.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 40;

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > kMaxDenominator) throw InputError("denominator exceeds the supported range");
  return static_cast<std::int64_t>(l);
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  __int128 r = static_cast<__int128>(a) * b % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

struct Congruence {
  std::int64_t residue;
  std::int64_t modulus;
};

// Solves d j = b (mod n); nullopt when gcd(d, n) does not divide b.
std::optional<Congruence> solve_linear(std::int64_t d, std::int64_t b, std::int64_t n) {
  d = mod(d, n);
  b = mod(b, n);
  std::int64_t g = std::gcd(d, n);
  if (b % g != 0) return std::nullopt;
  std::int64_t m = n / g;
  if (m == 1) return Congruence{0, 1};
  std::int64_t inv = mod_inverse((d / g) % m, m);
  return Congruence{mulmod(b / g, inv, m), m};
}

// Combines two congruences with possibly non-coprime moduli.
std::optional<Congruence> combine(const Congruence& a, const Congruence& b) {
  auto eg = extended_gcd(a.modulus, b.modulus);
  std::int64_t g = eg.g;
  if ((b.residue - a.residue) % g != 0) return std::nullopt;
  std::int64_t l = checked_lcm(a.modulus, b.modulus);
  std::int64_t step = b.modulus / g;
  std::int64_t k = mulmod((b.residue - a.residue) / g, eg.x, step);
  std::int64_t r = mod(static_cast<std::int64_t>((static_cast<__int128>(a.modulus) * k + a.residue) % l), l);
  return Congruence{r, l};
}

}  // namespace

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = mod(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::operator+(const QZ& o) const {
  std::int64_t l = checked_lcm(den_, o.den_);
  return QZ(mod(num_ * (l / den_) + o.num_ * (l / o.den_), l), l);
}

QZ QZ::operator-() const { return QZ(den_ - num_, den_); }

QZ QZ::scaled(std::int64_t k) const { return QZ(mulmod(num_, mod(k, den_), den_), den_); }

std::string QZ::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ parse_qz(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t v = std::stoll(text, &used);
      if (used == text.size()) return QZ(v, 1);
    } else {
      std::string a = text.substr(0, slash), b = text.substr(slash + 1);
      std::int64_t num = std::stoll(a, &used);
      if (used == a.size()) {
        std::int64_t den = std::stoll(b, &used);
        if (used == b.size() && den != 0) return QZ(num, den);
      }
    }
  } catch (const std::exception&) {
  }
  throw InputError("not a rational number: '" + text + "'");
}

QZ BrauerClass::invariant(const std::string& label) const {
  for (const auto& [place, inv] : invariants_)
    if (place.label == label) return inv;
  return QZ();
}

std::string BrauerClass::to_string() const {
  if (invariants_.empty()) return "{}";
  std::string out = "{";
  for (std::size_t k = 0; k < invariants_.size(); ++k)
    out += (k ? ", " : "") + invariants_[k].first.label + ": " + invariants_[k].second.to_string();
  return out + "}";
}

BrauerClass make_class(std::vector<std::pair<PlaceId, QZ>> support) {
  std::sort(support.begin(), support.end(), [](const auto& a, const auto& b) { return a.first.label < b.first.label; });
  for (std::size_t k = 1; k < support.size(); ++k)
    if (support[k].first.label == support[k - 1].first.label)
      throw InputError("place '" + support[k].first.label + "' listed twice");
  QZ sum;
  for (const auto& [place, inv] : support) sum = sum + inv;
  if (!sum.is_zero()) throw InputError("local invariants sum to " + sum.to_string() + ", not 0");
  BrauerClass c;
  for (auto& entry : support)
    if (!entry.second.is_zero()) c.invariants_.push_back(std::move(entry));
  return c;
}

BrauerClass add(const BrauerClass& a, const BrauerClass& b) {
  std::vector<std::pair<PlaceId, QZ>> merged = a.invariants();
  for (const auto& [place, inv] : b.invariants()) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& e) { return e.first.label == place.label; });
    if (it == merged.end()) merged.emplace_back(place, inv);
    else it->second = it->second + inv;
  }
  return make_class(std::move(merged));
}

std::uint64_t index(const BrauerClass& c) {
  std::uint64_t l = 1;
  for (const auto& [place, inv] : c.invariants())
    if (!place.archimedean()) l = std::lcm(l, static_cast<std::uint64_t>(inv.den()));
  return l;
}

void ExtensionPlaceData::validate() const {
  std::set<std::string> base_labels, top_labels;
  std::optional<std::uint64_t> total_degree;
  for (const auto& [v, divisors] : places) {
    std::uint64_t sum = 0;
    for (const auto& w : divisors) sum += w.degree;
    if (total_degree && *total_degree != sum)
      throw InputError("local degrees above '" + v.label + "' sum to " + std::to_string(sum) + ", expected " +
                       std::to_string(*total_degree));
    total_degree = sum;
    if (!base_labels.insert(v.label).second) throw InputError("base place '" + v.label + "' listed twice");
    if (divisors.empty()) throw InputError("base place '" + v.label + "' has no divisors");
    for (const auto& w : divisors) {
      if (!top_labels.insert(w.place.label).second) throw InputError("divisor '" + w.place.label + "' listed twice");
      if (w.degree == 0) throw InputError("local degree must be positive");
      if (w.e && w.f && *w.e * *w.f != w.degree)
        throw InputError("divisor '" + w.place.label + "': e*f must equal the local degree");
      if ((w.e && *w.e == 0) || (w.f && *w.f == 0)) throw InputError("e and f must be positive");
    }
  }
}

const std::vector<DivisorData>* ExtensionPlaceData::divisors_of(const std::string& base_label) const {
  for (const auto& [v, divisors] : places)
    if (v.label == base_label) return &divisors;
  return nullptr;
}

BrauerClass restrict(const BrauerClass& c, const ExtensionPlaceData& ext) {
  ext.validate();
  for (const auto& [place, inv] : c.invariants())
    if (!ext.divisors_of(place.label))
      throw InputError("extension data does not cover place '" + place.label + "'");
  std::vector<std::pair<PlaceId, QZ>> out;
  for (const auto& [v, divisors] : ext.places) {
    QZ inv = c.invariant(v.label);
    for (const auto& w : divisors) out.emplace_back(w.place, inv.scaled(static_cast<std::int64_t>(w.degree)));
  }
  // Sum zero holds automatically; make_class re-checks it.
  return make_class(std::move(out));
}

std::uint64_t max_order_in_relative_brauer(const std::vector<std::uint64_t>& degrees) {
  if (degrees.empty()) throw InputError("max_order_in_relative_brauer needs at least one place");
  std::set<std::uint64_t> primes;
  for (auto d : degrees) {
    if (d == 0) throw InputError("local degree must be positive");
    for (auto [p, k] : factorize(d)) primes.insert(p);
  }
  std::uint64_t order = 1;
  for (auto p : primes) {
    std::vector<int> vals;
    for (auto d : degrees) vals.push_back(valuation(d, p));
    std::sort(vals.rbegin(), vals.rend());
    if (vals.size() >= 2) order *= ipow(p, static_cast<unsigned>(vals[1]));
  }
  return order;
}

std::vector<std::uint64_t> relative_brauer_degrees(const ExtensionPlaceData& ext, bool tame) {
  ext.validate();
  std::vector<std::uint64_t> out;
  for (const auto& [v, divisors] : ext.places) {
    std::uint64_t g = 0;
    for (const auto& w : divisors) {
      std::uint64_t d = w.degree;
      if (tame) {
        if (!w.e || !w.f) throw InputError("tame degrees need (e, f) for divisor '" + w.place.label + "'");
        d = *w.f * (v.residue_characteristic ? prime_to_part(*w.e, v.residue_characteristic) : *w.e);
      }
      g = std::gcd(g, d);
    }
    out.push_back(g);
  }
  return out;
}

bool is_adequate_degree_data(std::uint64_t group_order, const std::vector<std::uint64_t>& degrees) {
  return max_order_in_relative_brauer(degrees) == group_order;
}

bool is_adequate(std::uint64_t group_order, const ExtensionPlaceData& ext, bool tame) {
  return is_adequate_degree_data(group_order, relative_brauer_degrees(ext, tame));
}

RestrictionImageResult in_restriction_image(const BrauerClass& c, const ExtensionPlaceData& ext) {
  ext.validate();
  RestrictionImageResult out;
  // Every place carrying an invariant must be a listed divisor.
  for (const auto& [place, inv] : c.invariants()) {
    bool found = false;
    for (const auto& [v, divisors] : ext.places)
      for (const auto& w : divisors) found = found || w.place.label == place.label;
    if (!found) throw InputError("place '" + place.label + "' is not a listed divisor of any base place");
  }

  // Per base place: x_v ranges over a coset x0 + (1/g_v)Z/Z.
  std::vector<QZ> x0;
  std::vector<std::int64_t> g;
  for (const auto& [v, divisors] : ext.places) {
    std::int64_t n = 1;
    for (const auto& w : divisors) {
      QZ inv = c.invariant(w.place.label);
      __int128 scale = static_cast<__int128>(inv.den()) * static_cast<__int128>(w.degree);
      if (scale > kMaxDenominator) throw InputError("denominator exceeds the supported range");
      n = checked_lcm(n, static_cast<std::int64_t>(scale));
    }
    // x = j / n; need degree * j = inv * n (mod n) for every divisor.
    std::optional<Congruence> acc = Congruence{0, 1};
    for (const auto& w : divisors) {
      QZ inv = c.invariant(w.place.label);
      auto sol = solve_linear(static_cast<std::int64_t>(w.degree), inv.num() * (n / inv.den()), n);
      if (!sol) {
        out.obstruction = "at " + v.label + ": no x with " + std::to_string(w.degree) + "x = " + inv.to_string() +
                          " (divisor " + w.place.label + ")";
        return out;
      }
      acc = combine(*acc, *sol);
      if (!acc) {
        std::string demands;
        for (const auto& d : divisors)
          demands += (demands.empty() ? "" : ", ") + std::to_string(d.degree) + "x = " +
                     c.invariant(d.place.label).to_string();
        out.obstruction = "at " + v.label + ": the divisors demand incompatible values (" + demands + ")";
        return out;
      }
    }
    x0.emplace_back(acc->residue, n);
    g.push_back(n / acc->modulus);
  }

  // Global: sum of x_v must vanish; the free parts sum to (1/L)Z with L = lcm(g_v).
  QZ s;
  for (const auto& x : x0) s = s + x;
  std::int64_t l = 1;
  for (auto gv : g) l = checked_lcm(l, gv);
  if (!s.scaled(l).is_zero()) {
    out.obstruction = "the forced local parts sum to " + s.to_string() + ", outside (1/" + std::to_string(l) + ")Z/Z";
    return out;
  }
  // Bezout: sum_v c_v * (l / g_v) = 1, then shift x_v by t c_v / g_v where -s = t / l.
  std::vector<std::int64_t> coeff(g.size(), 0);
  std::int64_t acc_gcd = 0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    std::int64_t a = l / g[k];
    auto eg = extended_gcd(acc_gcd, a);
    for (std::size_t j = 0; j < k; ++j) coeff[j] = coeff[j] * eg.x;
    coeff[k] = eg.y;
    acc_gcd = eg.g;
    // Keep coefficients small modulo l.
    for (std::size_t j = 0; j <= k; ++j) coeff[j] = mod(coeff[j], l);
  }
  QZ neg = -s;
  std::int64_t t = neg.num() * (l / neg.den());
  std::vector<std::pair<PlaceId, QZ>> support;
  for (std::size_t k = 0; k < ext.places.size(); ++k) {
    QZ shift(mulmod(t, coeff[k], l) % g[k], g[k]);
    if (g.empty() || l == 1) shift = QZ();
    support.emplace_back(ext.places[k].first, x0[k] + shift);
  }
  BrauerClass witness = make_class(std::move(support));
  if (!(restrict(witness, ext) == c)) throw Error("restriction image witness failed verification");
  out.in_image = true;
  out.witness = std::move(witness);
  return out;
}

}  // namespace admiss
