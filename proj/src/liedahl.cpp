#include "admiss/liedahl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "admiss/group_queries.hpp"
#include "admiss/metacyclic.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

constexpr std::uint64_t kMaxConductor = 1'000'000;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("expected an integer, got '" + s + "'");
}

void check_conductor(std::uint64_t f) {
  if (f == 0 || f > kMaxConductor) throw InputError("conductor out of range: " + std::to_string(f));
}

bool squarefree(std::uint64_t n) {
  for (auto [p, k] : factorize(n))
    if (k > 1) return false;
  return true;
}

}  // namespace

int kronecker_symbol(std::int64_t d, std::uint64_t a) {
  if (a == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  while (a % 2 == 0) {
    a /= 2;
    std::int64_t r = ((d % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (d / a) for odd a.
  std::int64_t top = d % static_cast<std::int64_t>(a);
  if (top < 0) top += static_cast<std::int64_t>(a);
  auto x = static_cast<std::uint64_t>(top);
  std::uint64_t y = a;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      if (y % 8 == 3 || y % 8 == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

AbelianFieldSpec AbelianFieldSpec::rationals() { return AbelianFieldSpec(); }

AbelianFieldSpec AbelianFieldSpec::cyclotomic(std::uint64_t m) {
  check_conductor(m);
  AbelianFieldSpec k;
  k.conductor_ = m;
  k.subgroup_ = {m == 1 ? std::uint64_t{0} : std::uint64_t{1}};
  k.name_ = m == 1 ? "Q" : "Q(mu_" + std::to_string(m) + ")";
  return k;
}

AbelianFieldSpec AbelianFieldSpec::gaussian() {
  AbelianFieldSpec k = cyclotomic(4);
  k.name_ = "Q(i)";
  return k;
}

AbelianFieldSpec AbelianFieldSpec::quadratic(std::int64_t d) {
  if (d == 0 || d == 1) throw InputError("quadratic field needs squarefree d other than 0 and 1");
  std::uint64_t ad = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (!squarefree(ad)) throw InputError("quadratic field needs squarefree d, got " + std::to_string(d));
  const std::int64_t disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
  const std::uint64_t f = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
  check_conductor(f);
  AbelianFieldSpec k;
  k.conductor_ = f;
  k.subgroup_.clear();
  for (std::uint64_t a = 1; a < f; ++a)
    if (std::gcd(a, f) == 1 && kronecker_symbol(disc, a) == 1) k.subgroup_.push_back(a);
  k.name_ = "Q(sqrt(" + std::to_string(d) + "))";
  return k;
}

AbelianFieldSpec AbelianFieldSpec::from_generators(std::uint64_t conductor, const std::vector<std::uint64_t>& generators,
                                                   std::string name) {
  check_conductor(conductor);
  AbelianFieldSpec k;
  k.conductor_ = conductor;
  std::set<std::uint64_t> h{conductor == 1 ? std::uint64_t{0} : std::uint64_t{1}};
  for (auto g : generators)
    if (std::gcd(g % conductor, conductor) != 1 && conductor != 1)
      throw InputError("generator " + std::to_string(g) + " is not a unit mod " + std::to_string(conductor));
  std::vector<std::uint64_t> frontier(h.begin(), h.end());
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (auto x : frontier)
      for (auto g : generators) {
        std::uint64_t y = (x * (g % conductor)) % conductor;
        if (h.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  k.subgroup_.assign(h.begin(), h.end());
  k.name_ = name.empty() ? "abelian:" + std::to_string(conductor) : std::move(name);
  return k;
}

AbelianFieldSpec AbelianFieldSpec::compositum(const AbelianFieldSpec& a, const AbelianFieldSpec& b) {
  const std::uint64_t l = std::lcm(a.conductor_, b.conductor_);
  check_conductor(l);
  AbelianFieldSpec k;
  k.conductor_ = l;
  k.subgroup_.clear();
  for (std::uint64_t x = 0; x < l; ++x) {
    if (std::gcd(x, l) != 1 && l != 1) continue;
    if (std::binary_search(a.subgroup_.begin(), a.subgroup_.end(), x % a.conductor_) &&
        std::binary_search(b.subgroup_.begin(), b.subgroup_.end(), x % b.conductor_))
      k.subgroup_.push_back(x);
  }
  k.name_ = a.name_ + " + " + b.name_;
  return k;
}

std::uint64_t AbelianFieldSpec::degree() const { return euler_phi(conductor_) / subgroup_.size(); }

AbelianFieldSpec parse_abelian_field(std::string_view text) {
  std::string s = trim(text);
  if (auto plus = s.find('+'); plus != std::string::npos) {
    auto k = AbelianFieldSpec::compositum(parse_abelian_field(s.substr(0, plus)), parse_abelian_field(s.substr(plus + 1)));
    return k;
  }
  if (s == "Q" || s == "rationals") return AbelianFieldSpec::rationals();
  if (s == "gaussian" || s == "Q(i)") return AbelianFieldSpec::gaussian();
  auto colon = s.find(':');
  std::string kind = trim(s.substr(0, colon));
  std::string arg = colon == std::string::npos ? "" : trim(s.substr(colon + 1));
  if (kind == "cyclotomic") {
    std::int64_t m = parse_int(arg);
    if (m < 1) throw InputError("cyclotomic field needs m >= 1");
    return AbelianFieldSpec::cyclotomic(static_cast<std::uint64_t>(m));
  }
  if (kind == "quadratic") return AbelianFieldSpec::quadratic(parse_int(arg));
  if (kind == "abelian") {
    auto c2 = arg.find(':');
    std::int64_t f = parse_int(trim(arg.substr(0, c2)));
    if (f < 1) throw InputError("conductor must be positive");
    std::vector<std::uint64_t> gens;
    if (c2 != std::string::npos) {
      std::string rest = arg.substr(c2 + 1);
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        auto comma = rest.find(',', pos);
        std::string tok = trim(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (!tok.empty()) {
          std::int64_t g = parse_int(tok);
          gens.push_back(static_cast<std::uint64_t>(mod(g, f)));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    return AbelianFieldSpec::from_generators(static_cast<std::uint64_t>(f), gens);
  }
  throw InputError("unknown field spec '" + s + "'");
}

std::vector<std::uint64_t> cyclotomic_intersection(const AbelianFieldSpec& k, std::uint64_t n) {
  if (n == 0) throw InputError("cyclotomic_intersection needs n >= 1");
  const std::uint64_t f = k.conductor();
  const std::uint64_t l = std::lcm(f, n);
  check_conductor(l);
  std::set<std::uint64_t> out;
  const auto& h = k.subgroup();
  for (std::uint64_t a = 0; a < l; ++a) {
    if (l != 1 && std::gcd(a, l) != 1) continue;
    if (std::binary_search(h.begin(), h.end(), a % f)) out.insert(a % n);
  }
  return {out.begin(), out.end()};
}

LiedahlVerdict liedahl_condition(const FiniteGroup& g, const AbelianFieldSpec& k) {
  if (g.order() > 1 && !p_group_prime(g)) throw PreconditionFailed("Liedahl's condition is defined for p-groups");
  auto presentations = enumerate_metacyclic_presentations(g);
  if (presentations.empty()) throw PreconditionFailed("group is not metacyclic");
  LiedahlVerdict v;
  std::uint64_t cached_n = 0;
  std::vector<std::uint64_t> h;
  for (const auto& pr : presentations) {
    ++v.presentations_scanned;
    if (pr.n != cached_n) {
      h = cyclotomic_intersection(k, pr.n);
      cached_n = pr.n;
    }
    if (std::binary_search(h.begin(), h.end(), pr.t % pr.n)) {
      v.holds = true;
      v.witness = pr;
      break;
    }
  }
  return v;
}

TameAdmissibilityVerdict tame_admissibility_criterion(const FiniteGroup& g, const AbelianFieldSpec& k) {
  TameAdmissibilityVerdict out;
  out.holds = true;
  for (auto [p, mult] : factorize(g.order())) {
    const auto prime = static_cast<std::uint32_t>(p);
    FiniteGroup sylow = subgroup_as_group(g, sylow_subgroup(g, prime));
    if (enumerate_metacyclic_presentations(sylow).empty()) {
      out.holds = false;
      out.offending_prime = prime;
      out.reason = "the " + std::to_string(p) + "-Sylow subgroup is not metacyclic";
      return out;
    }
    auto v = liedahl_condition(sylow, k);
    out.per_prime.emplace_back(prime, v);
    if (!v.holds) {
      out.holds = false;
      out.offending_prime = prime;
      out.reason = "the " + std::to_string(p) + "-Sylow subgroup fails Liedahl's condition over " + k.name();
      return out;
    }
  }
  return out;
}

}  // namespace admiss
