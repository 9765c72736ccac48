#include "admiss/local_field.hpp"

#include <cctype>
#include <map>
#include <numeric>

#include "admiss/group_builders.hpp"
#include "admiss/group_queries.hpp"
#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits "a=1,b=2" into a key -> value map; rejects duplicates.
std::map<std::string, std::string> key_values(std::string_view text) {
  std::map<std::string, std::string> out;
  std::string s(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string item = trim(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (!item.empty()) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InputError("expected key=value, got '" + item + "'");
      std::string key = trim(item.substr(0, eq));
      if (out.count(key)) throw InputError("duplicate key '" + key + "'");
      out[key] = trim(item.substr(eq + 1));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::int64_t to_int(const std::string& v, const std::string& key) {
  try {
    std::size_t used = 0;
    std::int64_t x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw InputError("value of '" + key + "' is not an integer: '" + v + "'");
}

std::uint32_t to_positive(const std::string& v, const std::string& key, bool allow_zero = false) {
  std::int64_t x = to_int(v, key);
  if (x < (allow_zero ? 0 : 1) || x > 1'000'000) throw InputError("value of '" + key + "' out of range: " + v);
  return static_cast<std::uint32_t>(x);
}

std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }

}  // namespace

void validate(const LocalFieldParams& k) {
  if (!is_prime(k.p)) throw InputError("local field: p = " + std::to_string(k.p) + " is not prime");
  if (k.e == 0 || k.f == 0) throw InputError("local field: e and f must be positive");
  if (k.n != k.e * k.f) throw InputError("local field: n must equal e*f");
  if (k.f > 40 || k.q != ipow(k.p, k.f)) throw InputError("local field: q must equal p^f");
  if (k.p == 2 && k.s0 == 0) throw InputError("local field: every 2-adic field contains -1, so s0 >= 1");
  if (k.s0 > 0) {
    if (k.s0 > 30) throw InputError("local field: s0 too large");
    std::uint64_t phi = euler_phi(ipow(k.p, k.s0));
    if (k.e % phi != 0)
      throw InputError("local field: mu_" + std::to_string(ipow(k.p, k.s0)) + " needs phi = " +
                       std::to_string(phi) + " to divide e = " + std::to_string(k.e));
  }
}

LocalFieldParams make_local_field(std::uint32_t p, std::uint32_t e, std::uint32_t f, std::uint32_t s0) {
  LocalFieldParams k;
  k.p = p;
  k.e = e;
  k.f = f;
  k.n = e * f;
  k.s0 = s0;
  k.q = (is_prime(p) && f <= 40) ? ipow(p, f) : 0;
  validate(k);
  return k;
}

LocalFieldParams rational_padic(std::uint32_t p) { return make_local_field(p, 1, 1, p == 2 ? 1 : 0); }

std::string to_string(const LocalFieldParams& k) {
  return "p=" + std::to_string(k.p) + ",n=" + std::to_string(k.n) + ",e=" + std::to_string(k.e) +
         ",f=" + std::to_string(k.f) + ",s0=" + std::to_string(k.s0);
}

LocalFieldParams parse_local_field(std::string_view text) {
  std::string s = trim(text);
  if (s == "Q2") return rational_padic(2);
  if (s == "Q2(i)") return make_local_field(2, 2, 1, 2);
  if (s.size() >= 2 && s[0] == 'Q' && std::isdigit(static_cast<unsigned char>(s[1])) &&
      s.find_first_not_of("0123456789", 1) == std::string::npos)
    return rational_padic(to_positive(s.substr(1), "p"));
  if (s.rfind("Qp:", 0) == 0) return rational_padic(to_positive(s.substr(3), "p"));
  if (s.rfind("Qp(sqrtp):", 0) == 0) {
    std::uint32_t p = to_positive(s.substr(10), "p");
    // Q_p(sqrt p) is totally ramified of degree 2; it contains mu_p only for p = 3
    // via sqrt(-3), which is a different field, so s0 = 0 for odd p.
    if (p == 2) throw InputError("Qp(sqrtp) is supported for odd p only");
    return make_local_field(p, 2, 1, 0);
  }
  auto kv = key_values(s);
  for (const auto& [key, _] : kv)
    if (key != "p" && key != "n" && key != "e" && key != "f" && key != "s0" && key != "s" && key != "g" && key != "h")
      throw InputError("unknown local field key '" + key + "'");
  if (!kv.count("p")) throw InputError("local field needs p");
  std::uint32_t p = to_positive(kv["p"], "p");
  std::uint32_t e = kv.count("e") ? to_positive(kv["e"], "e") : 0;
  std::uint32_t f = kv.count("f") ? to_positive(kv["f"], "f") : 0;
  std::uint32_t n = kv.count("n") ? to_positive(kv["n"], "n") : 0;
  if (!e && !f) {
    e = n ? n : 1;
    f = 1;
  } else if (!e) {
    if (!n || n % f) throw InputError("local field: cannot infer e from n and f");
    e = n / f;
  } else if (!f) {
    if (!n) f = 1;
    else if (n % e) throw InputError("local field: cannot infer f from n and e");
    else f = n / e;
  }
  std::uint32_t s0 = kv.count("s0") ? to_positive(kv["s0"], "s0", true) : (p == 2 ? 1 : 0);
  LocalFieldParams k = make_local_field(p, e, f, s0);
  if (n && n != k.n) throw InputError("local field: n = " + std::to_string(n) + " but e*f = " + std::to_string(k.n));
  if (kv.count("s")) k.s = to_positive(kv["s"], "s", true);
  if (kv.count("g")) k.g = to_int(kv["g"], "g");
  if (kv.count("h")) k.h = to_int(kv["h"], "h");
  return k;
}

Presentation presentation_of_max_p_extension(const LocalFieldParams& k) {
  validate(k);
  Presentation pr;
  pr.mode = PresentationMode::pro_p;
  pr.p = k.p;
  if (k.s0 == 0) {
    for (std::uint32_t j = 1; j <= k.n + 1; ++j) pr.generators.push_back("x" + std::to_string(j));
    return pr;
  }
  for (std::uint32_t j = 1; j <= k.n + 2; ++j) pr.generators.push_back("x" + std::to_string(j));
  const std::uint64_t ps0 = ipow(k.p, k.s0);
  std::vector<Word> factors;
  std::size_t first_pair;
  if (ps0 == 2) {
    if (k.n % 2 == 0)
      throw PreconditionFailed("the maximal 2-extension presentation with p^s0 = 2 and n even is not covered");
    factors.push_back(Word::generator(0, 2));
    factors.push_back(Word::generator(1, 4));
    first_pair = 1;
  } else {
    factors.push_back(Word::generator(0, static_cast<std::int64_t>(ps0)));
    first_pair = 0;
  }
  for (std::size_t a = first_pair; a + 1 < pr.generators.size(); a += 2)
    factors.push_back(Word::commutator(Word::generator(a), Word::generator(a + 1)));
  pr.relators.push_back(Word::product(std::move(factors)));
  pr.validate();
  return pr;
}

QuotientResult is_realizable_local(const FiniteGroup& g, const LocalFieldParams& k, const SearchOptions& options) {
  if (g.order() > 1 && !is_p_group(g, k.p))
    throw PreconditionFailed("local realizability is decided here for " + std::to_string(k.p) + "-groups only");
  return is_prop_quotient(presentation_of_max_p_extension(k), g, options);
}

std::uint64_t power_class_count(const LocalFieldParams& k, std::uint64_t m) {
  validate(k);
  if (m == 0) throw InputError("power_class_count: m must be positive");
  const int v = valuation(m, k.p);
  const std::uint64_t m_p = ipow(k.p, static_cast<unsigned>(v));
  const std::uint64_t mu = std::gcd(m, k.q - 1) * std::gcd(m_p, ipow(k.p, k.s0));
  return m * mu * ipow(k.p, static_cast<unsigned>(k.n * v));
}

std::size_t abelianization_rank_mod_p(const Presentation& pr, std::uint32_t p) {
  const std::size_t n = pr.generator_count();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : pr.relators) {
    auto sums = r.exponent_sums(n);
    for (auto& x : sums) x = mod(x, p);
    rows.push_back(std::move(sums));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    std::int64_t inv = mod_inverse(rows[rank][col], p);
    for (auto& x : rows[rank]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      std::int64_t c = rows[r][col];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] = mod(rows[r][j] - c * rows[rank][j], p);
    }
    ++rank;
  }
  return n - rank;
}

std::string to_string(DistinguishedField tag) {
  switch (tag) {
    case DistinguishedField::none:
      return "none";
    case DistinguishedField::q3_zeta9_real:
      return "zeta9";
    case DistinguishedField::q5_rho11:
      return "rho11";
    case DistinguishedField::q3_rho7:
      return "rho7";
  }
  return "?";
}

LocalFieldParams LocalExtensionSpec::top_degrees() const {
  LocalFieldParams top = base;
  top.e = base.e * rel_e;
  top.f = base.f * rel_f;
  top.n = top.e * top.f;
  top.q = ipow(base.p, top.f);
  top.s.reset();
  top.g.reset();
  top.h.reset();
  return top;
}

void validate(const LocalExtensionSpec& ext) {
  validate(ext.base);
  if (ext.rel_e == 0 || ext.rel_f == 0) throw InputError("extension degrees must be positive");
  if (static_cast<std::uint64_t>(ext.base.f) * ext.rel_f > 40) throw InputError("residue degree too large");
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InputError(std::string("tag ") + to_string(ext.tag) + " names " + what);
  };
  const bool over_q3 = ext.base.p == 3 && ext.base.n == 1;
  switch (ext.tag) {
    case DistinguishedField::none:
      break;
    case DistinguishedField::q3_zeta9_real:
      require(over_q3 && ext.rel_e == 3 && ext.rel_f == 1, "a totally ramified cubic over Q3");
      break;
    case DistinguishedField::q5_rho11:
      require(ext.base.p == 5 && ext.base.n == 1 && ext.rel_e == 1 && ext.rel_f == 5, "the unramified quintic over Q5");
      break;
    case DistinguishedField::q3_rho7:
      require(over_q3 && ext.rel_e == 1 && ext.rel_f == 6, "the unramified sextic over Q3");
      break;
  }
}

LocalExtensionSpec parse_local_extension(const LocalFieldParams& base, std::string_view text) {
  auto kv = key_values(text);
  LocalExtensionSpec ext;
  ext.base = base;
  for (const auto& [key, value] : kv) {
    if (key == "e") ext.rel_e = to_positive(value, key);
    else if (key == "f") ext.rel_f = to_positive(value, key);
    else if (key == "tag") {
      if (value == "zeta9") ext.tag = DistinguishedField::q3_zeta9_real;
      else if (value == "rho11") ext.tag = DistinguishedField::q5_rho11;
      else if (value == "rho7") ext.tag = DistinguishedField::q3_rho7;
      else if (value != "none") throw InputError("unknown extension tag '" + value + "'");
    } else {
      throw InputError("unknown extension key '" + key + "'");
    }
  }
  validate(ext);
  return ext;
}

namespace {

int literal_sensitive_case(const LocalExtensionSpec& ext) {
  const auto& k = ext.base;
  if (k.p == 3 && k.n == 1 && ext.tag == DistinguishedField::q3_zeta9_real) return 1;
  if (k.p == 5 && k.n == 1 && ext.rel_e == 1 && ext.rel_f == 5) return 2;
  if (k.p == 3 && k.n >= 1 && k.n <= 3 && ext.rel_e == 1 && ext.rel_f == 3) return 3;
  if (k.p == 3 && k.n == 1 && ext.rel_e == 1 && ext.rel_f == 6) return 4;
  return 0;
}

RouteTrace compute_route(const LocalExtensionSpec& ext) {
  RouteTrace t;
  const std::uint32_t p = ext.base.p;
  const std::uint32_t r = ext.degree();
  t.reduced_base = ext.base;
  t.reduced_degree = r;
  if (r == 1) {
    t.route = "trivial";
    t.steps.push_back("l = k");
    return t;
  }
  if (std::gcd(r, p) == 1) {
    t.route = "prime-to-p";
    t.steps.push_back("gcd([l:k], p) = gcd(" + std::to_string(r) + ", " + std::to_string(p) + ") = 1");
    return t;
  }
  // Split off the unramified prime-to-p part of the residue extension.
  const std::uint32_t f_pprime = static_cast<std::uint32_t>(prime_to_part(ext.rel_f, p));
  LocalExtensionSpec reduced = ext;
  if (f_pprime > 1) {
    reduced.base = make_local_field(p, ext.base.e, ext.base.f * f_pprime, ext.base.s0);
    reduced.rel_f = ext.rel_f / f_pprime;
    reduced.tag = DistinguishedField::none;
    t.steps.push_back("pass to the unramified subextension of degree " + std::to_string(f_pprime) +
                      " (prime-to-p lemma), leaving degree " + std::to_string(reduced.degree()) + " over a field of degree " +
                      std::to_string(reduced.base.n));
    if (int c = literal_sensitive_case(reduced))
      throw Error("reduction of a non-sensitive extension reached sensitive case " + std::to_string(c));
  }
  t.reduced_base = reduced.base;
  t.reduced_degree = reduced.degree();
  const std::int64_t n = reduced.base.n;
  const std::int64_t rr = reduced.degree();
  t.has_inequality = true;
  t.lhs = ceil_half(n * rr - 1);
  if (reduced.rel_f == 1) {
    t.rhs = n + 1;
    t.inequality_holds = t.lhs >= t.rhs;
    if (t.inequality_holds) {
      t.route = "totally-ramified";
      return t;
    }
    if (p == 3 && n == 1 && rr == 3 && reduced.tag != DistinguishedField::q3_zeta9_real) {
      t.route = "totally-ramified, parameters preserved";
      t.steps.push_back("l meets the tame closure of k only in k, so g, h, s are unchanged");
      return t;
    }
    throw Error("no route for totally ramified extension of degree " + std::to_string(rr));
  }
  t.rhs = n + 2;
  t.inequality_holds = t.lhs >= t.rhs;
  if (t.inequality_holds) {
    t.route = "general";
    return t;
  }
  throw Error("no route for extension of degree " + std::to_string(rr) + " over a field of degree " + std::to_string(n));
}

}  // namespace

std::string RouteTrace::summary() const {
  std::string out = route;
  if (has_inequality)
    out += ", ceil((nr-1)/2) = " + std::to_string(lhs) + (inequality_holds ? " >= " : " < ") + "n+" +
           std::to_string(rhs - static_cast<std::int64_t>(reduced_base.n)) + " = " + std::to_string(rhs);
  return out;
}

std::string SensitivityVerdict::description() const {
  if (sensitive) {
    std::string out = "sensitive case (" + std::to_string(sensitive_case) + ")";
    if (sensitive_case == 1) out += ", transfer unknown";
    return out;
  }
  return route ? "non-sensitive: " + route->summary() : "non-sensitive";
}

SensitivityVerdict classify_extension(const LocalExtensionSpec& ext) {
  validate(ext);
  SensitivityVerdict v;
  v.sensitive_case = literal_sensitive_case(ext);
  v.sensitive = v.sensitive_case != 0;
  if (!v.sensitive && ext.base.p != 2) v.route = compute_route(ext);
  return v;
}

RouteTrace transfer_route(const LocalExtensionSpec& ext) {
  validate(ext);
  if (ext.base.p == 2) throw PreconditionFailed("transfer routes are stated for odd p only");
  if (int c = literal_sensitive_case(ext))
    throw PreconditionFailed("extension is sensitive (case " + std::to_string(c) + ")");
  RouteTrace t = compute_route(ext);
  // Re-verify the inequality the route relies on.
  if (t.has_inequality) {
    const std::int64_t n = t.reduced_base.n;
    const std::int64_t lhs = ceil_half(n * static_cast<std::int64_t>(t.reduced_degree) - 1);
    if (lhs != t.lhs || (t.route != "totally-ramified, parameters preserved" && lhs < t.rhs))
      throw Error("route inequality failed re-verification");
  }
  return t;
}

Presentation q3_s3_reduced_presentation() {
  return parse_presentation("<s, t, x0, x1 | t^2, x0^3, x1^3, t^s = t^3, x0^s = (x0 t x0^-1 t)^2>");
}

std::string SensitiveCensus::breakdown() const {
  return std::to_string(case1) + " + " + std::to_string(case2) + " + (" + std::to_string(case3_degree1) + " + " +
         std::to_string(case3_quadratic) + " + (" + std::to_string(case3_cyclic_cubic) + " + " +
         std::to_string(case3_noncyclic_cubic) + ")) + " + std::to_string(case4);
}

SensitiveCensus count_sensitive_extensions(const SearchOptions& options) {
  SensitiveCensus c;
  const LocalFieldParams q3 = rational_padic(3);
  // Cases (1), (2) and (4) each name a single field: one tagged field, and
  // unramified extensions of a given degree are unique.
  c.case1 = 1;
  c.case2 = 1;
  c.case4 = 1;
  // Case (3) counts the ground fields k of degree 1, 2, 3 over Q3.
  c.case3_degree1 = 1;
  c.case3_quadratic = power_class_count(q3, 2) - 1;
  const std::size_t rank = abelianization_rank_mod_p(presentation_of_max_p_extension(q3), 3);
  c.case3_cyclic_cubic = (ipow(3, static_cast<unsigned>(rank)) - 1) / (3 - 1);
  const FiniteGroup s3 = symmetric_group(3);
  auto normals = count_normal_subgroups_with_quotient(q3_s3_reduced_presentation(), s3, options);
  c.s3_epimorphisms = normals.epimorphisms;
  c.s3_automorphisms = normals.automorphisms;
  c.s3_extensions = normals.normal_subgroups;
  for (auto o : s3.element_orders())
    if (o == 2) ++c.s3_involutions;
  c.case3_noncyclic_cubic = c.s3_involutions * c.s3_extensions;
  c.total = c.case1 + c.case2 + (c.case3_degree1 + c.case3_quadratic + (c.case3_cyclic_cubic + c.case3_noncyclic_cubic)) +
            c.case4;
  return c;
}

std::vector<LocalExtensionSpec> list_sensitive_extensions(const SearchOptions& options) {
  const SensitiveCensus c = count_sensitive_extensions(options);
  std::vector<LocalExtensionSpec> out;
  auto add = [&](LocalFieldParams base, std::uint32_t e, std::uint32_t f, DistinguishedField tag, std::string label) {
    LocalExtensionSpec ext;
    ext.base = base;
    ext.rel_e = e;
    ext.rel_f = f;
    ext.tag = tag;
    ext.label = std::move(label);
    validate(ext);
    out.push_back(std::move(ext));
  };
  const LocalFieldParams q3 = rational_padic(3);
  add(q3, 3, 1, DistinguishedField::q3_zeta9_real, "case 1: Q3(zeta9+zeta9^-1)/Q3");
  add(rational_padic(5), 1, 5, DistinguishedField::q5_rho11, "case 2: Q5(rho11)/Q5");
  add(q3, 1, 3, DistinguishedField::none, "case 3: unramified cubic over Q3");
  // Quadratic ground fields: one unramified, the rest ramified; among the
  // ramified ones exactly Q3(sqrt(-3)) contains mu_3.
  add(make_local_field(3, 1, 2, 0), 1, 3, DistinguishedField::none, "case 3: over Q3(sqrt(-1)), unramified quadratic");
  for (std::uint64_t k = 1; k < c.case3_quadratic; ++k) {
    const bool with_mu3 = k + 1 == c.case3_quadratic;
    add(make_local_field(3, 2, 1, with_mu3 ? 1 : 0), 1, 3, DistinguishedField::none,
        with_mu3 ? "case 3: over Q3(sqrt(-3))" : "case 3: over ramified quadratic #" + std::to_string(k));
  }
  // Cyclic cubic ground fields: one unramified, the rest totally ramified.
  add(make_local_field(3, 1, 3, 0), 1, 3, DistinguishedField::none, "case 3: over the unramified cubic");
  for (std::uint64_t k = 1; k < c.case3_cyclic_cubic; ++k)
    add(make_local_field(3, 3, 1, 0), 1, 3, DistinguishedField::none,
        k == 1 ? "case 3: over Q3(zeta9+zeta9^-1)" : "case 3: over ramified cyclic cubic #" + std::to_string(k));
  // Non-Galois cubic ground fields are totally ramified.
  for (std::uint64_t j = 0; j < c.s3_extensions; ++j)
    for (std::uint64_t i = 0; i < c.s3_involutions; ++i)
      add(make_local_field(3, 3, 1, 0), 1, 3, DistinguishedField::none,
          "case 3: over non-Galois cubic (S3-extension " + std::to_string(j + 1) + ", involution " + std::to_string(i + 1) + ")");
  add(q3, 1, 6, DistinguishedField::q3_rho7, "case 4: Q3(rho7)/Q3");
  return out;
}

}  // namespace admiss
