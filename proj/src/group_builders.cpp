#include "admiss/group_builders.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "admiss/numtheory.hpp"

namespace admiss {

namespace {

std::size_t checked_product(const std::vector<std::uint64_t>& factors) {
  std::uint64_t total = 1;
  for (auto f : factors) {
    if (f == 0) throw InputError("cyclic factor must be positive");
    total *= f;
    if (total > kMaxRepresentableOrder) throw InputError("group order exceeds representable maximum");
  }
  return static_cast<std::size_t>(total);
}

std::string power_label(const std::string& name, std::uint64_t e) {
  if (e == 0) return {};
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

}  // namespace

MetacyclicParams normalized(MetacyclicParams params) {
  if (params.m == 0 || params.n == 0) throw InputError("metacyclic: m and n must be positive");
  const std::uint64_t n = params.n;
  params.i %= n;
  params.t %= n;
  if (std::gcd(params.t, n) != 1 && n > 1)
    throw InputError("metacyclic: gcd(t, n) = 1 fails for " + to_string(params));
  if (powmod(params.t, params.m, n) != 1 % n)
    throw InputError("metacyclic: t^m = 1 (mod n) fails for " + to_string(params));
  if ((params.i * ((params.t + n - 1) % n)) % n != 0)
    throw InputError("metacyclic: i(t-1) = 0 (mod n) fails for " + to_string(params));
  return params;
}

std::string to_string(const MetacyclicParams& p) {
  return "M(" + std::to_string(p.m) + "," + std::to_string(p.n) + "," + std::to_string(p.i) + "," +
         std::to_string(p.t) + ")";
}

FiniteGroup cyclic_group(std::uint64_t n, const GroupOptions& options) {
  return abelian_group({n}, options);
}

FiniteGroup abelian_group(const std::vector<std::uint64_t>& invariants, const GroupOptions& options) {
  std::vector<std::uint64_t> inv = invariants.empty() ? std::vector<std::uint64_t>{1} : invariants;
  const std::size_t order = checked_product(inv);
  auto product = [&](Element a, Element b) {
    Element out = 0, scale = 1;
    for (auto f : inv) {
      Element ca = a % f, cb = b % f;
      out += static_cast<Element>((ca + cb) % f) * scale;
      scale *= static_cast<Element>(f);
      a /= static_cast<Element>(f);
      b /= static_cast<Element>(f);
    }
    return out;
  };
  std::vector<Element> hints;
  Element scale = 1;
  for (auto f : inv) {
    if (f > 1) hints.push_back(scale);
    scale *= static_cast<Element>(f);
  }
  return FiniteGroup::from_product(order, product, options, {}, hints);
}

FiniteGroup symmetric_group(unsigned degree, const GroupOptions& options) {
  if (degree == 0) throw InputError("symmetric group degree must be positive");
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (perms.size() > kMaxRepresentableOrder) throw InputError("symmetric group too large");
  auto index_of = [&](const std::vector<unsigned>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  for (const auto& q : perms) {
    std::string s = "(";
    for (unsigned k = 0; k < degree; ++k) s += std::to_string(q[k] + 1) + (k + 1 < degree ? " " : "");
    labels.push_back(s + ")");
  }
  // a * b applies a first, then b.
  auto product = [&](Element a, Element b) {
    std::vector<unsigned> r(degree);
    for (unsigned k = 0; k < degree; ++k) r[k] = perms[b][perms[a][k]];
    return index_of(r);
  };
  std::vector<Element> hints;
  if (degree > 1) {
    std::vector<unsigned> cyc(degree), tr(degree);
    std::iota(tr.begin(), tr.end(), 0u);
    std::swap(tr[0], tr[1]);
    for (unsigned k = 0; k < degree; ++k) cyc[k] = (k + 1) % degree;
    hints = {index_of(cyc), index_of(tr)};
  }
  return FiniteGroup::from_product(perms.size(), product, options, std::move(labels), hints);
}

FiniteGroup build_metacyclic(MetacyclicParams params, const GroupOptions& options) {
  params = normalized(params);
  const std::uint64_t m = params.m, n = params.n;
  if (m * n > kMaxRepresentableOrder) throw InputError("metacyclic group order exceeds representable maximum");
  std::vector<std::uint64_t> tpow(m);
  tpow[0] = 1 % n;
  for (std::uint64_t c = 1; c < m; ++c) tpow[c] = tpow[c - 1] * params.t % n;
  // Element x^a y^b has index a*n + b; y^b x^c = x^c y^{b t^c}.
  auto product = [&](Element u, Element v) {
    std::uint64_t a = u / n, b = u % n, c = v / n, d = v % n;
    std::uint64_t e = b * tpow[c] + d;
    std::uint64_t s = a + c;
    if (s >= m) {
      s -= m;
      e += params.i;
    }
    return static_cast<Element>(s * n + e % n);
  };
  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < m; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::string s = power_label("x", a);
      std::string yb = power_label("y", b);
      if (!s.empty() && !yb.empty()) s += " ";
      s += yb;
      labels.push_back(s.empty() ? "1" : s);
    }
  const Element x = m == 1 ? static_cast<Element>(params.i) : static_cast<Element>(n);
  const Element y = static_cast<Element>(1 % n);
  return FiniteGroup::from_product(m * n, product, options, std::move(labels), {x, y});
}

FiniteGroup build_central_extension(const CentralExtensionSpec& spec, const GroupOptions& options) {
  if (!is_prime(spec.p)) throw InputError("central extension: p must be prime");
  const std::size_t r = spec.rank;
  const std::size_t zc = spec.center.size();
  std::uint64_t zorder = 1;
  for (auto c : spec.center) {
    if (c == 0) throw InputError("central extension: center invariants must be positive");
    zorder *= c;
  }
  const std::uint64_t vorder = ipow(spec.p, static_cast<unsigned>(r));
  if (vorder * zorder > kMaxRepresentableOrder)
    throw InputError("central extension order exceeds representable maximum");

  auto check_vec = [&](const std::vector<std::int64_t>& v, const char* what) {
    if (!v.empty() && v.size() != zc)
      throw InputError(std::string("central extension: ") + what + " vector has wrong length");
  };
  // comm[j][i] for j > i
  std::vector<std::vector<std::vector<std::int64_t>>> comm(
      r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(zc, 0)));
  for (const auto& c : spec.commutators) {
    if (c.j >= r || c.i >= r || c.j <= c.i)
      throw InputError("central extension: commutator pairs must satisfy rank > j > i");
    check_vec(c.value, "commutator");
    for (std::size_t k = 0; k < c.value.size(); ++k) comm[c.j][c.i][k] = c.value[k];
  }
  std::vector<std::vector<std::int64_t>> pw(r, std::vector<std::int64_t>(zc, 0));
  if (!spec.powers.empty() && spec.powers.size() != r)
    throw InputError("central extension: need one power vector per generator");
  for (std::size_t g = 0; g < spec.powers.size(); ++g) {
    check_vec(spec.powers[g], "power");
    for (std::size_t k = 0; k < spec.powers[g].size(); ++k) pw[g][k] = spec.powers[g][k];
  }

  const std::uint32_t p = spec.p;
  auto decode = [&](Element e, std::vector<std::int64_t>& v, std::vector<std::int64_t>& z) {
    std::uint64_t zi = e % zorder, vi = e / zorder;
    for (std::size_t k = 0; k < r; ++k) {
      v[k] = static_cast<std::int64_t>(vi % p);
      vi /= p;
    }
    for (std::size_t k = 0; k < zc; ++k) {
      z[k] = static_cast<std::int64_t>(zi % spec.center[k]);
      zi /= spec.center[k];
    }
  };
  auto encode = [&](const std::vector<std::int64_t>& v, const std::vector<std::int64_t>& z) {
    std::uint64_t vi = 0, zi = 0, scale = 1;
    for (std::size_t k = r; k-- > 0;) vi = vi * p + static_cast<std::uint64_t>(v[k]);
    for (std::size_t k = 0; k < zc; ++k) {
      zi += static_cast<std::uint64_t>(mod(z[k], spec.center[k])) * scale;
      scale *= spec.center[k];
    }
    return static_cast<Element>(vi * zorder + zi);
  };

  std::vector<std::int64_t> va(r), za(zc), vb(r), zb(zc), vc(r), zcv(zc);
  auto product = [&](Element a, Element b) {
    decode(a, va, za);
    decode(b, vb, zb);
    for (std::size_t k = 0; k < zc; ++k) zcv[k] = za[k] + zb[k];
    // Collect x^va x^vb: moving x_i^{vb_i} left past x_j^{va_j} (j > i)
    // contributes [x_j, x_i]^{va_j vb_i}.
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        std::int64_t f = va[j] * vb[i];
        if (f == 0) continue;
        for (std::size_t k = 0; k < zc; ++k) zcv[k] += f * comm[j][i][k];
      }
    for (std::size_t k = 0; k < r; ++k) {
      std::int64_t s = va[k] + vb[k];
      if (s >= static_cast<std::int64_t>(p)) {
        s -= p;
        for (std::size_t c = 0; c < zc; ++c) zcv[c] += pw[k][c];
      }
      vc[k] = s;
    }
    return encode(vc, zcv);
  };

  std::vector<std::string> gnames = spec.generator_names;
  for (std::size_t k = gnames.size(); k < r; ++k) gnames.push_back("x" + std::to_string(k + 1));
  std::vector<std::string> labels;
  const std::size_t order = static_cast<std::size_t>(vorder * zorder);
  std::vector<std::int64_t> v(r), z(zc);
  for (Element e = 0; e < order; ++e) {
    decode(e, v, z);
    std::string s;
    for (std::size_t k = 0; k < r; ++k) {
      std::string part = power_label(gnames[k], static_cast<std::uint64_t>(v[k]));
      if (part.empty()) continue;
      if (!s.empty()) s += " ";
      s += part;
    }
    bool any = std::any_of(z.begin(), z.end(), [](auto x) { return x != 0; });
    if (any) {
      std::string zs;
      for (std::size_t k = 0; k < zc; ++k) {
        std::string name = k < spec.center_names.size() ? spec.center_names[k] : "z" + std::to_string(k + 1);
        std::string part = power_label(name, static_cast<std::uint64_t>(z[k]));
        if (part.empty()) continue;
        if (!zs.empty()) zs += " ";
        zs += part;
      }
      if (!s.empty()) s += " ";
      s += zs;
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  std::vector<Element> hints;
  for (std::size_t k = 0; k < r; ++k) hints.push_back(static_cast<Element>(ipow(p, static_cast<unsigned>(k)) * zorder));
  return FiniteGroup::from_product(order, product, options, std::move(labels), std::move(hints));
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<ActionGenerator>& action, const GroupOptions& options) {
  const std::size_t nn = normal.order(), hn = acting.order();
  if (nn * hn > kMaxRepresentableOrder) throw InputError("semidirect product order exceeds representable maximum");
  for (const auto& a : action) {
    if (a.acting >= hn) throw InputError("semidirect: acting element out of range");
    if (a.permutation.size() != nn) throw InputError("semidirect: permutation has wrong length");
    std::vector<bool> hit(nn, false);
    for (Element x : a.permutation) {
      if (x >= nn || hit[x]) throw InputError("semidirect: action is not a permutation");
      hit[x] = true;
    }
    for (Element x = 0; x < nn; ++x)
      for (Element y = 0; y < nn; ++y)
        if (a.permutation[normal.mul(x, y)] != normal.mul(a.permutation[x], a.permutation[y]))
          throw InputError("semidirect: action of element " + std::to_string(a.acting) +
                           " is not an automorphism");
  }
  // phi_{h s} = phi_h o phi_s, propagated from the identity.
  std::vector<std::vector<Element>> phi(hn);
  std::vector<Element> idperm(nn);
  std::iota(idperm.begin(), idperm.end(), Element{0});
  phi[acting.identity()] = idperm;
  std::queue<Element> queue;
  queue.push(acting.identity());
  while (!queue.empty()) {
    Element h = queue.front();
    queue.pop();
    for (const auto& a : action) {
      Element hs = acting.mul(h, a.acting);
      std::vector<Element> composed(nn);
      for (Element x = 0; x < nn; ++x) composed[x] = phi[h][a.permutation[x]];
      if (phi[hs].empty()) {
        phi[hs] = std::move(composed);
        queue.push(hs);
      } else if (phi[hs] != composed) {
        throw InputError("semidirect: action is not a homomorphism");
      }
    }
  }
  for (Element h = 0; h < hn; ++h)
    if (phi[h].empty()) throw InputError("semidirect: acting elements do not generate the acting group");

  auto product = [&](Element u, Element v) {
    Element n1 = u % nn, h1 = u / nn, n2 = v % nn, h2 = v / nn;
    return static_cast<Element>(acting.mul(h1, h2) * nn + normal.mul(n1, phi[h1][n2]));
  };
  std::vector<Element> hints;
  for (Element g : normal.generators()) hints.push_back(acting.identity() * nn + g);
  for (Element g : acting.generators()) hints.push_back(g * nn + normal.identity());
  return FiniteGroup::from_product(nn * hn, product, options, {}, std::move(hints));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const GroupOptions& options) {
  std::vector<Element> idperm(a.order());
  std::iota(idperm.begin(), idperm.end(), Element{0});
  std::vector<ActionGenerator> action;
  for (Element g : b.generators()) action.push_back({g, idperm});
  return semidirect_product(a, b, action, options);
}

std::vector<ActionGenerator> linear_action(std::uint32_t p, std::size_t k, const FiniteGroup& acting,
                                           const std::vector<Element>& acting_gens,
                                           const std::vector<std::vector<std::int64_t>>& matrices) {
  if (acting_gens.size() != matrices.size()) throw InputError("linear action: one matrix per generator");
  const std::size_t size = ipow(p, static_cast<unsigned>(k));
  std::vector<ActionGenerator> out;
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    const auto& mat = matrices[g];
    if (mat.size() != k * k) throw InputError("linear action: matrix must be k x k");
    if (acting_gens[g] >= acting.order()) throw InputError("linear action: generator out of range");
    ActionGenerator a{acting_gens[g], std::vector<Element>(size)};
    std::vector<std::int64_t> v(k), w(k);
    for (std::size_t e = 0; e < size; ++e) {
      std::size_t rest = e;
      for (std::size_t c = 0; c < k; ++c) {
        v[c] = static_cast<std::int64_t>(rest % p);
        rest /= p;
      }
      std::size_t img = 0, scale = 1;
      for (std::size_t row = 0; row < k; ++row) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < k; ++c) s += mat[row * k + c] * v[c];
        img += static_cast<std::size_t>(mod(s, p)) * scale;
        scale *= p;
      }
      a.permutation[e] = static_cast<Element>(img);
    }
    out.push_back(std::move(a));
  }
  return out;
}

CentralExtensionSpec heisenberg_spec(std::uint32_t p) {
  CentralExtensionSpec s;
  s.p = p;
  s.rank = 2;
  s.center = {p};
  s.commutators = {{1, 0, {1}}};  // [y, x] = u
  s.generator_names = {"x", "y"};
  s.center_names = {"u"};
  return s;
}

FiniteGroup heisenberg_group(std::uint32_t p, const GroupOptions& options) {
  return build_central_extension(heisenberg_spec(p), options);
}

FiniteGroup coordinate_shift_product(std::uint32_t p, std::size_t k, const GroupOptions& options) {
  if (!is_prime(p)) throw InputError("coordinate shift: p must be prime");
  if (k == 0) throw InputError("coordinate shift: k must be positive");
  FiniteGroup n = abelian_group(std::vector<std::uint64_t>(k, p), options);
  FiniteGroup h = cyclic_group(k, options);
  // Generator sends e_c to e_{c+1}.
  std::vector<std::int64_t> mat(k * k, 0);
  for (std::size_t c = 0; c < k; ++c) mat[((c + 1) % k) * k + c] = 1;
  Element gen = k > 1 ? 1 : 0;
  return semidirect_product(n, h, linear_action(p, k, h, {gen}, {mat}), options);
}

FiniteGroup wreath_fp_cp(std::uint32_t p, const GroupOptions& options) {
  return coordinate_shift_product(p, p, options);
}

FiniteGroup heisenberg_action_product(std::uint32_t p, const GroupOptions& options) {
  if (!is_prime(p)) throw InputError("heisenberg action: p must be prime");
  FiniteGroup n = abelian_group({p, p, p}, options);
  FiniteGroup h = abelian_group({p, p, p}, options);
  const std::vector<std::int64_t> phi_x{1, 1, 0, 0, 1, 0, 0, 0, 1};
  const std::vector<std::int64_t> phi_u{1, 0, 1, 0, 1, 0, 0, 0, 1};
  const std::vector<std::int64_t> ident{1, 0, 0, 0, 1, 0, 0, 0, 1};
  const Element e1 = 1, e2 = p, e3 = p * p;
  return semidirect_product(n, h, linear_action(p, 3, h, {e1, e2, e3}, {phi_x, phi_u, ident}), options);
}

CentralExtensionSpec order_1024_spec() {
  CentralExtensionSpec s;
  s.p = 2;
  s.rank = 3;
  // alpha, beta, gamma, b^2, c^2
  s.center = {2, 2, 2, 4, 4};
  s.center_names = {"alpha", "beta", "gamma", "b2", "c2"};
  s.generator_names = {"a", "b", "c"};
  s.commutators = {
      {1, 0, {0, 0, 1, 0, 0}},  // [b,a] = gamma
      {2, 0, {0, 1, 0, 0, 0}},  // [c,a] = beta
      {2, 1, {1, 0, 0, 0, 0}},  // [c,b] = alpha
  };
  s.powers = {
      {1, 0, 0, 0, 0},  // a^2 = alpha
      {0, 0, 0, 1, 0},  // b^2
      {0, 0, 0, 0, 1},  // c^2
  };
  return s;
}

FiniteGroup order_1024_group(const GroupOptions& options) {
  return build_central_extension(order_1024_spec(), options);
}

}  // namespace admiss
