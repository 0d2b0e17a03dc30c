#include "planepairs/catalog.hpp"

#include <random>
#include <stdexcept>

namespace planepairs {

namespace {

Polynomial x(int i, int nv) { return Polynomial::var(i, nv); }

// (x_a, x_{a+1}, ..., x_b) plus any explicitly listed extra polynomials.
std::vector<Polynomial> var_range(int a, int b, int nv) {
  std::vector<Polynomial> out;
  for (int i = a; i <= b; ++i) out.push_back(x(i, nv));
  return out;
}

Ideal lin(std::vector<int> idx, int nv) {
  std::vector<Polynomial> g;
  for (int i : idx) g.push_back(x(i, nv));
  return Ideal(nv, g);
}

Ideal lin_range(int a, int b, int nv) {
  return Ideal(nv, var_range(a, b, nv));
}

Ideal product(const Ideal& a, const Ideal& b) { return ideal_product(a, b); }
Ideal meet(const Ideal& a, const Ideal& b) { return ideal_intersect(a, b); }

CatalogEntry entry(std::string family, std::string label, std::string desc,
                   int n, Ideal I, QPoly hp, int c, int d, bool on_comp,
                   long tdim) {
  CatalogEntry e;
  e.family = std::move(family);
  e.label = std::move(label);
  e.description = std::move(desc);
  e.n = n;
  e.ideal = std::move(I);
  e.hilbert = std::move(hp);
  e.c = c;
  e.d = d;
  e.on_component = on_comp;
  e.tangent_dim = tdim;
  return e;
}

std::vector<CatalogEntry> fixed_family(int n) {
  if (n < 3) throw std::invalid_argument("fixed: n >= 3 required");
  int nv = n + 1;
  int c = n - 2;
  QPoly P = pair_hilbert_polynomial(c, c, n);
  // The component is non-singular of dimension 4(n-1); the entries with an
  // embedded (n-3)-plane also lie on a second component of the full Hilbert
  // scheme, so no tangent dimension is asserted for them.
  long t = 4L * (n - 1);
  std::vector<CatalogEntry> out;
  out.push_back(entry("fixed", "i", "two (n-2)-planes meeting an (n-4)-plane",
                      n, product(lin({0, 1}, nv), lin({2, 3}, nv)), P, c, c,
                      true, t));
  out.push_back(entry(
      "fixed", "ii", "two (n-2)-planes with an embedded (n-3)-plane", n,
      Ideal(nv, {x(0, nv) * x(0, nv), x(0, nv) * x(1, nv),
                 x(0, nv) * x(2, nv), x(1, nv) * x(2, nv)}),
      P, c, c, true, -1));
  out.push_back(entry(
      "fixed", "iii", "a pure double structure on an (n-2)-plane", n,
      ideal_sum(product(lin({0, 1}, nv), lin({0, 1}, nv)),
                Ideal(nv, {x(0, nv) * x(3, nv) - x(1, nv) * x(2, nv)})),
      P, c, c, true, t));
  out.push_back(entry(
      "fixed", "iv",
      "a double (n-2)-plane with an embedded (n-3)-plane", n,
      ideal_sum(product(lin({0, 1}, nv), lin({0, 1}, nv)),
                Ideal(nv, {x(0, nv) * x(2, nv)})),
      P, c, c, true, -1));
  return out;
}

std::vector<CatalogEntry> two_plane_family(int n) {
  if (n < 5) throw std::invalid_argument("2plane: n >= 5 required");
  int nv = n + 1;
  int c = n - 3;
  QPoly P = pair_hilbert_polynomial(c, c, n);
  // The component is non-singular of dimension 6(n-2); it meets further
  // components of the full Hilbert scheme, so the tangent dimension is only
  // asserted at the generic and pure-double entries.
  long t = 6L * (n - 2);
  auto E = [&](std::string label, std::string desc, Ideal I,
               long tdim = -1) {
    return entry("2plane", std::move(label), std::move(desc), n, std::move(I),
                 P, c, c, true, tdim);
  };
  std::vector<CatalogEntry> out;
  out.push_back(E("i", "meeting along an (n-6)-plane",
                  meet(lin({0, 1, 2}, nv), lin({3, 4, 5}, nv)), t));
  out.push_back(E("ii", "meeting along an embedded (n-5)-plane",
                  meet(meet(lin({0, 1, 2}, nv), lin({0, 3, 4}, nv)),
                       Ideal(nv, {x(0, nv) * x(0, nv), x(1, nv), x(2, nv),
                                  x(3, nv), x(4, nv)}))));
  out.push_back(
      E("iii", "meeting along an embedded (n-4)-plane",
        meet(Ideal(nv, {x(0, nv), x(1, nv), x(2, nv) * x(3, nv)}),
             Ideal(nv, {x(0, nv) * x(0, nv), x(0, nv) * x(1, nv),
                        x(1, nv) * x(1, nv),
                        x(0, nv) * x(4, nv) - x(1, nv) * x(5, nv), x(2, nv),
                        x(3, nv)}))));
  out.push_back(
      E("iv",
        "meeting along an embedded (n-4)-plane with an embedded "
        "(n-5)-plane on it",
        meet(meet(Ideal(nv, {x(0, nv), x(1, nv), x(2, nv) * x(3, nv)}),
                  Ideal(nv, {x(0, nv), x(1, nv) * x(1, nv), x(2, nv),
                             x(3, nv)})),
             Ideal(nv, {x(0, nv) * x(0, nv), x(1, nv), x(2, nv), x(3, nv),
                        x(4, nv)}))));
  out.push_back(
      E("v", "a pure double structure on an (n-3)-plane",
        ideal_sum(product(lin({0, 1, 2}, nv), lin({0, 1, 2}, nv)),
                  Ideal(nv, {x(0, nv) * x(4, nv) - x(1, nv) * x(3, nv),
                             x(0, nv) * x(5, nv) - x(2, nv) * x(3, nv),
                             x(1, nv) * x(5, nv) - x(2, nv) * x(4, nv)})),
        t));
  out.push_back(
      E("vi", "a double (n-3)-plane with an embedded (n-5)-plane",
        meet(Ideal(nv, {x(0, nv), x(1, nv) * x(1, nv), x(1, nv) * x(2, nv),
                        x(2, nv) * x(2, nv),
                        x(1, nv) * x(4, nv) - x(2, nv) * x(3, nv)}),
             Ideal(nv, {x(0, nv) * x(0, nv), x(1, nv), x(2, nv), x(3, nv),
                        x(4, nv)}))));
  out.push_back(
      E("vii", "a double (n-3)-plane with an embedded (n-4)-plane",
        meet(Ideal(nv, {x(0, nv), x(1, nv), x(2, nv) * x(2, nv)}),
             Ideal(nv, {x(0, nv) * x(0, nv), x(0, nv) * x(1, nv),
                        x(1, nv) * x(1, nv),
                        x(0, nv) * x(5, nv) - x(1, nv) * x(4, nv), x(2, nv),
                        x(3, nv)}))));
  out.push_back(
      E("viii",
        "a double (n-3)-plane with an embedded (n-4)-plane and an "
        "embedded (n-5)-plane on it",
        meet(meet(Ideal(nv, {x(0, nv), x(1, nv), x(2, nv) * x(2, nv)}),
                  Ideal(nv, {x(0, nv), x(1, nv) * x(1, nv), x(2, nv),
                             x(3, nv)})),
             Ideal(nv, {x(0, nv) * x(0, nv), x(1, nv), x(2, nv), x(3, nv),
                        x(4, nv)}))));
  return out;
}

std::vector<CatalogEntry> h1_family(int n) {
  if (n < 4) throw std::invalid_argument("H1: n >= 4 required");
  int nv = n + 1;
  QPoly Q = pair_hilbert_polynomial(1, n - 2, n);
  auto E = [&](std::string label, std::string desc, Ideal I, bool on_h,
               long tdim) {
    return entry("H1", std::move(label), std::move(desc), n, std::move(I), Q,
                 1, n - 2, on_h, tdim);
  };
  std::vector<CatalogEntry> out;
  // 1. line disjoint from the (n-2)-plane.
  out.push_back(E("1", "disjoint line and (n-2)-plane",
                  meet(lin({0, 1}, nv), lin_range(2, n, nv)), true,
                  4L * n - 4));
  // 2. line meeting the plane, plus an isolated point.
  out.push_back(E("2", "line meeting the plane, and an isolated point",
                  meet(meet(lin({0, 1}, nv), lin_range(1, n - 1, nv)),
                       ideal_sum(lin({0}, nv), lin_range(2, n, nv))),
                  false, 5L * n - 5));
  // 3. embedded point at the intersection of line and plane.
  {
    std::vector<Polynomial> a = {x(0, nv)};
    for (int i = 2; i <= n - 1; ++i) a.push_back(x(1, nv) * x(i, nv));
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    out.push_back(E("3",
                    "line meeting the plane with an embedded point at the "
                    "intersection",
                    meet(Ideal(nv, a), Ideal(nv, b)), true, 6L * n - 6));
  }
  // 4. embedded point on the line, away from the intersection.
  {
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    out.push_back(
        E("4", "embedded point on the line away from the intersection",
          meet(meet(lin({0, n}, nv), Ideal(nv, b)), lin_range(0, n - 2, nv)),
          false, 5L * n - 5));
  }
  // 5. embedded point on the plane, away from the intersection.
  {
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    std::vector<Polynomial> p = {x(0, nv)};
    for (int i = 3; i <= n; ++i) p.push_back(x(i, nv));
    out.push_back(
        E("5", "embedded point on the plane away from the intersection",
          meet(meet(lin({0, 1}, nv), Ideal(nv, b)), Ideal(nv, p)), false,
          5L * n - 5));
  }
  // 6. embedded line and an isolated point.
  {
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 2; ++i) b.push_back(x(i, nv));
    std::vector<Polynomial> p = {x(0, nv)};
    for (int i = 2; i <= n; ++i) p.push_back(x(i, nv));
    out.push_back(E("6", "embedded line and an isolated point",
                    meet(meet(lin({0, 1}, nv), Ideal(nv, b)), Ideal(nv, p)),
                    false, 5L * n - 5));
  }
  // 7. embedded line with an embedded point on the plane, off the line.
  {
    std::vector<Polynomial> a = {x(0, nv), x(1, nv) * x(1, nv)};
    for (int i = 2; i <= n - 2; ++i) a.push_back(x(1, nv) * x(i, nv));
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv), x(1, nv)};
    for (int i = 3; i <= n; ++i) b.push_back(x(i, nv));
    out.push_back(E("7", "embedded line with an embedded point off the line",
                    meet(Ideal(nv, a), Ideal(nv, b)), false, 5L * n - 5));
  }
  // 8. embedded line with an embedded point on it.
  {
    std::vector<Polynomial> a = {x(0, nv), x(1, nv) * x(1, nv)};
    for (int i = 2; i <= n - 2; ++i) a.push_back(x(1, nv) * x(i, nv));
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    out.push_back(E("8", "embedded line with an embedded point on it",
                    meet(Ideal(nv, a), Ideal(nv, b)), true, 6L * n - 6));
  }
  // 9. pure embedded line.
  out.push_back(
      E("9", "a pure embedded line",
        meet(lin({0, 1}, nv),
             ideal_sum(Ideal(nv, {x(0, nv) * x(0, nv), x(0, nv) * x(1, nv),
                                  x(1, nv) * x(1, nv),
                                  x(0, nv) * x(n, nv) -
                                      x(1, nv) * x(n - 1, nv)}),
                       lin_range(2, n - 2, nv))),
        true, 4L * n - 4));
  return out;
}

std::vector<CatalogEntry> two_points_family(int n) {
  if (n < 3) throw std::invalid_argument("2points: n >= 3 required");
  int nv = n + 1;
  // P_n(t) + 2 where P_n is the polynomial of an (n-2)-plane.
  QPoly P = QPoly::binom(n - 2, n - 2) + QPoly::constant(2);
  auto E = [&](std::string label, std::string desc, Ideal I, long tdim) {
    return entry("2points", std::move(label), std::move(desc), n,
                 std::move(I), P, -1, -1, false, tdim);
  };
  std::vector<CatalogEntry> out;
  long smooth = 4L * n - 2; // dim of the irreducible Hilbert scheme H_n
  // i. plane and two isolated points.
  out.push_back(E("i", "an (n-2)-plane and two isolated points",
                  meet(meet(lin({0, 1}, nv), lin_range(1, n, nv)),
                       ideal_sum(lin({0}, nv), lin_range(2, n, nv))),
                  smooth));
  // ii. plane with an embedded point, and an isolated point.
  {
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    out.push_back(E("ii",
                    "an (n-2)-plane with an embedded point, and an isolated "
                    "point",
                    meet(meet(lin({0, 1}, nv), Ideal(nv, b)),
                         lin_range(1, n, nv)),
                    smooth));
  }
  // iii-a. two distinct embedded points, not contained in a hyperplane.
  {
    std::vector<Polynomial> b = {x(0, nv) * x(0, nv)};
    for (int i = 1; i <= n - 1; ++i) b.push_back(x(i, nv));
    std::vector<Polynomial> c = {x(0, nv), x(1, nv) * x(1, nv)};
    for (int i = 3; i <= n; ++i) c.push_back(x(i, nv));
    out.push_back(E("iii-a",
                    "two distinct embedded points, spanning all of P^n",
                    meet(meet(lin({0, 1}, nv), Ideal(nv, b)), Ideal(nv, c)),
                    smooth));
  }
  // iii-b. two distinct embedded points, contained in a hyperplane.
  {
    std::vector<Polynomial> b = {x(0, nv), x(1, nv) * x(1, nv)};
    for (int i = 2; i <= n - 1; ++i) b.push_back(x(i, nv));
    std::vector<Polynomial> c = {x(0, nv), x(1, nv) * x(1, nv)};
    for (int i = 3; i <= n; ++i) c.push_back(x(i, nv));
    out.push_back(E("iii-b",
                    "two distinct embedded points inside a hyperplane",
                    meet(meet(lin({0, 1}, nv), Ideal(nv, b)), Ideal(nv, c)),
                    smooth));
  }
  // iv. a multiplicity-2 embedded point (lexicographic type).
  {
    std::vector<Polynomial> g = {x(0, nv)};
    for (int i = 1; i <= n - 2; ++i) g.push_back(x(1, nv) * x(i, nv));
    g.push_back(x(1, nv) * x(n - 1, nv) * x(n - 1, nv));
    out.push_back(E("iv", "a multiplicity-2 embedded point, type b",
                    Ideal(nv, g), smooth));
  }
  // v. a multiplicity-2 embedded point (the singular borel point J_n).
  out.push_back(E("v", "a multiplicity-2 embedded point, type a",
                  product(lin({0, 1}, nv), lin_range(0, n - 1, nv)),
                  6L * n - 4));
  return out;
}

std::vector<CatalogEntry> two_borel_family(int n) {
  if (n < 4) throw std::invalid_argument("2borel: n >= 4 required");
  QPoly Q = pair_hilbert_polynomial(1, n - 2, n);
  std::vector<CatalogEntry> out;
  out.push_back(entry("2borel", "J1", "the borel point of H(1,n-2,n)", n,
                      I_cdn(1, n - 2, n), Q, 1, n - 2, true, 6L * n - 6));
  out.push_back(entry("2borel", "J2", "the lexicographic point", n,
                      lex_point(Q, n), Q, 1, n - 2, false, -1));
  return out;
}

std::vector<CatalogEntry> hypersurface_family(int n) {
  if (n < 3) throw std::invalid_argument("hypersurface: n >= 3 required");
  int nv = n + 1;
  const int d = 2, k = 3;
  QPoly P = QPoly::binom(n, n) - QPoly::binom(n - d, n) + QPoly::constant(k);
  auto times_x0d = [&](std::vector<Polynomial> g) {
    Polynomial p = Polynomial::constant(1, nv);
    for (int i = 0; i < d; ++i) p = p * x(0, nv);
    for (auto& q : g) q = q * p;
    return Ideal(nv, g);
  };
  std::vector<CatalogEntry> out;
  {
    std::vector<Polynomial> g = var_range(0, n - 2, nv);
    g.push_back(x(n - 1, nv) * x(n - 1, nv) * x(n - 1, nv));
    out.push_back(entry("hypersurface", "a",
                        "quadric with three collinear embedded points", n,
                        times_x0d(g), P, -1, -1, false, -1));
  }
  {
    std::vector<Polynomial> g = var_range(0, n - 3, nv);
    g.push_back(x(n - 2, nv) * x(n - 2, nv));
    g.push_back(x(n - 2, nv) * x(n - 1, nv));
    g.push_back(x(n - 1, nv) * x(n - 1, nv));
    out.push_back(entry("hypersurface", "b",
                        "quadric with a planar triple embedded point", n,
                        times_x0d(g), P, -1, -1, false, -1));
  }
  return out;
}

} // namespace

std::vector<CatalogEntry> catalog_ideals(const std::string& family, int n) {
  if (family == "fixed") return fixed_family(n);
  if (family == "2plane") return two_plane_family(n);
  if (family == "H1") return h1_family(n);
  if (family == "2points") return two_points_family(n);
  if (family == "2borel") return two_borel_family(n);
  if (family == "hypersurface") return hypersurface_family(n);
  throw std::invalid_argument("unknown catalog family: " + family);
}

PointReport verify_point(const CatalogEntry& e, unsigned long seed) {
  PointReport r;
  r.saturated = is_saturated(e.ideal);
  r.hilbert_ok = hilbert_polynomial(e.ideal) == e.hilbert;
  if (e.c >= 0) {
    r.gin_checked = true;
    Ideal g = gin(e.ideal, seed);
    if (e.on_component) {
      r.gin_ok = ideal_equal(g, I_cdn(e.c, e.d, e.n));
    } else {
      // Off-component entries of a two-borel-point Hilbert scheme must
      // degenerate to one of the two borel points.
      r.gin_ok = ideal_equal(g, I_cdn(e.c, e.d, e.n)) ||
                 ideal_equal(g, lex_point(e.hilbert, e.n));
    }
  }
  BettiTable b = minimal_free_resolution(e.ideal).betti();
  r.regularity = b.regularity();
  r.betti_linear = true;
  for (auto& [ij, v] : b.entries) {
    if (v == 0) continue;
    if (ij.first >= 1 && ij.second != ij.first + 1) r.betti_linear = false;
  }
  r.tangent_dim = tangent_dimension(e.ideal);
  r.tangent_ok = (e.tangent_dim < 0) || (r.tangent_dim == e.tangent_dim);
  return r;
}

MonomialOrder pair_family_order(int k, int n) {
  std::vector<int> perm;
  for (int i = 0; i < k; ++i) perm.push_back(i);
  for (int i = n; i >= k; --i) perm.push_back(i);
  return MonomialOrder::permuted_lex(perm);
}

Ideal pair_family_ideal(const PairFamilySpec& spec) {
  int k = spec.k, n = spec.n;
  if (n < 2 * k - 1) throw std::invalid_argument("pair family: n >= 2k-1");
  if ((int)spec.lambda.size() != k)
    throw std::invalid_argument("pair family: need k lambda values");
  int nv = n + 1;
  // lambda is 1-indexed in the formulas.
  auto lam = [&](int i) { return spec.lambda[i - 1]; };
  auto Lgamma = [&](int p) {
    Rational prod = 1;
    int hi = (p == 0) ? k : k - p;
    for (int i = 1; i <= hi; ++i) prod *= lam(i);
    return prod;
  };
  auto Ldelta = [&](int p, int q) {
    Rational prod = 1;
    int hi = (p == 0) ? k : k - p;
    for (int i = k - q + 1; i <= hi; ++i) prod *= lam(i);
    return prod;
  };
  std::vector<Polynomial> gens;
  for (int p = 0; p < k; ++p) {
    Polynomial head = x(p, nv) + Polynomial::monomial(
                                     Monomial::var(n - k + 1 + p, nv), nv,
                                     Lgamma(p));
    for (int q = 0; q < k; ++q) gens.push_back(head * x(q, nv));
  }
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q)
      gens.push_back(x(p, nv) * x(n - k + 1 + q, nv) -
                     Polynomial::monomial(Monomial(nv), nv, Ldelta(p, q)) *
                         x(q, nv) * x(n - k + 1 + p, nv));
  return Ideal(nv, gens);
}

std::vector<Monomial> pair_family_initial_terms(int k, int n) {
  int nv = n + 1;
  std::vector<Monomial> out;
  for (int p = 0; p < k; ++p)
    for (int q = p; q < k; ++q) {
      Monomial m(nv);
      ++m.e[p];
      ++m.e[q];
      out.push_back(m);
    }
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      Monomial m(nv);
      ++m.e[p];
      ++m.e[n - k + 1 + q];
      out.push_back(m);
    }
  return minimalize_monomials(std::move(out));
}

std::vector<bool> orbit_signature(const PairFamilySpec& spec) {
  std::vector<bool> sig;
  for (auto& l : spec.lambda) sig.push_back(l == 0);
  return sig;
}

std::set<std::vector<bool>> orbit_signatures(int k, int n, int sample_count,
                                             unsigned long seed) {
  MonomialOrder ord = pair_family_order(k, n);
  Ideal C = monomial_ideal(n + 1, pair_family_initial_terms(k, n));
  QPoly P = pair_hilbert_polynomial(n - k, n - k, n);
  std::set<std::vector<bool>> seen;
  auto check = [&](const PairFamilySpec& spec) {
    Ideal I = pair_family_ideal(spec);
    if (!ideal_equal(monomial_ideal(n + 1, initial_ideal(I, ord)), C))
      throw std::logic_error("pair family: initial ideal mismatch");
    if (hilbert_polynomial(I) != P)
      throw std::logic_error("pair family: Hilbert polynomial mismatch");
    seen.insert(orbit_signature(spec));
  };
  std::mt19937_64 rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    PairFamilySpec spec;
    spec.k = k;
    spec.n = n;
    for (int i = 0; i < k; ++i) {
      long v = (long)(rng() % 21) - 10; // may be zero: samples mix orbits
      spec.lambda.push_back(Rational(v));
    }
    check(spec);
  }
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    PairFamilySpec spec;
    spec.k = k;
    spec.n = n;
    for (int i = 0; i < k; ++i)
      spec.lambda.push_back((mask >> i) & 1 ? Rational(0) : Rational(1));
    check(spec);
  }
  return seen;
}

} // namespace planepairs
