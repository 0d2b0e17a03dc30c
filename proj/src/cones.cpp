#include "planepairs/cones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace planepairs {

namespace {

struct LinSolve {
  bool consistent = false;
  bool unique = false;
  std::vector<Rational> x;
};

// Exact Gaussian elimination for A x = b.
LinSolve solve_linear(std::vector<std::vector<Rational>> A,
                      std::vector<Rational> b, size_t ncols) {
  size_t nrows = A.size();
  for (auto& row : A) row.resize(ncols, Rational(0));
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t p = r;
    while (p < nrows && A[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    for (size_t i = 0; i < nrows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (size_t j = c; j < ncols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  LinSolve out;
  for (size_t i = r; i < nrows; ++i)
    if (b[i] != 0) return out; // inconsistent
  out.consistent = true;
  out.unique = (r == ncols);
  if (out.unique) {
    out.x.assign(ncols, Rational(0));
    for (size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i] / A[i][pivot_col[i]];
  }
  return out;
}

size_t rank_of(std::vector<std::vector<Rational>> A) {
  if (A.empty()) return 0;
  size_t nrows = A.size(), ncols = A[0].size(), r = 0;
  for (size_t c = 0; c < ncols && r < nrows; ++c) {
    size_t p = r;
    while (p < nrows && A[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(A[p], A[r]);
    for (size_t i = r + 1; i < nrows; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[r][c];
      for (size_t j = c; j < ncols; ++j) A[i][j] -= f * A[r][j];
    }
    ++r;
  }
  return r;
}

size_t divisor_index(const ConeFamily& f, const std::string& name) {
  auto it =
      std::find(f.divisor_names.begin(), f.divisor_names.end(), name);
  if (it == f.divisor_names.end())
    throw std::invalid_argument("unknown divisor: " + name);
  return (size_t)(it - f.divisor_names.begin());
}

void put(ConeFamily& f, const std::string& d, const std::string& c, long v) {
  size_t di = divisor_index(f, d);
  auto it = std::find(f.curve_names.begin(), f.curve_names.end(), c);
  f.table.emplace_back(di, (size_t)(it - f.curve_names.begin()), v);
}

ConeFamily family_H1(int n) {
  if (n < 4) throw std::invalid_argument("H1 cones need n >= 4");
  ConeFamily f;
  f.name = "H1";
  f.n = n;
  f.divisor_names = {"D1", "D2", "D2'", "N1", "N2"};
  f.basis = 3;
  f.curve_names = {"B1", "B1'", "B2", "B2'", "B3", "B3'", "B4"};
  put(f, "D1", "B1", 1);  put(f, "D1", "B1'", 1); put(f, "D1", "B2", 0);
  put(f, "D1", "B2'", 0); put(f, "D1", "B4", 1);
  put(f, "D2", "B1", 1);  put(f, "D2", "B1'", 0); put(f, "D2", "B2", 1);
  put(f, "D2", "B2'", 0); put(f, "D2", "B3", 2);  put(f, "D2", "B3'", 0);
  put(f, "D2", "B4", 0);
  put(f, "D2'", "B1", 0); put(f, "D2'", "B1'", 1); put(f, "D2'", "B2", 0);
  put(f, "D2'", "B2'", 1); put(f, "D2'", "B3", 0); put(f, "D2'", "B3'", 2);
  put(f, "D2'", "B4", 0);
  put(f, "N1", "B1", 0);  put(f, "N1", "B1'", 0); put(f, "N1", "B2", 1);
  put(f, "N1", "B2'", 1); put(f, "N1", "B3", 1);  put(f, "N1", "B3'", 1);
  put(f, "N2", "B1", 1);  put(f, "N2", "B1'", 1); put(f, "N2", "B3", 0);
  put(f, "N2", "B3'", 0); put(f, "N2", "B4", 2);
  f.relations = {{-1, 1, 1}, {2, -1, -1}};
  f.canonical = {Rational(-3), Rational(-(n - 2)), Rational(-(n - 2))};
  f.nef_names = {"D1", "D2", "D2'"};
  f.effective_names = {"D2", "D2'", "N1", "N2"};
  return f;
}

ConeFamily family_2plane(int n) {
  if (n < 5) throw std::invalid_argument("2plane cones need n >= 5");
  ConeFamily f;
  f.name = "2plane";
  f.n = n;
  f.divisor_names = {"D1", "D2", "D3", "N1", "N2", "N3"};
  f.basis = 3;
  f.curve_names = {"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  put(f, "D1", "C1", 1); put(f, "D1", "C2", 0); put(f, "D1", "C3", 0);
  put(f, "D1", "C4", 0); put(f, "D1", "C5", 1);
  put(f, "D2", "C1", 0); put(f, "D2", "C2", 1); put(f, "D2", "C3", 0);
  put(f, "D2", "C4", 1); put(f, "D2", "C5", 1);
  put(f, "D3", "C1", 0); put(f, "D3", "C2", 0); put(f, "D3", "C3", 1);
  put(f, "D3", "C4", 1); put(f, "D3", "C5", 1);
  put(f, "N1", "C1", 0); put(f, "N1", "C3", 2); put(f, "N1", "C4", 0);
  put(f, "N1", "C5", 0); put(f, "N1", "C6", 0);
  put(f, "N2", "C2", 2); put(f, "N2", "C4", 1); put(f, "N2", "C5", 0);
  put(f, "N2", "C7", 0);
  put(f, "N3", "C1", 2); put(f, "N3", "C3", 0); put(f, "N3", "C5", 1);
  put(f, "N3", "C6", 0); put(f, "N3", "C7", 0);
  f.relations = {{0, -2, 2}, {-1, 2, -1}, {2, -1, 0}};
  f.canonical = {Rational(-(2 * n - 7)), Rational(n - 6), Rational(-2)};
  f.nef_names = {"D1", "D2", "D3"};
  f.effective_names = {"N1", "N2", "N3"};
  return f;
}

ConeFamily family_22(int n) {
  if (n < 6) throw std::invalid_argument("22 cones need n >= 6");
  ConeFamily f;
  f.name = "22";
  f.n = n;
  f.divisor_names = {"D1", "D2", "D3", "F", "N1", "N2", "N3"};
  f.basis = 4;
  f.curve_names = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"};
  // The C1..C7 pairings with the D_i, N_i agree with the 2plane family;
  // these curves lie in a linear-projection fiber, so F meets none of them.
  ConeFamily base = family_2plane(std::max(n, 5));
  for (auto& [d, c, v] : base.table)
    put(f, base.divisor_names[d], base.curve_names[c], v);
  for (int i = 1; i <= 7; ++i) put(f, "F", "C" + std::to_string(i), 0);
  put(f, "D1", "C8", 1); put(f, "D2", "C8", 1); put(f, "D3", "C8", 1);
  put(f, "F", "C8", 1);
  put(f, "N1", "C8", 0); put(f, "N2", "C8", 0); put(f, "N3", "C8", 0);
  put(f, "D1", "C9", 0); put(f, "D2", "C9", 0); put(f, "D3", "C9", 0);
  put(f, "F", "C9", 1);
  f.relations = {{0, -2, 2, 0}, {-1, 2, -1, 0}, {2, -1, 0, -1}};
  f.canonical = {Rational(-3), Rational(-1), Rational(-2),
                 Rational(-(n - 5))};
  f.nef_names = {"D1", "D2", "D3", "F"};
  f.effective_names = {"N1", "N2", "N3"};
  return f;
}

std::vector<Rational> scale_add(const std::vector<Rational>& a,
                                const Rational& s,
                                const std::vector<Rational>& b) {
  std::vector<Rational> out(a);
  for (size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

} // namespace

ConeFamily cone_family(const std::string& name, int n) {
  if (name == "H1") return family_H1(n);
  if (name == "2plane") return family_2plane(n);
  if (name == "22") return family_22(n);
  throw std::invalid_argument("unknown cone family: " + name);
}

std::vector<Rational> divisor_class(const ConeFamily& f,
                                    const std::string& divisor) {
  size_t i = divisor_index(f, divisor);
  if (i < f.basis) {
    std::vector<Rational> e(f.basis, Rational(0));
    e[i] = 1;
    return e;
  }
  return f.relations.at(i - f.basis);
}

std::optional<std::vector<Rational>>
express_in_basis(const ConeFamily& f, const std::string& target) {
  size_t ti = divisor_index(f, target);
  if (ti < f.basis)
    throw std::invalid_argument("target is a basis divisor: " + target);
  // Solve each curve class from every stated pairing not involving the
  // target (basis pairings directly, other non-basis divisors through
  // their stated relations).
  size_t nc = f.curve_names.size();
  std::vector<std::optional<std::vector<Rational>>> cls(nc);
  for (size_t c = 0; c < nc; ++c) {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (auto& [d, cc, v] : f.table) {
      if (cc != c || d == ti) continue;
      A.push_back(divisor_class(f, f.divisor_names[d]));
      b.push_back(Rational(v));
    }
    LinSolve s = solve_linear(A, b, f.basis);
    if (!s.consistent) return std::nullopt;
    if (s.unique) cls[c] = s.x;
  }
  // Solve the target from its own pairings against the known classes.
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (auto& [d, c, v] : f.table) {
    if (d != ti || !cls[c]) continue;
    A.push_back(*cls[c]);
    b.push_back(Rational(v));
  }
  LinSolve s = solve_linear(A, b, f.basis);
  if (!s.consistent) return std::nullopt;
  if (!s.unique)
    throw std::runtime_error("pairings do not determine " + target);
  // Re-check against the pairings with undetermined curves: their systems
  // must stay consistent once the solved target row is added.
  for (auto& [d, c, v] : f.table) {
    if (d != ti || cls[c]) continue;
    std::vector<std::vector<Rational>> A2 = {s.x};
    std::vector<Rational> b2 = {Rational(v)};
    for (auto& [d2, c2, v2] : f.table) {
      if (c2 != c || d2 == ti) continue;
      A2.push_back(divisor_class(f, f.divisor_names[d2]));
      b2.push_back(Rational(v2));
    }
    if (!solve_linear(A2, b2, f.basis).consistent) return std::nullopt;
  }
  return s.x;
}

std::vector<Rational> canonical_class(const ConeFamily& f) {
  return f.canonical;
}

bool cone_contains(const std::vector<std::vector<Rational>>& generators,
                   const std::vector<Rational>& v, bool strict) {
  if (generators.empty()) return false;
  size_t dim = v.size(), k = generators.size();
  if (rank_of(generators) != k)
    throw std::invalid_argument("cone generators are linearly dependent");
  // Solve sum lambda_i g_i = v: rows indexed by coordinates.
  std::vector<std::vector<Rational>> A(dim, std::vector<Rational>(k));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < k; ++j) A[i][j] = generators[j][i];
  LinSolve s = solve_linear(A, v, k);
  if (!s.consistent || !s.unique) return false;
  for (auto& l : s.x) {
    if (l < 0) return false;
    if (strict && l == 0) return false;
  }
  return true;
}

ConeReport verify_cones(const ConeFamily& f) {
  ConeReport r;
  int n = f.n;

  r.relations_ok = true;
  for (size_t i = f.basis; i < f.divisor_names.size(); ++i) {
    auto got = express_in_basis(f, f.divisor_names[i]);
    if (!got || *got != f.relations[i - f.basis]) r.relations_ok = false;
  }

  // The canonical class reproduces the stated blowup arithmetic.
  std::vector<Rational> expect(f.basis, Rational(0));
  if (f.name == "H1") {
    // K = pullback of K on G(1,n) x G(n-2,n) plus discrepancy 3 for the
    // codimension-4 center: K + (n+1)(D2 + D2') - 3 N1 = 0.
    expect = scale_add(expect, Rational(-(n + 1)), divisor_class(f, "D2"));
    expect = scale_add(expect, Rational(-(n + 1)), divisor_class(f, "D2'"));
    expect = scale_add(expect, Rational(3), divisor_class(f, "N1"));
  } else if (f.name == "2plane") {
    // 2a E1 + b E2 + c E3 = (3n-8) E1 + (2n-7) E2 - (n+1) E3 under the
    // branched double cover, so K = (3n-8)/2 N1 + (2n-7) N2 - (n+1) D3.
    expect = scale_add(expect, Rational(3 * n - 8) / 2,
                       divisor_class(f, "N1"));
    expect = scale_add(expect, Rational(2 * n - 7), divisor_class(f, "N2"));
    expect = scale_add(expect, Rational(-(n + 1)), divisor_class(f, "D3"));
  } else if (f.name == "22") {
    // K = (pullback of K on the codimension-(n-3) pair component) plus
    // (n-5) N3 for the contracted divisor.
    ConeFamily g = family_2plane(n);
    for (size_t i = 0; i < g.basis; ++i) expect[i] = g.canonical[i];
    expect = scale_add(expect, Rational(n - 5), divisor_class(f, "N3"));
  }
  r.canonical_ok = (f.canonical == expect);

  std::vector<std::vector<Rational>> nef;
  for (auto& d : f.nef_names) nef.push_back(divisor_class(f, d));
  r.simplicial_ok = (nef.size() == f.basis) && (rank_of(nef) == f.basis);
  if (f.name == "2plane") {
    std::vector<std::vector<Rational>> eff;
    for (auto& d : f.effective_names) eff.push_back(divisor_class(f, d));
    if (rank_of(eff) != eff.size()) r.simplicial_ok = false;
  }

  std::vector<Rational> mk(f.basis);
  for (size_t i = 0; i < f.basis; ++i) mk[i] = -f.canonical[i];
  r.fano = cone_contains(nef, mk, true);
  r.log_fano = r.fano;
  if (!r.log_fano) {
    // Search for an effective divisor Delta and epsilon with -K - eps*Delta
    // ample, trying D2 first per the stated construction.
    std::vector<std::string> aux = {"D2"};
    aux.insert(aux.end(), f.effective_names.begin(), f.effective_names.end());
    for (auto& name : aux) {
      std::vector<Rational> d = divisor_class(f, name);
      for (Rational eps = Rational(1) / 2; 1024 * eps >= 1; eps /= 2) {
        if (cone_contains(nef, scale_add(mk, -eps, d), true)) {
          r.log_fano = true;
          r.witness_divisor = name;
          r.witness_eps = eps;
          break;
        }
      }
      if (r.log_fano) break;
    }
  }
  return r;
}

} // namespace planepairs
