#include "planepairs/deformation.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "planepairs/poly_io.hpp"

namespace planepairs {

namespace {

// Re-index a polynomial into a ring with to_nv variables, sending variable
// i to i + shift.
Polynomial embed(const Polynomial& f, int to_nv, int shift) {
  Polynomial out(to_nv);
  for (auto& [m, c] : f.terms()) {
    Monomial mm(to_nv);
    for (int i = 0; i < (int)m.e.size(); ++i) mm.e[i + shift] = m.e[i];
    out += Polynomial::monomial(mm, to_nv, Rational(c));
  }
  return out;
}

// Set every u variable (index > n) to zero.
Polynomial at_origin(const Polynomial& f, int n, int nv) {
  Polynomial out(nv);
  for (auto& [m, c] : f.terms()) {
    bool pure = true;
    for (int i = n + 1; i < nv; ++i)
      if (m.e[i] > 0) pure = false;
    if (pure) out += Polynomial::monomial(m, nv, Rational(c));
  }
  return out;
}

std::vector<Polynomial> parse_row(const std::string& s, const VarNames& v) {
  return parse_polynomial_list(s, v);
}

VersalFamily family_i124() {
  VersalFamily f;
  f.name = "i124";
  f.n = 4;
  f.nu = 8;
  VarNames X = VarNames::x(4);
  VarNames XU = VarNames::xu(4, 8);
  VarNames U = VarNames::u(8);
  f.phi0 = parse_row("x0^2, x0*x1, x1^2, x0*x2, x1*x2, x0*x3", X);
  f.base = Ideal(5, f.phi0);
  const char* rows[6] = {
      "-x1, 0, -x2, 0, 0, 0, -x3, 0, 0",
      "x0, -x1, 0, -x2, 0, 0, 0, -x3, 0",
      "0, x0, 0, 0, 0, -x2, 0, 0, 0",
      "0, 0, x0, x1, -x1, 0, 0, 0, -x3",
      "0, 0, 0, 0, x0, x1, 0, 0, 0",
      "0, 0, 0, 0, 0, 0, x0, x1, x2"};
  for (auto* r : rows) f.phi1.push_back(parse_row(r, X));
  const char* tv[10] = {
      "0, 0, 0, 0, 0, x1*x3",
      "0, 0, 0, x2^2, 0, x2*x3",
      "0, x1*x3, 0, x2*x3, 0, x3^2",
      "2*x0*x4, x1*x4, 0, x2*x4, 0, x3*x4",
      "0, 0, 0, 0, x2^2, 0",
      "0, 0, 2*x1*x3, 0, x2*x3, 0",
      "0, x0*x4, 2*x1*x4, 0, x2*x4, 0",
      "0, 0, 0, 0, x1*x3, 0",
      "0, 0, 0, x0*x4, x1*x4, 0",
      "0, 0, 0, 0, 0, x0*x4"};
  for (auto* r : tv) f.tvec.push_back(parse_row(r, X));
  const char* uv[8] = {
      "x0*x4, 0, 0, 0, 0, 0", "0, x0*x4, 0, 0, 0, 0",
      "0, 0, x0*x4, 0, 0, 0", "0, 0, 0, x0*x4, 0, 0",
      "0, 0, 0, 0, x0*x4, 0", "0, 0, 0, 0, x2*x3, 0",
      "0, 0, 0, 0, x2*x4, 0", "0, 0, 0, 0, 0, x1*x4"};
  for (auto* r : uv) f.uvec.push_back(parse_row(r, X));
  f.phi0_inf = parse_row(
      "x0^2 + u1*x0*x4 - u6^2*u8^2*x4^2, "
      "x0*x1 + u2*x0*x4 + 2*u6*u7*u8*x4^2 + u6^2*u8*x3*x4, "
      "x1^2 + u3*x0*x4 - u6^2*x3^2 - 2*u6*u7*x3*x4 - u7^2*x4^2 "
      "- u3*u6*u8*x4^2, "
      "x0*x2 + u4*x0*x4 - u6*u8*x2*x4, "
      "x1*x2 + u5*x0*x4 + u6*x2*x3 + u7*x2*x4 - u5*u6*u8*x4^2, "
      "x0*x3 + u8*x1*x4 + u7*u8*x4^2",
      XU);
  const char* rows_inf[6] = {
      "-x1 - u2*x4, -u3*x4, -x2 - u4*x4, 0, -u5*x4, 0, -x3, 0, 0",
      "x0 + u1*x4, -x1 + u2*x4, 0, -x2 - u4*x4, u4*x4, -u5*x4, -u8*x4, "
      "-x3, 0",
      "0, x0, 0, 0, 0, -x2, 0, -u8*x4, 0",
      "0, 0, x0 + u1*x4 + u6*u8*x4, x1 + u2*x4, -x1 - u7*x4, u3*x4, 0, 0, "
      "-x3",
      "0, 0, 0, u6*u8*x4, x0, x1 - u6*x3 - u7*x4, 0, 0, -u8*x4",
      "-u6^2*u8*x4, u6^2*x3 + 2*u6*u7*x4, 0, 0, -u6*x2, u5*u6*x4, "
      "x0 + u1*x4, x1 + u2*x4, x2 + u4*x4"};
  for (auto* r : rows_inf) f.phi1_inf.push_back(parse_row(r, XU));
  f.obstruction = parse_row(
      "u7*u8, u5*u8, u4*u8, u3*u8, u2*u8, u1*u8, "
      "u3*u4 - u5*u2 - u5*u7, u4*u2 - u4*u7 - u1*u5, "
      "u2^2 - u7^2 - u1*u3",
      U);
  // The versal base is the union of a five-dimensional determinantal cone
  // and a two-dimensional plane, meeting along a line.
  std::vector<std::vector<Polynomial>> m2 = {
      parse_row("u5, u2 - u7, u3", U), parse_row("u4, u1, u2 + u7", U)};
  f.components.push_back(
      ideal_sum(Ideal(8, parse_row("u8", U)), minor_ideal(m2, 2, 8)));
  f.components.push_back(Ideal(8, parse_row("u1, u2, u3, u4, u5, u7", U)));
  f.component_dims = {5, 2};
  f.component_meet = Ideal(8, parse_row("u1, u2, u3, u4, u5, u7, u8", U));
  return f;
}

VersalFamily family_j3() {
  VersalFamily f;
  f.name = "j3";
  f.n = 3;
  f.nu = 9;
  VarNames X = VarNames::x(3);
  VarNames XU = VarNames::xu(3, 9);
  VarNames U = VarNames::u(9);
  f.phi0 = parse_row("x0^2, x0*x1, x1^2, x0*x2, x1*x2", X);
  f.base = Ideal(4, f.phi0);
  const char* rows[5] = {
      "-x1, 0, -x2, 0, 0, 0",
      "x0, -x1, 0, -x2, 0, 0",
      "0, x0, 0, 0, 0, -x2",
      "0, 0, x0, x1, -x1, 0",
      "0, 0, 0, 0, x0, x1"};
  for (auto* r : rows) f.phi1.push_back(parse_row(r, X));
  const char* tv[5] = {
      "0, 0, 0, x2^2, 0",
      "2*x0*x3, x1*x3, 0, x2*x3, 0",
      "0, 0, 0, 0, x2^2",
      "0, x0*x3, 2*x1*x3, 0, x2*x3",
      "0, 0, 0, x0*x3, x1*x3"};
  for (auto* r : tv) f.tvec.push_back(parse_row(r, X));
  const char* uv[9] = {
      "x0*x3, 0, 0, 0, 0", "x1*x3, 0, 0, 0, 0", "0, x0*x3, 0, 0, 0",
      "0, x1*x3, 0, 0, 0", "0, 0, x0*x3, 0, 0", "0, 0, x1*x3, 0, 0",
      "0, 0, 0, x0*x3, 0", "0, 0, 0, x1*x3, 0", "0, 0, 0, 0, x0*x3"};
  for (auto* r : uv) f.uvec.push_back(parse_row(r, X));
  f.phi0_inf = parse_row(
      "x0^2 + u1*x0*x3 + u2*x1*x3, "
      "x0*x1 + u3*x0*x3 + u4*x1*x3, "
      "x1^2 + u5*x0*x3 + u6*x1*x3, "
      "x0*x2 + u7*x0*x3 + u8*x1*x3 + u4*u7*x3^2 + u6*u8*x3^2 - u2*u9*x3^2, "
      "x1*x2 + u9*x0*x3 - u5*u8*x3^2 + u4*u9*x3^2",
      XU);
  const char* rows_inf[5] = {
      "-x1 - u3*x3, -u5*x3, -x2 - u7*x3, 0, -u9*x3, 0",
      "x0 + u1*x3 - u4*x3, -x1 + u3*x3 - u6*x3, -u8*x3, -x2 - u7*x3, "
      "u7*x3, -u9*x3",
      "u2*x3, x0 + u4*x3, 0, -u8*x3, u8*x3, -x2",
      "0, 0, x0 + u1*x3, x1 + u3*x3, -x1, u5*x3",
      "0, 0, u2*x3, u4*x3, x0, x1 + u6*x3"};
  for (auto* r : rows_inf) f.phi1_inf.push_back(parse_row(r, XU));
  f.obstruction = parse_row(
      "u5*u8 - u4*u9, u3*u8 - u2*u9, u5*u7 - u3*u9 + u6*u9, "
      "u4*u7 + u6*u8 - u3*u8, u3*u7 - u1*u9 + u4*u9, "
      "u2*u7 - u1*u8 + u4*u8, u3*u4 - u2*u5, "
      "u3^2 - u1*u5 + u4*u5 - u3*u6, u2*u3 - u1*u4 + u4^2 - u2*u6",
      U);
  // The versal base is the irreducible cone over 3x3 matrices of rank one.
  std::vector<std::vector<Polynomial>> m3 = {
      parse_row("u5, u4, u3 - u6", U), parse_row("u9, u8, u7", U),
      parse_row("u3, u2, u1 - u4", U)};
  f.components.push_back(minor_ideal(m3, 2, 9));
  f.component_dims = {5};
  return f;
}

} // namespace

Ideal minor_ideal(const std::vector<std::vector<Polynomial>>& mat, int k,
                  int nvars) {
  int nr = (int)mat.size(), nc = (int)mat[0].size();
  std::vector<Polynomial> gens;
  std::vector<int> ri(k), ci(k);
  // Enumerate row and column index subsets of size k.
  std::function<void(int, int)> pick_cols = [&](int from, int depth) {
    if (depth == k) {
      // Laplace expansion along the first selected row.
      std::function<Polynomial(std::vector<int>, std::vector<int>)> det =
          [&](std::vector<int> rs, std::vector<int> cs) -> Polynomial {
        if (rs.size() == 1) return mat[rs[0]][cs[0]];
        Polynomial d(nvars);
        std::vector<int> rrest(rs.begin() + 1, rs.end());
        for (size_t j = 0; j < cs.size(); ++j) {
          std::vector<int> crest;
          for (size_t l = 0; l < cs.size(); ++l)
            if (l != j) crest.push_back(cs[l]);
          Polynomial term = mat[rs[0]][cs[j]] * det(rrest, crest);
          if (j % 2) d -= term;
          else d += term;
        }
        return d;
      };
      Polynomial m = det(ri, ci);
      if (!m.is_zero()) gens.push_back(m);
      return;
    }
    for (int c = from; c < nc; ++c) {
      ci[depth] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  std::function<void(int, int)> pick_rows = [&](int from, int depth) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (int r = from; r < nr; ++r) {
      ri[depth] = r;
      pick_rows(r + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return Ideal(nvars, gens);
}

VersalFamily versal_family(const std::string& name) {
  if (name == "i124") return family_i124();
  if (name == "j3") return family_j3();
  throw std::invalid_argument("unknown versal family: " + name);
}

VersalReport verify_versal(const VersalFamily& f) {
  VersalReport r;
  int nx = f.n + 1;
  int nv = f.nvars();
  MonomialOrder ord = MonomialOrder::grevlex();
  const std::vector<Polynomial>& gb = f.base.groebner(ord);

  // The presentation: phi0 generates the base ideal, phi1 consists of
  // syzygies, and there are as many columns as first syzygies of S/I.
  r.presentation_ok = ideal_equal(Ideal(nx, f.phi0), f.base);
  size_t ncols = f.phi1[0].size();
  for (size_t k = 0; k < ncols && r.presentation_ok; ++k) {
    Polynomial s(nx);
    for (size_t i = 0; i < f.phi0.size(); ++i) s += f.phi0[i] * f.phi1[i][k];
    if (!s.is_zero()) r.presentation_ok = false;
  }
  BettiTable b = minimal_free_resolution(f.base).betti();
  if ((long)ncols != b.at(2, 3)) r.presentation_ok = false;

  // The lifted matrices restrict to phi0, phi1 at u = 0.
  r.lifts_ok = true;
  for (size_t i = 0; i < f.phi0.size(); ++i)
    if (at_origin(f.phi0_inf[i], f.n, nv) != embed(f.phi0[i], nv, 0))
      r.lifts_ok = false;
  for (size_t i = 0; i < f.phi1.size(); ++i)
    for (size_t k = 0; k < ncols; ++k)
      if (at_origin(f.phi1_inf[i][k], f.n, nv) != embed(f.phi1[i][k], nv, 0))
        r.lifts_ok = false;

  // Every listed vector is a degree-zero homomorphism I -> S/I, and
  // together they are a basis.
  std::vector<std::vector<Polynomial>> vecs = f.tvec;
  vecs.insert(vecs.end(), f.uvec.begin(), f.uvec.end());
  r.tangent_count = (long)vecs.size();
  r.tangents_valid = true;
  auto syz = syzygies(f.phi0, ord);
  for (auto& v : vecs) {
    for (auto& s : syz) {
      Polynomial acc(nx);
      for (size_t i = 0; i < v.size(); ++i) acc += s.c[i] * v[i];
      if (!normal_form(acc, gb, ord).is_zero()) r.tangents_valid = false;
    }
  }
  std::vector<std::map<Monomial, size_t, GrevlexDesc>> col_of(f.phi0.size());
  size_t ncoords = 0;
  std::vector<std::vector<Rational>> rows;
  for (auto& v : vecs) {
    std::vector<Rational> row;
    for (size_t i = 0; i < v.size(); ++i) {
      Polynomial nf = normal_form(v[i], gb, ord);
      for (auto& [m, c] : nf.terms()) {
        auto it = col_of[i].find(m);
        if (it == col_of[i].end()) it = col_of[i].emplace(m, ncoords++).first;
        if (row.size() <= it->second) row.resize(it->second + 1);
        row[it->second] += c;
      }
    }
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) row.resize(ncoords, Rational(0));
  r.tangents_span = rational_rank(rows) == r.tangent_count &&
                    r.tangent_count == hom_degree_zero_dim(f.base);

  // Flatness over the versal base: the entries of phi0_inf * phi1_inf lie
  // in I*S[u] + J*S[u].
  std::vector<Polynomial> big;
  for (auto& g : f.base.gens()) big.push_back(embed(g, nv, 0));
  for (auto& g : f.obstruction) big.push_back(embed(g, nv, nx));
  Ideal IJ(nv, big);
  const std::vector<Polynomial>& gbig = IJ.groebner(ord);
  r.flat = true;
  for (size_t k = 0; k < ncols; ++k) {
    Polynomial s(nv);
    for (size_t i = 0; i < f.phi0_inf.size(); ++i)
      s += f.phi0_inf[i] * f.phi1_inf[i][k];
    if (!normal_form(s, gbig, ord).is_zero()) r.flat = false;
  }

  // The obstruction ideal matches its stated decomposition.
  Ideal meet = f.components[0];
  for (size_t i = 1; i < f.components.size(); ++i)
    meet = ideal_intersect(meet, f.components[i]);
  r.obstruction_ok = ideal_equal(Ideal(f.nu, f.obstruction), meet);
  for (size_t i = 0; i < f.components.size(); ++i)
    if (krull_dim(f.components[i]) != f.component_dims[i])
      r.obstruction_ok = false;
  if (f.components.size() > 1) {
    Ideal sum = f.components[0];
    for (size_t i = 1; i < f.components.size(); ++i)
      sum = ideal_sum(sum, f.components[i]);
    if (!ideal_equal(sum, f.component_meet)) r.obstruction_ok = false;
  }
  return r;
}

} // namespace planepairs
