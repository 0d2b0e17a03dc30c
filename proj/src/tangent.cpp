#include "planepairs/tangent.hpp"

#include <functional>
#include <map>
#include <set>

#include "planepairs/hilbert.hpp"

namespace planepairs {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  // Lexicographic enumeration by recursion on the first variable.
  std::function<void(int, int)> rec = [&](int var, int rem) {
    if (var == nvars - 1) {
      m.e[var] = rem;
      out.push_back(m);
      m.e[var] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      m.e[var] = e;
      rec(var + 1, rem - e);
    }
    m.e[var] = 0;
  };
  if (d >= 0) rec(0, d);
  return out;
}

long rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][col] == 0) continue;
      Rational f = rows[k][col] / rows[r][col];
      for (size_t c = col; c < ncols; ++c) rows[k][c] -= f * rows[r][c];
    }
    ++r;
  }
  return (long)r;
}

long hom_degree_zero_dim(const Ideal& I, const MonomialOrder& ord) {
  int nv = I.nvars();
  std::vector<Polynomial> gens = minimal_generators(I.gens());
  if (gens.empty()) return 0;
  const std::vector<Polynomial>& gb = I.groebner(ord);

  auto is_standard = [&](const Monomial& m) {
    for (auto& g : gb)
      if (g.lead_monomial(ord).divides(m)) return false;
    return true;
  };

  // Unknowns: one per (generator, standard monomial of the same degree).
  std::vector<int> degs;
  std::vector<std::vector<Monomial>> basis; // basis[i]: images of gens[i]
  std::vector<int> offset;
  int nunk = 0;
  for (auto& g : gens) {
    int d = g.degree();
    degs.push_back(d);
    std::vector<Monomial> std_mons;
    for (auto& m : monomials_of_degree(nv, d))
      if (is_standard(m)) std_mons.push_back(m);
    offset.push_back(nunk);
    nunk += (int)std_mons.size();
    basis.push_back(std::move(std_mons));
  }

  // One block of linear conditions per first syzygy.
  std::vector<std::vector<Rational>> rows;
  for (auto& s : syzygies(gens, ord)) {
    // Rows of this block are indexed by standard monomials of the syzygy
    // degree; collect them lazily.
    std::map<Monomial, size_t, GrevlexDesc> row_of;
    std::vector<std::vector<Rational>> block;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (s.c[i].is_zero()) continue;
      for (size_t b = 0; b < basis[i].size(); ++b) {
        Polynomial contrib = normal_form(
            s.c[i] * Polynomial::monomial(basis[i][b], nv), gb, ord);
        for (auto& [m, coef] : contrib.terms()) {
          auto it = row_of.find(m);
          if (it == row_of.end()) {
            it = row_of.emplace(m, block.size()).first;
            block.emplace_back(nunk, Rational(0));
          }
          block[it->second][offset[i] + b] += coef;
        }
      }
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }

  return nunk - rational_rank(std::move(rows));
}

long expected_component_dim(int c, int d, int n) {
  return (long)(n - c) * (c + 1) + (long)(n - d) * (d + 1);
}

int gotzmann_number(const QPoly& P) {
  MacaulayDecomposition md = macaulay_decomposition(P);
  return md.m.empty() ? 0 : (int)md.m[0];
}

Ideal truncate_ideal(const Ideal& I, int m) {
  int nv = I.nvars();
  std::vector<Polynomial> gens;
  for (auto& g : minimal_generators(I.gens())) {
    int d = g.degree();
    if (d >= m) {
      gens.push_back(g);
      continue;
    }
    for (auto& u : monomials_of_degree(nv, m - d))
      gens.push_back(Polynomial::monomial(u, nv) * g);
  }
  return Ideal(nv, gens);
}

bool comparison_holds(const Ideal& I) {
  QPoly P = hilbert_polynomial(I);
  int r = minimal_free_resolution(I).betti().regularity();
  std::set<int> degs;
  for (auto& g : minimal_generators(I.gens())) degs.insert(g.degree());
  for (int e : degs) {
    // (S/I)_e = H^0(O_X(e)) is certified by e >= reg(S/I), which forces
    // h^0(O_X(e)) = P(e), plus equality of dimensions (I is saturated, so
    // (S/I)_e injects into H^0).
    if (e < r) return false;
    if (Rational(hilbert_function(I, e)) != P.eval(e)) return false;
  }
  return true;
}

long tangent_dimension(const Ideal& I) {
  if (comparison_holds(I)) return hom_degree_zero_dim(I);
  return hom_degree_zero_dim(
      truncate_ideal(I, gotzmann_number(hilbert_polynomial(I))));
}

} // namespace planepairs
