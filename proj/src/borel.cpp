#include "planepairs/borel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace planepairs {

namespace {

bool monomial_in(const std::vector<Monomial>& gens, const Monomial& m) {
  for (auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

std::string key_of(const std::vector<Monomial>& gens) {
  std::ostringstream os;
  for (auto& g : gens) {
    for (int e : g.e) os << e << ",";
    os << ";";
  }
  return os.str();
}

} // namespace

bool is_borel_fixed(const std::vector<Monomial>& min_gens) {
  for (auto& m : min_gens) {
    for (int j = 0; j < m.nvars(); ++j) {
      if (m.e[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = m;
        --moved.e[j];
        ++moved.e[i];
        if (!monomial_in(min_gens, moved)) return false;
      }
    }
  }
  return true;
}

bool is_borel_fixed(const Ideal& I) {
  std::vector<Monomial> gens;
  for (auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (g.num_terms() != 1)
      throw std::invalid_argument("is_borel_fixed: not a monomial ideal");
    gens.push_back(g.terms().begin()->first);
  }
  return is_borel_fixed(minimalize_monomials(std::move(gens)));
}

bool borel_is_saturated(const std::vector<Monomial>& min_gens) {
  if (min_gens.empty()) return true;
  int last = min_gens[0].nvars() - 1;
  for (auto& m : min_gens)
    if (m.e[last] > 0) return false;
  return true;
}

Ideal I_cdn(int c, int d, int n) {
  if (!(0 <= c && c <= d && d <= n - 1) || (d == n - 1 && c == n - 1))
    throw std::invalid_argument("I_cdn: invalid (c,d,n)");
  int nv = n + 1;
  std::vector<Monomial> gens;
  for (int i = 0; i <= n - c - d - 2; ++i) gens.push_back(Monomial::var(i, nv));
  int a = std::max(n - c - d - 1, 0);
  int b = n - d - 1;
  for (int i = a; i <= b; ++i)
    for (int j = i; j <= b; ++j) {
      Monomial m(nv);
      ++m.e[i];
      ++m.e[j];
      gens.push_back(m);
    }
  for (int i = a; i <= b; ++i)
    for (int j = n - d; j <= 2 * n - c - d - 2 - i && j <= n; ++j) {
      Monomial m(nv);
      ++m.e[i];
      ++m.e[j];
      gens.push_back(m);
    }
  return monomial_ideal(nv, minimalize_monomials(std::move(gens)));
}

namespace {

std::vector<Polynomial> draw_coordinate_change(int nv, std::mt19937_64& rng) {
  const long range = 100;
  for (;;) {
    std::vector<std::vector<Rational>> A(nv, std::vector<Rational>(nv));
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        long v = (long)(rng() % (2 * range + 1)) - range;
        A[i][j] = Rational(v);
      }
    // Exact determinant via Gaussian elimination.
    auto B = A;
    Rational det = 1;
    bool singular = false;
    for (int col = 0; col < nv && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < nv; ++r)
        if (B[r][col] != 0) { piv = r; break; }
      if (piv < 0) { singular = true; break; }
      if (piv != col) { std::swap(B[piv], B[col]); det = -det; }
      det *= B[col][col];
      for (int r = col + 1; r < nv; ++r) {
        Rational f = B[r][col] / B[col][col];
        for (int cc = col; cc < nv; ++cc) B[r][cc] -= f * B[col][cc];
      }
    }
    if (singular || det == 0) continue;
    std::vector<Polynomial> images;
    for (int i = 0; i < nv; ++i) {
      Polynomial p(nv);
      for (int j = 0; j < nv; ++j) p.add_term(Monomial::var(j, nv), A[i][j]);
      images.push_back(p);
    }
    return images;
  }
}

std::vector<Monomial> gin_once(const Ideal& I, std::mt19937_64& rng) {
  auto images = draw_coordinate_change(I.nvars(), rng);
  std::vector<Polynomial> moved;
  for (auto& g : I.gens()) moved.push_back(g.compose(images));
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Monomial> leads;
  for (auto& g : buchberger_reduced(moved, ord))
    leads.push_back(g.lead_monomial(ord));
  return minimalize_monomials(std::move(leads));
}

} // namespace

Ideal gin(const Ideal& I, unsigned long seed, int retries) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Monomial>> draws;
  draws.push_back(gin_once(I, rng));
  for (int attempt = 0; attempt < 1 + retries; ++attempt) {
    draws.push_back(gin_once(I, rng));
    for (size_t i = 0; i + 1 < draws.size(); ++i)
      if (draws[i] == draws.back())
        return monomial_ideal(I.nvars(), draws.back());
  }
  throw BorelError("gin: draws never agreed within the retry budget");
}

std::vector<std::vector<Monomial>> borel_expansions(
    const std::vector<Monomial>& min_gens, int nvars) {
  std::vector<std::vector<Monomial>> out;
  for (size_t k = 0; k < min_gens.size(); ++k) {
    const Monomial& m = min_gens[k];
    int mx = m.max_var();
    if (mx < 0 || mx > nvars - 2) continue;
    std::vector<Monomial> next;
    for (size_t t = 0; t < min_gens.size(); ++t)
      if (t != k) next.push_back(min_gens[t]);
    for (int j = mx; j <= nvars - 2; ++j) {
      Monomial mm = m;
      ++mm.e[j];
      next.push_back(mm);
    }
    next = minimalize_monomials(std::move(next));
    if (is_borel_fixed(next)) out.push_back(std::move(next));
  }
  return out;
}

namespace {

/// All saturated borel ideals in k[x_0..x_{nv-1}] reaching the constant
/// target polynomial `target` from the given start states by expansions.
std::vector<std::vector<Monomial>> stage_expand(
    std::vector<std::vector<Monomial>> states, const QPoly& target, int nv) {
  std::set<std::string> seen, done;
  std::vector<std::vector<Monomial>> results;
  std::vector<std::vector<Monomial>> queue = std::move(states);
  for (auto& s : queue) seen.insert(key_of(s));
  while (!queue.empty()) {
    std::vector<Monomial> cur = std::move(queue.back());
    queue.pop_back();
    QPoly deficit = target - hilbert_polynomial(cur, nv);
    if (!deficit.is_constant())
      throw BorelError("enumerate_borel: nonconstant deficit encountered "
                       "(outside the supported regime)");
    Rational c = deficit.coeff(0);
    if (c < 0 || c.get_den() != 1)
      throw BorelError("enumerate_borel: negative or fractional deficit");
    if (c == 0) {
      std::string k = key_of(cur);
      if (done.insert(k).second) results.push_back(cur);
      continue;
    }
    for (auto& child : borel_expansions(cur, nv)) {
      std::string k = key_of(child);
      if (seen.insert(k).second) queue.push_back(std::move(child));
    }
  }
  return results;
}

} // namespace

std::vector<Ideal> enumerate_borel(const QPoly& P, int n) {
  if (P.is_zero()) throw BorelError("enumerate_borel: zero polynomial");
  int d = P.degree();
  if (d >= n) throw BorelError("enumerate_borel: deg P >= n");

  std::vector<QPoly> delta(d + 1);
  delta[0] = P;
  for (int i = 1; i <= d; ++i) delta[i] = delta[i - 1].delta();

  // Stage i works in R^(i) = k[x_0..x_{n-i}].
  int nv0 = n - d + 1;
  if (!delta[d].is_constant() || delta[d].coeff(0) < 1 ||
      delta[d].coeff(0).get_den() != 1)
    throw BorelError("enumerate_borel: Delta^d P is not a positive integer");
  std::vector<Monomial> point;
  for (int i = 0; i + 1 < nv0; ++i) point.push_back(Monomial::var(i, nv0));
  std::vector<std::vector<Monomial>> states =
      stage_expand({point}, delta[d], nv0);

  for (int i = d - 1; i >= 0; --i) {
    int nv = n - i + 1;
    std::vector<std::vector<Monomial>> lifted;
    for (auto& s : states) {
      std::vector<Monomial> bigger;
      for (auto& m : s) {
        Monomial mm(nv);
        std::copy(m.e.begin(), m.e.end(), mm.e.begin());
        bigger.push_back(mm);
      }
      lifted.push_back(std::move(bigger));
    }
    states = stage_expand(std::move(lifted), delta[i], nv);
  }

  std::vector<Ideal> out;
  for (auto& s : states) {
    if (!is_borel_fixed(s) || !borel_is_saturated(s))
      throw BorelError("enumerate_borel: candidate failed re-verification");
    if (hilbert_polynomial(s, n + 1) != P)
      throw BorelError("enumerate_borel: candidate has wrong polynomial");
    out.push_back(monomial_ideal(n + 1, s));
  }
  // Deterministic order.
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    std::vector<Monomial> ga, gb;
    for (auto& g : a.gens()) ga.push_back(g.terms().begin()->first);
    for (auto& g : b.gens()) gb.push_back(g.terms().begin()->first);
    return key_of(ga) < key_of(gb);
  });
  return out;
}

} // namespace planepairs
