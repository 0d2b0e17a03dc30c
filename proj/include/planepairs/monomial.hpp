#ifndef PLANEPAIRS_MONOMIAL_HPP
#define PLANEPAIRS_MONOMIAL_HPP

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

namespace planepairs {

/// Power product in a fixed number of variables; exponent vector storage.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int nvars() const { return (int)e.size(); }
  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  bool divides(const Monomial& m) const {
    assert(nvars() == m.nvars());
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    assert(nvars() == m.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e[i] += m.e[i];
    return r;
  }

  /// Exact quotient; caller must ensure m | *this.
  Monomial operator/(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e[i] -= m.e[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    Monomial r(a);
    for (int i = 0; i < a.nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  static Monomial var(int i, int nvars, int power = 1) {
    Monomial m(nvars);
    m.e[i] = power;
    return m;
  }

  /// Largest variable index with positive exponent; -1 for the unit monomial.
  int max_var() const {
    for (int i = nvars() - 1; i >= 0; --i)
      if (e[i] > 0) return i;
    return -1;
  }

  /// Smallest variable index with positive exponent; -1 for the unit monomial.
  int min_var() const {
    for (int i = 0; i < nvars(); ++i)
      if (e[i] > 0) return i;
    return -1;
  }
};

/// Three-way comparators: return <0, 0, >0 when a < b, a == b, a > b.

inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: a > b iff the last nonzero entry of a - b is negative.
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

/// Lex after renaming: perm lists variable indices from largest to smallest.
inline int cmp_permuted_lex(const Monomial& a, const Monomial& b,
                            const std::vector<int>& perm) {
  for (int i : perm)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

/// Elimination order for the last variable: compare its exponent first, then
/// grevlex on the full vector. Any element of a Groebner basis under this
/// order whose lead is free of the last variable lies in the subring.
inline int cmp_elim_last(const Monomial& a, const Monomial& b) {
  int last = a.nvars() - 1;
  if (a.e[last] != b.e[last]) return a.e[last] < b.e[last] ? -1 : 1;
  return cmp_grevlex(a, b);
}

/// Strict-weak-ordering functor: descending grevlex (leading term first).
struct GrevlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_grevlex(a, b) > 0;
  }
};

/// Ascending grevlex, for ordered monomial sets.
struct GrevlexAsc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return cmp_grevlex(a, b) < 0;
  }
};

} // namespace planepairs

#endif
