#ifndef PLANEPAIRS_POLYNOMIAL_HPP
#define PLANEPAIRS_POLYNOMIAL_HPP

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planepairs/monomial.hpp"
#include "planepairs/order.hpp"
#include "planepairs/rational.hpp"

namespace planepairs {

/// Sparse multivariate polynomial over Q. Terms are stored in descending
/// grevlex so iteration order (and printing) is canonical regardless of the
/// order used for a particular computation.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrevlexDesc>;

  Polynomial() : nv_(0) {}
  explicit Polynomial(int nvars) : nv_(nvars) {}

  static Polynomial constant(const Rational& c, int nvars) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static Polynomial monomial(const Monomial& m, int nvars,
                             const Rational& c = 1) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
  }
  static Polynomial var(int i, int nvars) {
    return monomial(Monomial::var(i, nvars), nvars);
  }

  int nvars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return (int)terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c) {
    assert(m.nvars() == nv_);
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  /// Leading monomial/coefficient under an arbitrary order.
  const Monomial& lead_monomial(const MonomialOrder& ord) const {
    assert(!terms_.empty());
    const Monomial* best = &terms_.begin()->first;
    if (ord.kind() != MonomialOrder::Kind::grevlex)
      for (auto& [m, c] : terms_)
        if (ord.greater(m, *best)) best = &m;
    return *best;
  }
  const Rational& lead_coeff(const MonomialOrder& ord) const {
    return terms_.at(lead_monomial(ord));
  }

  Polynomial operator-() const {
    Polynomial r(nv_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    assert(nv_ == o.nv_);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    assert(nv_ == o.nv_);
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator*(const Polynomial& o) const {
    assert(nv_ == o.nv_);
    Polynomial r(nv_);
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(nv_);
    if (c == 0) return r;
    for (auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
  }
  Polynomial times_term(const Monomial& m, const Rational& c) const {
    Polynomial r(nv_);
    if (c == 0) return r;
    for (auto& [mm, q] : terms_) r.terms_.emplace(mm * m, q * c);
    return r;
  }

  /// Scale so the leading coefficient (under ord) is 1.
  Polynomial monic(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(1 / lead_coeff(ord));
  }

  bool operator==(const Polynomial& o) const {
    return nv_ == o.nv_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Substitute images[i] for variable i (ring homomorphism on generators).
  Polynomial compose(const std::vector<Polynomial>& images) const {
    assert((int)images.size() == nv_);
    int out_nv = images.empty() ? nv_ : images[0].nvars();
    // Per-variable power cache.
    std::vector<std::vector<Polynomial>> pows(nv_);
    for (int i = 0; i < nv_; ++i)
      pows[i].push_back(Polynomial::constant(1, out_nv));
    Polynomial r(out_nv);
    for (auto& [m, c] : terms_) {
      Polynomial t = Polynomial::constant(c, out_nv);
      for (int i = 0; i < nv_; ++i) {
        while ((int)pows[i].size() <= m.e[i])
          pows[i].push_back(pows[i].back() * images[i]);
        if (m.e[i] > 0) t *= pows[i][m.e[i]];
      }
      r += t;
    }
    return r;
  }

  /// Reinterpret in a ring with more variables (same variable indices).
  Polynomial extended(int new_nvars) const {
    assert(new_nvars >= nv_);
    Polynomial r(new_nvars);
    for (auto& [m, c] : terms_) {
      Monomial mm(new_nvars);
      std::copy(m.e.begin(), m.e.end(), mm.e.begin());
      r.terms_.emplace(mm, c);
    }
    return r;
  }

  /// Drop trailing variables; they must not occur.
  Polynomial restricted(int new_nvars) const {
    assert(new_nvars <= nv_);
    Polynomial r(new_nvars);
    for (auto& [m, c] : terms_) {
      for (int i = new_nvars; i < nv_; ++i)
        if (m.e[i] != 0)
          throw std::invalid_argument("restricted: variable occurs");
      Monomial mm(new_nvars);
      std::copy(m.e.begin(), m.e.begin() + new_nvars, mm.e.begin());
      r.terms_.emplace(mm, c);
    }
    return r;
  }

  bool uses_var(int i) const {
    for (auto& [m, c] : terms_)
      if (m.e[i] > 0) return true;
    return false;
  }

  /// Exact division by a monomial; every term must be divisible.
  Polynomial divide_by_monomial(const Monomial& m) const {
    Polynomial r(nv_);
    for (auto& [mm, c] : terms_) {
      if (!m.divides(mm))
        throw std::invalid_argument("divide_by_monomial: not divisible");
      r.terms_.emplace(mm / m, c);
    }
    return r;
  }

private:
  int nv_;
  TermMap terms_;
};

} // namespace planepairs

#endif
