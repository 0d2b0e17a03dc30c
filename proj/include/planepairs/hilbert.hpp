#ifndef PLANEPAIRS_HILBERT_HPP
#define PLANEPAIRS_HILBERT_HPP

#include <string>
#include <vector>

#include "planepairs/groebner.hpp"
#include "planepairs/ideal.hpp"

namespace planepairs {

/// Dense univariate polynomial over Q (numerators in s, Hilbert polynomials
/// in t). Coefficients ascending; normalized (no trailing zeros).
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static QPoly constant(const Rational& q) { return QPoly({q}); }
  static QPoly t() { return QPoly({Rational(0), Rational(1)}); }
  /// Binomial polynomial C(t + a, k) in t, for integer a, k >= 0.
  static QPoly binom(long a, long k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; } // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return i >= 0 && i < (int)c_.size() ? c_[i] : Rational(0);
  }
  Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(long t) const;
  bool is_constant() const { return (int)c_.size() <= 1; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly scaled(const Rational& q) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return c_ != o.c_; }

  /// P(t + s) for integer s.
  QPoly shifted(long s) const;
  /// First difference P(t) - P(t-1).
  QPoly delta() const { return *this - shifted(-1); }

  /// Coefficients in the basis C(t+i, i), index i ascending.
  std::vector<Rational> binomial_basis() const;

  /// Canonical text form in the binomial basis, e.g. "C(t+2,2)+C(t+1,1)+1".
  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Parse expressions like "C(t+2,2)+t+1" or "2*C(t+3,3)-C(t+1,1)+4".
QPoly parse_qpoly(const std::string& text);

/// Numerator N(s) of the Hilbert series HS_{S/I}(s) = N(s)/(1-s)^{nvars}.
std::vector<Integer> hilbert_numerator(const Ideal& I);
/// Same, for a monomial ideal given by generators in nvars variables.
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens,
                                       int nvars);

/// dim_k (S/I)_t, exact for every t >= 0.
Integer hilbert_function(const Ideal& I, long t);

/// The Hilbert polynomial of S/I.
QPoly hilbert_polynomial(const Ideal& I);
QPoly hilbert_polynomial(const std::vector<Monomial>& gens, int nvars);

/// Krull dimension of S/I via maximal independent variable sets of in(I),
/// cross-checked against the pole order of the Hilbert series.
int krull_dim(const Ideal& I);

/// P_{c,d,n}(t) = C(t+c,c) + C(t+d,d) - C(t+c+d-n, c+d-n), the Hilbert
/// polynomial of a transverse (c,d)-plane pair in P^n.
QPoly pair_hilbert_polynomial(int c, int d, int n);

/// Macaulay decomposition P(t) = sum_{i=0..d} C(t+i,i+1) - C(t+i-m_i,i+1)
/// with m_0 >= ... >= m_d >= 0, plus the derived a-sequence
/// (a_d = m_d, a_i = m_i - m_{i+1}).
struct MacaulayDecomposition {
  std::vector<long> m; // index i = 0..d
  std::vector<long> a; // index i = 0..d
};
MacaulayDecomposition macaulay_decomposition(const QPoly& P);

/// The Reeves-Stillman lexicographic point for P on P^n (minimalized).
Ideal lex_point(const QPoly& P, int n);

} // namespace planepairs

#endif
