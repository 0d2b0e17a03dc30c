#ifndef PLANEPAIRS_POLY_IO_HPP
#define PLANEPAIRS_POLY_IO_HPP

#include <string>
#include <vector>

#include "planepairs/polynomial.hpp"

namespace planepairs {

/// Variable-name table for parsing and printing.
struct VarNames {
  std::vector<std::string> names;

  /// x0, x1, ..., xn.
  static VarNames x(int n);
  /// x0..xn followed by u1..um (coordinates of a parameter ring adjunction).
  static VarNames xu(int n, int m);
  /// u1..um only.
  static VarNames u(int m);

  int size() const { return (int)names.size(); }
  /// Index of a name, or -1.
  int index_of(const std::string& s) const;
};

/// Parse a polynomial from text. Grammar: sums/differences of products of
/// factors; a factor is a rational literal, a variable name, or a
/// parenthesized expression, optionally followed by ^<int>. '*' between
/// factors is optional.
Polynomial parse_polynomial(const std::string& text, const VarNames& vars);

/// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const VarNames& vars);

/// Canonical printing: terms in descending grevlex, explicit '*' and '^'.
std::string print_polynomial(const Polynomial& p, const VarNames& vars);
std::string print_monomial(const Monomial& m, const VarNames& vars);

} // namespace planepairs

#endif
