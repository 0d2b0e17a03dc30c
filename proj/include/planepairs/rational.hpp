#ifndef PLANEPAIRS_RATIONAL_HPP
#define PLANEPAIRS_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace planepairs {

using Rational = mpq_class;
using Integer = mpz_class;

/// Binomial coefficient C(n, k) for integer n (possibly negative), k >= 0.
/// C(n, k) = n(n-1)...(n-k+1)/k!; zero when 0 <= n < k.
inline Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && n < k) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= Integer(n - i);
    den *= Integer(i + 1);
  }
  return num / den;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace planepairs

#endif
