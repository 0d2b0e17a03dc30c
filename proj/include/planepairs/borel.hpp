#ifndef PLANEPAIRS_BOREL_HPP
#define PLANEPAIRS_BOREL_HPP

#include <stdexcept>

#include "planepairs/hilbert.hpp"

namespace planepairs {

/// Raised when a computation leaves the supported enumeration regime or a
/// probabilistic computation fails to stabilize.
struct BorelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exchange-move test: for every minimal generator m, every x_j | m and
/// every i < j, the monomial m x_i / x_j must lie in the ideal.
bool is_borel_fixed(const std::vector<Monomial>& min_gens);
/// The ideal must be a monomial ideal (every generator a single term).
bool is_borel_fixed(const Ideal& I);

/// Whether the borel-fixed monomial ideal is saturated (no minimal
/// generator involves the last variable).
bool borel_is_saturated(const std::vector<Monomial>& min_gens);

/// The distinguished borel-fixed point of H(c,d,n):
/// I_{c,d,n} = (x_0..x_{n-c-d-2}) + (x_a..x_{n-d-1})^2
///           + sum_{i=a}^{n-d-1} x_i (x_{n-d}..x_{2n-c-d-2-i}),  a = max(n-c-d-1, 0).
Ideal I_cdn(int c, int d, int n);

/// Generic initial ideal in grevlex: random rational coordinate change,
/// computed twice with independent draws; accepted only on agreement,
/// retried up to the budget, then BorelError. Deterministic per seed.
Ideal gin(const Ideal& I, unsigned long seed, int retries = 3);

/// All valid single expansions of a saturated borel ideal inside
/// k[x_0..x_{nvars-1}]: replace a minimal generator m by
/// { m x_j : max(m) <= j <= nvars-2 }; valid when the result is again
/// borel fixed. Results are minimalized.
std::vector<std::vector<Monomial>> borel_expansions(
    const std::vector<Monomial>& min_gens, int nvars);

/// All saturated borel-fixed ideals of S = k[x_0..x_n] with Hilbert
/// polynomial P, by staged expansion over the difference polynomials
/// Delta^i P. Only the constant-deficit regime is supported; anything else
/// raises BorelError. Every candidate is re-verified before being returned.
std::vector<Ideal> enumerate_borel(const QPoly& P, int n);

} // namespace planepairs

#endif
