#ifndef PLANEPAIRS_CATALOG_HPP
#define PLANEPAIRS_CATALOG_HPP

#include <set>

#include "planepairs/borel.hpp"
#include "planepairs/resolution.hpp"
#include "planepairs/tangent.hpp"

namespace planepairs {

/// One classified ideal with its stated expectations.
struct CatalogEntry {
  std::string family;     // "fixed", "2plane", "H1", "2points", "2borel", ...
  std::string label;      // the classification's numbering, e.g. "iii-a"
  std::string description;
  int n = 0;
  Ideal ideal;
  QPoly hilbert;          // expected Hilbert polynomial
  int c = -1, d = -1;     // pair parameters when the family lives on H(c,d,n)
  bool on_component = false; // expected to lie on H(c,d,n) (gin = I_cdn)
  long tangent_dim = -1;  // expected tangent dimension, -1 when unstated
};

/// The classified points of H(n-2,n-2,n) (4), H(n-3,n-3,n) (8),
/// H_1(1,n-2,n) (9), the plane-plus-two-points scheme H_n (6, both
/// type-(iii) orbits), the two borel points of the pair polynomial Q(t)
/// ("2borel"), and the two degree-d hypersurface-plus-3-points borel
/// points ("hypersurface", d=2).
std::vector<CatalogEntry> catalog_ideals(const std::string& family, int n);

struct PointReport {
  bool saturated = false;
  bool hilbert_ok = false;
  bool gin_checked = false; // only for entries with (c,d) set
  bool gin_ok = false;      // gin == I_cdn when on_component, else == lex point
  bool betti_linear = false;
  int regularity = -1;
  long tangent_dim = -1;
  bool tangent_ok = false;  // true when the entry states no dimension
  bool pass() const {
    return saturated && hilbert_ok && (!gin_checked || gin_ok) && tangent_ok;
  }
};

PointReport verify_point(const CatalogEntry& e, unsigned long seed);

/// The parametric pair-of-(n-k)-planes family of ideals.
struct PairFamilySpec {
  int k = 0, n = 0;
  std::vector<Rational> lambda; // lambda_1..lambda_k
};

/// Generators (gamma_{p,q})_{0<=p,q<k} + (delta_{p,q})_{0<=p<q<k} where
///   gamma_{p,q} = (x_p + L_p x_{n-k+1+p}) x_q,
///     L_p = lambda_1...lambda_{k-p} (p>=1), L_0 = lambda_1...lambda_k,
///   delta_{p,q} = x_p x_{n-k+1+q} - l_{(p,q)} x_q x_{n-k+1+p},
///     l_{(p,q)} = prod_{i=k-q+1}^{k-p} lambda_i (p>=1),
///     l_{(0,q)} = prod_{i=k-q+1}^{k}  lambda_i.
Ideal pair_family_ideal(const PairFamilySpec& spec);

/// The order making the family a Groebner basis:
/// x_0 > ... > x_{k-1} > x_n > x_{n-1} > ... > x_k.
MonomialOrder pair_family_order(int k, int n);

/// The set of initial terms:
/// {x_p x_q : p,q < k} u {x_p x_{n-k+1+q} : p < q <= k-1}.
std::vector<Monomial> pair_family_initial_terms(int k, int n);

/// The zero-pattern of lambda (true = zero), which determines the orbit.
std::vector<bool> orbit_signature(const PairFamilySpec& spec);

/// All signatures realized by `sample_count` seeded draws plus the 2^k
/// boundary patterns; each draw is checked against the initial-terms and
/// Hilbert-polynomial properties and throws on failure.
std::set<std::vector<bool>> orbit_signatures(int k, int n, int sample_count,
                                             unsigned long seed);

} // namespace planepairs

#endif
