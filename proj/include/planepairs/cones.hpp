#ifndef PLANEPAIRS_CONES_HPP
#define PLANEPAIRS_CONES_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "planepairs/rational.hpp"

namespace planepairs {

/// Divisor/curve intersection data on a Hilbert-scheme component, with the
/// stated expressions of the extra effective divisors in the chosen Picard
/// basis and the canonical class. All classes are coordinate vectors in the
/// basis given by the first `basis` divisor names; intersection numbers are
/// transcribed data, not computed from the geometry.
struct ConeFamily {
  std::string name; // "H1" = H(1,n-2,n), "2plane" = H(n-3,n-3,n),
                    // "22" = H(2,2,n)
  int n = 0;
  std::vector<std::string> divisor_names; // basis divisors first
  size_t basis = 0;                       // Picard rank
  std::vector<std::string> curve_names;
  // Stated intersection numbers (divisor index, curve index, value).
  std::vector<std::tuple<size_t, size_t, long>> table;
  // Stated coordinates of each non-basis divisor in the basis, in the
  // order the non-basis divisors appear in divisor_names.
  std::vector<std::vector<Rational>> relations;
  std::vector<Rational> canonical; // K in basis coordinates
  std::vector<std::string> nef_names;
  std::vector<std::string> effective_names;
};

/// The three families with printed tables; n must be in the paper's range
/// (H1: n >= 4, 2plane: n >= 5, 22: n >= 6).
ConeFamily cone_family(const std::string& name, int n);

/// Coordinates of a named divisor in the basis (unit vector for a basis
/// divisor, the stated relation otherwise).
std::vector<Rational> divisor_class(const ConeFamily& f,
                                    const std::string& divisor);

/// Recover the coordinates of a non-basis divisor from its intersection
/// numbers alone: curve classes are first solved from all other stated
/// pairings, then the target is solved from its own column and re-checked
/// against every remaining stated pairing. Throws if the pairing data does
/// not determine the class; returns nullopt if the table is inconsistent.
std::optional<std::vector<Rational>>
express_in_basis(const ConeFamily& f, const std::string& target);

std::vector<Rational> canonical_class(const ConeFamily& f);

/// Exact membership of v in the cone spanned by linearly independent
/// generators (throws if they are dependent): v = sum lambda_i g_i with all
/// lambda_i >= 0, or > 0 when strict.
bool cone_contains(const std::vector<std::vector<Rational>>& generators,
                   const std::vector<Rational>& v, bool strict);

struct ConeReport {
  bool relations_ok = false;  // every stated relation recovered from the
                              // table by express_in_basis
  bool canonical_ok = false;  // K reproduces the stated blowup /
                              // Riemann-Hurwitz arithmetic
  bool simplicial_ok = false; // nef generators are a basis; effective
                              // generators independent where stated so
  bool fano = false;          // -K strictly inside the nef cone
  bool log_fano = false;      // fano, or an ample perturbation exists
  std::string witness_divisor; // effective divisor D with -K - eps*D ample
  Rational witness_eps = Rational(0);
  bool pass() const { return relations_ok && canonical_ok && simplicial_ok; }
};

ConeReport verify_cones(const ConeFamily& f);

} // namespace planepairs

#endif
