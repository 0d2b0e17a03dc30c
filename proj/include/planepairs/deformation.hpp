#ifndef PLANEPAIRS_DEFORMATION_HPP
#define PLANEPAIRS_DEFORMATION_HPP

#include "planepairs/tangent.hpp"

namespace planepairs {

/// An explicitly lifted versal deformation of a monomial ideal I in S:
/// the presentation phi1 of I, the perturbed family phi0_inf with its
/// perturbed syzygy matrix phi1_inf over S[u_1..u_m], and the obstruction
/// ideal J in k[u_1..u_m] cutting out the versal base. The lifted matrices
/// live in nvars() = (n+1) + nu variables with u_j at index n + j; the
/// obstruction ideal and base components live in the u variables alone.
struct VersalFamily {
  std::string name;
  int n = 0;  // ambient P^n
  int nu = 0; // number of parameters u_1..u_m
  Ideal base; // I, in the x variables only
  std::vector<Polynomial> phi0;              // generators, x variables
  std::vector<std::vector<Polynomial>> phi1; // syzygy matrix, x variables
  // Trivial first-order deformations (flag motions) and the rest of a
  // basis of the degree-zero tangent space; entries in the x variables.
  std::vector<std::vector<Polynomial>> tvec;
  std::vector<std::vector<Polynomial>> uvec;
  std::vector<Polynomial> phi0_inf;              // in S[u]
  std::vector<std::vector<Polynomial>> phi1_inf; // in S[u]
  std::vector<Polynomial> obstruction;           // generators of J in k[u]
  // The stated decomposition of the versal base: component ideals in k[u]
  // with their affine dimensions, and the ideal of their pairwise meet
  // (empty when the base is irreducible).
  std::vector<Ideal> components;
  std::vector<long> component_dims;
  Ideal component_meet;

  int nvars() const { return n + 1 + nu; }
};

/// The two worked families: "i124" (the distinguished borel point of the
/// line-plane component in P^4) and "j3" (the singular borel point of the
/// plane-plus-two-points scheme in P^3).
VersalFamily versal_family(const std::string& name);

struct VersalReport {
  bool presentation_ok = false;  // phi0 generates base, phi0 * phi1 = 0
  bool lifts_ok = false;         // phi*_inf reduce to phi* modulo (u)
  bool tangents_valid = false;   // every t-/u-vector is in Hom(I,S/I)_0
  bool tangents_span = false;    // they are a basis of Hom(I,S/I)_0
  long tangent_count = 0;
  bool flat = false;             // phi0_inf * phi1_inf = 0 in (R/J)[u]
  bool obstruction_ok = false;   // J matches its stated decomposition
  bool pass() const {
    return presentation_ok && lifts_ok && tangents_valid && tangents_span &&
           flat && obstruction_ok;
  }
};

VersalReport verify_versal(const VersalFamily& f);

/// The ideal of k x k minors of a matrix of polynomials.
Ideal minor_ideal(const std::vector<std::vector<Polynomial>>& mat, int k,
                  int nvars);

} // namespace planepairs

#endif
