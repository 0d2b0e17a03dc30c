#ifndef PLANEPAIRS_TANGENT_HPP
#define PLANEPAIRS_TANGENT_HPP

#include "planepairs/hilbert.hpp"
#include "planepairs/resolution.hpp"

namespace planepairs {

/// dim_k Hom(I, S/I)_0, the tangent space dimension of the Hilbert scheme
/// at [I] (valid whenever the comparison theorem applies to I).
///
/// A homomorphism is determined by the images of the minimal generators,
/// expanded in the standard-monomial basis of (S/I) in the matching degree;
/// each first syzygy imposes linear conditions. The dimension is the number
/// of unknowns minus the exact rank of the condition matrix.
long hom_degree_zero_dim(const Ideal& I,
                         const MonomialOrder& ord = MonomialOrder::grevlex());

/// Dimension of the component of pairs of a c-plane and a d-plane in P^n:
/// (n-c)(c+1) + (n-d)(d+1).
long expected_component_dim(int c, int d, int n);

/// The Gotzmann number of P: the number of terms of its binomial
/// (Macaulay) decomposition. Truncating a saturated ideal at this degree
/// always makes the comparison theorem applicable.
int gotzmann_number(const QPoly& P);

/// The ideal generated by the degree-m piece of I. Equals the truncation
/// I_{>=m} whenever m >= reg(I).
Ideal truncate_ideal(const Ideal& I, int m);

/// Whether the comparison theorem's hypothesis holds for the saturated
/// ideal I: (S/I)_e must equal H^0(O_X(e)) for every minimal generator
/// degree e. We certify this by e >= reg(S/I) together with
/// hf(S/I, e) == P(e).
bool comparison_holds(const Ideal& I);

/// The tangent space dimension of Hilb at [I]: hom_degree_zero_dim when
/// the comparison theorem applies directly, and otherwise the same
/// computation after truncating at the Gotzmann number.
long tangent_dimension(const Ideal& I);

/// All monomials of total degree d in nvars variables, in a fixed order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// Exact rank of a dense rational matrix.
long rational_rank(std::vector<std::vector<Rational>> rows);

} // namespace planepairs

#endif
