#ifndef PLANEPAIRS_GROEBNER_HPP
#define PLANEPAIRS_GROEBNER_HPP

#include <vector>

#include "planepairs/ideal.hpp"

namespace planepairs {

/// Reduced Groebner basis of the ideal generated by gens: Buchberger with
/// normal (lowest lcm) pair selection, the coprime-lead and chain criteria,
/// followed by interreduction. Result is monic and sorted by ascending lead.
std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& ord);

/// Fully reduced normal form of p modulo the (assumed Groebner) set G.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& p, const Ideal& I,
                       const MonomialOrder& ord = MonomialOrder::grevlex());

bool ideal_contains(const Ideal& I, const Polynomial& p);
bool ideal_equal(const Ideal& I, const Ideal& J);

/// Minimal generators of the initial ideal, sorted ascending grevlex.
std::vector<Monomial> initial_ideal(const Ideal& I, const MonomialOrder& ord);

/// Remove monomials divisible by another element of the set.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

Ideal monomial_ideal(int nvars, const std::vector<Monomial>& gens);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Elimination-based intersection (auxiliary variable t, t*I + (1-t)*J).
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// Colon by a single polynomial: (I : f) via intersection with (f).
Ideal ideal_colon(const Ideal& I, const Polynomial& f);
/// Colon by an ideal: intersection of single-generator colons.
Ideal ideal_colon(const Ideal& I, const Ideal& J);
/// Saturation (I : J^infty), iterated colon until stabilization.
Ideal ideal_saturate(const Ideal& I, const Ideal& J);
/// Saturation with respect to the irrelevant ideal (x0..xn).
Ideal ideal_saturate(const Ideal& I);
bool is_saturated(const Ideal& I);

/// Exact division q = p / f (throws if the division leaves a remainder).
Polynomial divide_exact(const Polynomial& p, const Polynomial& f,
                        const MonomialOrder& ord);

/// Minimal generators of I (prunes generators lying in the ideal of the
/// remaining ones; graded greedy, so the count is the minimal number).
std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens);

} // namespace planepairs

#endif
