#ifndef PLANEPAIRS_MODSYZ_HPP
#define PLANEPAIRS_MODSYZ_HPP

#include <optional>
#include <vector>

#include "planepairs/groebner.hpp"

namespace planepairs {

/// Element of a free module S^r, stored as a coordinate vector.
struct ModElem {
  std::vector<Polynomial> c;

  ModElem() = default;
  ModElem(int rank, int nvars) : c(rank, Polynomial(nvars)) {}
  explicit ModElem(std::vector<Polynomial> coords) : c(std::move(coords)) {}

  int rank() const { return (int)c.size(); }
  bool is_zero() const {
    for (auto& p : c)
      if (!p.is_zero()) return false;
    return true;
  }
  static ModElem basis(int i, int rank, int nvars) {
    ModElem e(rank, nvars);
    e.c[i] = Polynomial::constant(1, nvars);
    return e;
  }

  ModElem& operator+=(const ModElem& o);
  ModElem& operator-=(const ModElem& o);
  friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
  friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }
  ModElem times_term(const Monomial& m, const Rational& q) const;
  ModElem scaled(const Rational& q) const;
  bool operator==(const ModElem& o) const { return c == o.c; }
};

/// Lead of a module element under position-over-term (position 0 largest),
/// with the given ring order inside each position.
struct ModLead {
  int pos;
  Monomial m;
  Rational coeff;
};
std::optional<ModLead> mod_lead(const ModElem& f, const MonomialOrder& ord);

/// Degree of a homogeneous element of (+) S(-shifts[i]); throws if the
/// entries are inhomogeneous or of mismatched total degree.
int elem_degree(const ModElem& f, const std::vector<int>& shifts);

/// Groebner basis of the submodule generated by F (POT order). No
/// minimization; F is a prefix of the result.
std::vector<ModElem> module_groebner(const std::vector<ModElem>& F,
                                     const MonomialOrder& ord);

/// Fully reduced normal form modulo a module Groebner basis.
ModElem module_normal_form(const ModElem& f, const std::vector<ModElem>& G,
                           const MonomialOrder& ord);

bool module_contains(const std::vector<ModElem>& gens, const ModElem& f,
                     const MonomialOrder& ord);
bool module_equal(const std::vector<ModElem>& A, const std::vector<ModElem>& B,
                  const MonomialOrder& ord);

/// Generating set of the syzygy module of the sequence F (Schreyer: every
/// S-pair of the tracked Groebner basis contributes its reduction record).
/// Result elements have rank F.size().
std::vector<ModElem> syzygies(const std::vector<ModElem>& F,
                              const MonomialOrder& ord);
/// Syzygies of a sequence of ring elements (rank-1 case).
std::vector<ModElem> syzygies(const std::vector<Polynomial>& F,
                              const MonomialOrder& ord);

/// Minimal generating set of the graded submodule generated by gens
/// (elements of (+) S(-shifts[i])); graded greedy + Nakayama.
std::vector<ModElem> minimal_module_generators(std::vector<ModElem> gens,
                                               const std::vector<int>& shifts,
                                               const MonomialOrder& ord);

} // namespace planepairs

#endif
