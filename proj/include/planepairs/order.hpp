#ifndef PLANEPAIRS_ORDER_HPP
#define PLANEPAIRS_ORDER_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "planepairs/monomial.hpp"

namespace planepairs {

/// A monomial order on a polynomial ring. Grevlex is the canonical storage
/// and default computational order throughout.
class MonomialOrder {
public:
  enum class Kind { lex, grevlex, permuted_lex, elim_last };

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  /// perm lists variable indices from largest to smallest.
  static MonomialOrder permuted_lex(std::vector<int> perm) {
    MonomialOrder o(Kind::permuted_lex);
    o.perm_ = std::move(perm);
    return o;
  }
  /// Elimination order for the last ring variable.
  static MonomialOrder elim_last() { return MonomialOrder(Kind::elim_last); }

  Kind kind() const { return kind_; }
  const std::vector<int>& perm() const { return perm_; }

  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex: return cmp_lex(a, b);
      case Kind::grevlex: return cmp_grevlex(a, b);
      case Kind::permuted_lex: return cmp_permuted_lex(a, b, perm_);
      case Kind::elim_last: return cmp_elim_last(a, b);
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  /// Stable cache key.
  std::string key() const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::lex: os << "lex"; break;
      case Kind::grevlex: os << "grevlex"; break;
      case Kind::elim_last: os << "elim_last"; break;
      case Kind::permuted_lex:
        os << "permuted_lex";
        for (int i : perm_) os << ":" << i;
        break;
    }
    return os.str();
  }

private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<int> perm_;
};

} // namespace planepairs

#endif
