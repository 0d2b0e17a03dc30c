#ifndef PLANEPAIRS_IDEAL_HPP
#define PLANEPAIRS_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "planepairs/order.hpp"
#include "planepairs/polynomial.hpp"

namespace planepairs {

/// Homogeneous ideal given by generators, with a write-once cache of reduced
/// Groebner bases keyed by monomial order. Copies share the cache.
class Ideal {
public:
  Ideal() : nv_(0), cache_(std::make_shared<Cache>()) {}
  Ideal(int nvars, std::vector<Polynomial> gens)
      : nv_(nvars), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens_) {
      if (g.nvars() != nv_)
        throw std::invalid_argument("Ideal: generator in wrong ring");
      if (!g.is_homogeneous())
        throw std::invalid_argument("Ideal: generator not homogeneous");
    }
  }

  int nvars() const { return nv_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const {
    for (auto& g : gens_)
      if (!g.is_zero()) return false;
    return true;
  }

  /// Reduced Groebner basis (monic, sorted by ascending lead); cached.
  const std::vector<Polynomial>& groebner(const MonomialOrder& ord) const;

private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> map;
  };
  int nv_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

} // namespace planepairs

#endif
