#ifndef PLANEPAIRS_RESOLUTION_HPP
#define PLANEPAIRS_RESOLUTION_HPP

#include <map>
#include <string>

#include "planepairs/modsyz.hpp"

namespace planepairs {

/// Graded Betti numbers beta_{i,j} of S/I (so beta_{0,0} = 1 and beta_{1,j}
/// counts minimal generators of I in degree j).
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, long v) {
    if (v) entries[{i, j}] += v;
  }
  /// Projective dimension of S/I.
  int proj_dim() const;
  /// Castelnuovo-Mumford regularity of S/I (max j - i).
  int regularity() const;
  /// Total Betti numbers: index i, value sum_j beta_{i,j}.
  std::vector<long> totals() const;
  /// Macaulay-style diagram, rows indexed by j - i.
  std::string str() const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Graded map between free modules: columns are elements of the target
/// (+) S(-tgt_shifts[k]); column k is homogeneous of degree src_shifts[k].
struct GradedMap {
  std::vector<int> tgt_shifts;
  std::vector<int> src_shifts;
  std::vector<ModElem> cols;

  int tgt_rank() const { return (int)tgt_shifts.size(); }
  int src_rank() const { return (int)src_shifts.size(); }
  /// Image of a source element (coordinates in the source basis).
  ModElem apply(const ModElem& v, int nvars) const;
};

/// Minimal graded free resolution of S/I:
///   0 <- S/I <- S <- F_1 <- F_2 <- ...  with maps[i]: F_{i+1} -> F_i
/// (maps[0] is the row of minimal generators of I).
struct FreeResolution {
  int nvars = 0;
  std::vector<GradedMap> maps;

  int length() const { return (int)maps.size(); } // = pd(S/I)
  BettiTable betti() const;
  /// All consecutive compositions vanish.
  bool composition_is_zero() const;
  /// Every matrix entry lies in the irrelevant maximal ideal.
  bool is_minimal() const;
};

FreeResolution minimal_free_resolution(const Ideal& I);

/// Syzygies of the generator sequence exactly as given (no minimization).
std::vector<ModElem> syzygies_of_gens(const Ideal& I);

/// depth(S/I) via Auslander-Buchsbaum.
int depth_from_betti(int nvars, const BettiTable& b);

/// Eliahou-Kervaire Betti numbers for a borel-fixed monomial ideal:
/// b_i(I) = sum_j C(max(m_j), i-1) over minimal generators, i >= 1, where
/// max(m) is the largest index of a variable dividing m. Returned as the
/// Betti table of S/I (generator m contributes in degree deg(m) + i - 1).
BettiTable ek_betti_table(const std::vector<Monomial>& min_gens, int nvars);
/// Total numbers only: index 1..pd, b_i as above.
std::vector<long> ek_betti(const std::vector<Monomial>& min_gens);

} // namespace planepairs

#endif
