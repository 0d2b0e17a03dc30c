#include "planepairs/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace planepairs {

int BettiTable::proj_dim() const {
  int pd = 0;
  for (auto& [ij, v] : entries)
    if (v) pd = std::max(pd, ij.first);
  return pd;
}

int BettiTable::regularity() const {
  int r = 0;
  for (auto& [ij, v] : entries)
    if (v) r = std::max(r, ij.second - ij.first);
  return r;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> t(proj_dim() + 1, 0);
  for (auto& [ij, v] : entries) t[ij.first] += v;
  return t;
}

std::string BettiTable::str() const {
  int pd = proj_dim(), reg = regularity();
  std::ostringstream os;
  os << "       ";
  for (int i = 0; i <= pd; ++i) os << i << "\t";
  os << "\n";
  for (int r = 0; r <= reg; ++r) {
    os << r << ":     ";
    for (int i = 0; i <= pd; ++i) {
      long v = at(i, i + r);
      if (v) os << v << "\t";
      else os << ".\t";
    }
    os << "\n";
  }
  return os.str();
}

ModElem GradedMap::apply(const ModElem& v, int nvars) const {
  ModElem out(tgt_rank(), nvars);
  for (int k = 0; k < src_rank(); ++k)
    for (auto& [m, c] : v.c[k].terms()) out += cols[k].times_term(m, c);
  return out;
}

BettiTable FreeResolution::betti() const {
  BettiTable b;
  b.add(0, 0, 1);
  for (size_t i = 0; i < maps.size(); ++i)
    for (int d : maps[i].src_shifts) b.add((int)i + 1, d, 1);
  return b;
}

bool FreeResolution::composition_is_zero() const {
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    for (auto& col : maps[i + 1].cols)
      if (!maps[i].apply(col, nvars).is_zero()) return false;
  return true;
}

bool FreeResolution::is_minimal() const {
  for (auto& mp : maps)
    for (auto& col : mp.cols)
      for (auto& entry : col.c)
        for (auto& [m, c] : entry.terms())
          if (m.is_one()) return false;
  return true;
}

std::vector<ModElem> syzygies_of_gens(const Ideal& I) {
  return syzygies(I.gens(), MonomialOrder::grevlex());
}

FreeResolution minimal_free_resolution(const Ideal& I) {
  MonomialOrder ord = MonomialOrder::grevlex();
  int nv = I.nvars();
  FreeResolution res;
  res.nvars = nv;
  std::vector<Polynomial> gens = minimal_generators(I.gens());
  if (gens.empty()) return res;

  GradedMap phi0;
  phi0.tgt_shifts = {0};
  for (auto& g : gens) {
    if (!g.is_homogeneous())
      throw std::invalid_argument("resolution: inhomogeneous generator");
    phi0.src_shifts.push_back(g.degree());
    phi0.cols.push_back(ModElem({g}));
  }
  res.maps.push_back(phi0);

  std::vector<ModElem> cur = phi0.cols;
  std::vector<int> cur_tgt = phi0.tgt_shifts;
  std::vector<int> cur_src = phi0.src_shifts;
  for (int step = 0; step <= nv + 1; ++step) {
    std::vector<ModElem> syz = syzygies(cur, ord);
    std::vector<ModElem> min = minimal_module_generators(syz, cur_src, ord);
    if (min.empty()) return res;
    GradedMap mp;
    mp.tgt_shifts = cur_src;
    for (auto& s : min) {
      mp.src_shifts.push_back(elem_degree(s, cur_src));
      mp.cols.push_back(s);
    }
    res.maps.push_back(mp);
    cur = min;
    cur_tgt = mp.tgt_shifts;
    cur_src = mp.src_shifts;
  }
  throw std::logic_error("resolution longer than the Hilbert syzygy bound");
}

int depth_from_betti(int nvars, const BettiTable& b) {
  return nvars - b.proj_dim();
}

BettiTable ek_betti_table(const std::vector<Monomial>& min_gens, int nvars) {
  BettiTable b;
  b.add(0, 0, 1);
  for (auto& m : min_gens) {
    int mx = m.max_var();
    if (mx < 0) throw std::invalid_argument("ek_betti: unit generator");
    for (int i = 1; i <= mx + 1; ++i) {
      Integer cnt = binomial(mx, i - 1);
      b.add(i, m.degree() + i - 1, cnt.get_si());
    }
  }
  return b;
}

std::vector<long> ek_betti(const std::vector<Monomial>& min_gens) {
  int nv = min_gens.empty() ? 0 : min_gens[0].nvars();
  BettiTable b = ek_betti_table(min_gens, nv);
  std::vector<long> t = b.totals();
  return std::vector<long>(t.begin() + 1, t.end());
}

} // namespace planepairs
