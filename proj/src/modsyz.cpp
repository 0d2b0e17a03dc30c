#include "planepairs/modsyz.hpp"

#include <algorithm>
#include <stdexcept>

namespace planepairs {

ModElem& ModElem::operator+=(const ModElem& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("ModElem rank");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}
ModElem& ModElem::operator-=(const ModElem& o) {
  if (c.size() != o.c.size()) throw std::invalid_argument("ModElem rank");
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}
ModElem ModElem::times_term(const Monomial& m, const Rational& q) const {
  ModElem r;
  r.c.reserve(c.size());
  for (auto& p : c) r.c.push_back(p.times_term(m, q));
  return r;
}
ModElem ModElem::scaled(const Rational& q) const {
  ModElem r;
  r.c.reserve(c.size());
  for (auto& p : c) r.c.push_back(p.scaled(q));
  return r;
}

std::optional<ModLead> mod_lead(const ModElem& f, const MonomialOrder& ord) {
  for (int i = 0; i < f.rank(); ++i)
    if (!f.c[i].is_zero()) {
      const Monomial& m = f.c[i].lead_monomial(ord);
      return ModLead{i, m, f.c[i].terms().at(m)};
    }
  return std::nullopt;
}

int elem_degree(const ModElem& f, const std::vector<int>& shifts) {
  if ((int)shifts.size() != f.rank())
    throw std::invalid_argument("elem_degree: shift count");
  int d = -1;
  for (int i = 0; i < f.rank(); ++i) {
    if (f.c[i].is_zero()) continue;
    if (!f.c[i].is_homogeneous())
      throw std::invalid_argument("elem_degree: inhomogeneous entry");
    int di = f.c[i].degree() + shifts[i];
    if (d == -1) d = di;
    else if (d != di)
      throw std::invalid_argument("elem_degree: mixed degrees");
  }
  return d;
}

namespace {

/// Top-reduction loop with optional tracking of quotients against G.
/// Returns the remainder; if track != nullptr, *track accumulates the
/// combination so that f_in = sum track_k G_k + remainder.
ModElem reduce_tracked(const ModElem& f, const std::vector<ModElem>& G,
                       const std::vector<std::optional<ModLead>>& leads,
                       const MonomialOrder& ord,
                       std::vector<Polynomial>* track) {
  ModElem rem(f.rank(), f.rank() ? f.c[0].nvars() : 0);
  ModElem work = f;
  for (;;) {
    auto lw = mod_lead(work, ord);
    if (!lw) break;
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      if (!leads[k] || leads[k]->pos != lw->pos) continue;
      if (!leads[k]->m.divides(lw->m)) continue;
      Monomial q = lw->m / leads[k]->m;
      Rational qc = lw->coeff / leads[k]->coeff;
      work -= G[k].times_term(q, qc);
      if (track) (*track)[k].add_term(q, qc);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.c[lw->pos].add_term(lw->m, lw->coeff);
      work.c[lw->pos].add_term(lw->m, -lw->coeff);
    }
  }
  return rem;
}

struct GBState {
  std::vector<ModElem> G;
  std::vector<std::optional<ModLead>> leads;
  // Representations of G in terms of the original F (only when tracking).
  std::vector<ModElem> reps;
  bool track = false;
  std::vector<ModElem> syz; // collected syzygies of F (when tracking)
};

void complete_gb(GBState& st, const MonomialOrder& ord) {
  std::vector<std::pair<int, int>> pairs;
  auto add_pairs = [&](int j) {
    if (!st.leads[j]) return;
    for (int i = 0; i < j; ++i)
      if (st.leads[i] && st.leads[i]->pos == st.leads[j]->pos)
        pairs.push_back({i, j});
  };
  for (int j = 0; j < (int)st.G.size(); ++j) add_pairs(j);

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree first.
    size_t best = 0;
    auto lcm_of = [&](const std::pair<int, int>& pr) {
      return Monomial::lcm(st.leads[pr.first]->m, st.leads[pr.second]->m);
    };
    Monomial bl = lcm_of(pairs[0]);
    for (size_t k = 1; k < pairs.size(); ++k) {
      Monomial l = lcm_of(pairs[k]);
      if (l.degree() < bl.degree() ||
          (l.degree() == bl.degree() && ord.less(l, bl))) {
        best = k;
        bl = l;
      }
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + best);

    const ModLead& li = *st.leads[i];
    const ModLead& lj = *st.leads[j];
    // The coprime criterion is only valid in the ring (rank-1 lead in a
    // fixed position counts: positions are equal here, but the criterion
    // itself fails for modules), and when tracking we must reduce every
    // pair anyway to harvest its syzygy. Reduce unconditionally.
    Monomial l = Monomial::lcm(li.m, lj.m);
    Monomial qi = l / li.m, qj = l / lj.m;
    ModElem sp = st.G[i].times_term(qi, 1 / li.coeff) -
                 st.G[j].times_term(qj, 1 / lj.coeff);
    std::vector<Polynomial> qs;
    int nv = st.G[i].c[0].nvars();
    if (st.track) qs.assign(st.G.size(), Polynomial(nv));
    ModElem rem =
        reduce_tracked(sp, st.G, st.leads, ord, st.track ? &qs : nullptr);
    ModElem rep;
    if (st.track) {
      // S-pair = sum_k qs_k G_k + rem, so the combination of F expressing
      // rem is the S-pair representation minus the quotients.
      rep = st.reps[i].times_term(qi, 1 / li.coeff) -
            st.reps[j].times_term(qj, 1 / lj.coeff);
      for (size_t k = 0; k < st.G.size(); ++k)
        for (auto& [m, cq] : qs[k].terms()) rep -= st.reps[k].times_term(m, cq);
    }
    if (rem.is_zero()) {
      if (st.track) st.syz.push_back(rep);
    } else {
      if (st.track) st.reps.push_back(rep);
      st.G.push_back(rem);
      st.leads.push_back(mod_lead(rem, ord));
      add_pairs((int)st.G.size() - 1);
    }
  }
}

} // namespace

std::vector<ModElem> module_groebner(const std::vector<ModElem>& F,
                                     const MonomialOrder& ord) {
  GBState st;
  for (auto& f : F) {
    if (f.is_zero()) continue;
    st.G.push_back(f);
    st.leads.push_back(mod_lead(f, ord));
  }
  complete_gb(st, ord);
  return st.G;
}

ModElem module_normal_form(const ModElem& f, const std::vector<ModElem>& G,
                           const MonomialOrder& ord) {
  std::vector<std::optional<ModLead>> leads;
  for (auto& g : G) leads.push_back(mod_lead(g, ord));
  return reduce_tracked(f, G, leads, ord, nullptr);
}

bool module_contains(const std::vector<ModElem>& gens, const ModElem& f,
                     const MonomialOrder& ord) {
  return module_normal_form(f, module_groebner(gens, ord), ord).is_zero();
}

bool module_equal(const std::vector<ModElem>& A, const std::vector<ModElem>& B,
                  const MonomialOrder& ord) {
  auto GA = module_groebner(A, ord);
  auto GB = module_groebner(B, ord);
  for (auto& b : B)
    if (!module_normal_form(b, GA, ord).is_zero()) return false;
  for (auto& a : A)
    if (!module_normal_form(a, GB, ord).is_zero()) return false;
  return true;
}

std::vector<ModElem> syzygies(const std::vector<ModElem>& F,
                              const MonomialOrder& ord) {
  int r = (int)F.size();
  if (r == 0) return {};
  int nv = F[0].c.empty() ? 0 : F[0].c[0].nvars();
  GBState st;
  st.track = true;
  std::vector<ModElem> out;
  for (int i = 0; i < r; ++i) {
    if (F[i].is_zero()) {
      out.push_back(ModElem::basis(i, r, nv));
      continue;
    }
    st.G.push_back(F[i]);
    st.leads.push_back(mod_lead(F[i], ord));
    st.reps.push_back(ModElem::basis(i, r, nv));
  }
  complete_gb(st, ord);
  for (auto& s : st.syz)
    if (!s.is_zero()) out.push_back(s);
  return out;
}

std::vector<ModElem> syzygies(const std::vector<Polynomial>& F,
                              const MonomialOrder& ord) {
  std::vector<ModElem> wrapped;
  for (auto& f : F) wrapped.push_back(ModElem({f}));
  return syzygies(wrapped, ord);
}

std::vector<ModElem> minimal_module_generators(std::vector<ModElem> gens,
                                               const std::vector<int>& shifts,
                                               const MonomialOrder& ord) {
  std::vector<std::pair<int, ModElem>> graded;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    graded.push_back({elem_degree(g, shifts), g});
  }
  std::stable_sort(graded.begin(), graded.end(),
                   [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<ModElem> kept, gb;
  size_t i = 0;
  while (i < graded.size()) {
    size_t j = i;
    int d = graded[i].first;
    while (j < graded.size() && graded[j].first == d) ++j;
    if (!kept.empty()) gb = module_groebner(kept, ord);
    // Echelon set of same-degree normal forms, leads descending.
    std::vector<ModElem> pivots;
    auto lead_less = [&](const ModLead& a, const ModLead& b) {
      if (a.pos != b.pos) return a.pos > b.pos; // larger pos = smaller
      return ord.less(a.m, b.m);
    };
    for (size_t k = i; k < j; ++k) {
      ModElem nf = module_normal_form(graded[k].second, gb, ord);
      for (auto& pv : pivots) {
        if (nf.is_zero()) break;
        auto lp = mod_lead(pv, ord);
        auto it = nf.c[lp->pos].terms().find(lp->m);
        if (it != nf.c[lp->pos].terms().end()) nf -= pv.scaled(it->second);
      }
      if (!nf.is_zero()) {
        auto ln = mod_lead(nf, ord);
        ModElem pv = nf.scaled(1 / ln->coeff);
        auto pos = std::find_if(pivots.begin(), pivots.end(),
                                [&](const ModElem& q) {
                                  return lead_less(*mod_lead(q, ord), *ln);
                                });
        pivots.insert(pos, pv);
        kept.push_back(graded[k].second);
      }
    }
    i = j;
  }
  return kept;
}

} // namespace planepairs
