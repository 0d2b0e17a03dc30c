#include "planepairs/groebner.hpp"

#include <algorithm>
#include <list>
#include <set>

namespace planepairs {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  const Monomial& mf = f.lead_monomial(ord);
  const Monomial& mg = g.lead_monomial(ord);
  Monomial l = Monomial::lcm(mf, mg);
  Polynomial a = f.times_term(l / mf, 1 / f.lead_coeff(ord));
  Polynomial b = g.times_term(l / mg, 1 / g.lead_coeff(ord));
  return a - b;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

} // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
  Polynomial rem(p.nvars());
  Polynomial work = p;
  while (!work.is_zero()) {
    const Monomial& m = work.lead_monomial(ord);
    Rational c = work.terms().at(m);
    bool reduced = false;
    for (auto& g : G) {
      const Monomial& mg = g.lead_monomial(ord);
      if (mg.divides(m)) {
        work -= g.times_term(m / mg, c / g.lead_coeff(ord));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return rem;
}

std::vector<Polynomial> buchberger_reduced(const std::vector<Polynomial>& gens,
                                           const MonomialOrder& ord) {
  std::vector<Polynomial> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic(ord));
  if (G.empty()) return G;

  auto add_pairs = [&](std::list<Pair>& pairs, int j) {
    const Monomial& mj = G[j].lead_monomial(ord);
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(G[i].lead_monomial(ord), mj);
      pairs.push_back(Pair{i, j, l, l.degree()});
    }
  };

  std::list<Pair> pairs;
  for (int j = 0; j < (int)G.size(); ++j) add_pairs(pairs, j);
  std::set<std::pair<int, int>> pending;
  for (auto& p : pairs) pending.insert({p.i, p.j});

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm degree first, ties by the order itself.
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (it->deg < best->deg ||
          (it->deg == best->deg && ord.less(it->lcm, best->lcm)))
        best = it;
    Pair pr = *best;
    pairs.erase(best);
    pending.erase({pr.i, pr.j});

    const Monomial& mi = G[pr.i].lead_monomial(ord);
    const Monomial& mj = G[pr.j].lead_monomial(ord);
    // Buchberger's coprime-lead criterion.
    if (Monomial::coprime(mi, mj)) continue;
    // Chain criterion: some lead(G[k]) divides the lcm and both companion
    // pairs are already settled.
    bool chained = false;
    for (int k = 0; k < (int)G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!G[k].lead_monomial(ord).divides(pr.lcm)) continue;
      auto key1 = std::minmax(pr.i, k);
      auto key2 = std::minmax(pr.j, k);
      if (!pending.count({key1.first, key1.second}) &&
          !pending.count({key2.first, key2.second}))
        chained = true;
    }
    if (chained) continue;

    Polynomial r = normal_form(s_polynomial(G[pr.i], G[pr.j], ord), G, ord);
    if (!r.is_zero()) {
      G.push_back(r.monic(ord));
      int j = (int)G.size() - 1;
      add_pairs(pairs, j);
      for (int i = 0; i < j; ++i) pending.insert({i, j});
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Polynomial> M;
  for (int i = 0; i < (int)G.size(); ++i) {
    bool keep = true;
    const Monomial& mi = G[i].lead_monomial(ord);
    for (int j = 0; j < (int)G.size() && keep; ++j) {
      if (i == j) continue;
      const Monomial& mj = G[j].lead_monomial(ord);
      if (mj.divides(mi) && (mj != mi || j < i)) keep = false;
    }
    if (keep) M.push_back(G[i]);
  }
  // Interreduce tails.
  std::vector<Polynomial> R;
  for (int i = 0; i < (int)M.size(); ++i) {
    std::vector<Polynomial> others;
    for (int j = 0; j < (int)M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    R.push_back(normal_form(M[i], others, ord).monic(ord));
  }
  std::sort(R.begin(), R.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.lead_monomial(ord), b.lead_monomial(ord));
  });
  return R;
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
  std::string k = ord.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(k);
    if (it != cache_->map.end()) return *it->second;
  }
  auto gb = std::make_shared<const std::vector<Polynomial>>(
      buchberger_reduced(gens_, ord));
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] = cache_->map.emplace(k, gb);
  return *it->second;
}

Polynomial normal_form(const Polynomial& p, const Ideal& I,
                       const MonomialOrder& ord) {
  return normal_form(p, I.groebner(ord), ord);
}

bool ideal_contains(const Ideal& I, const Polynomial& p) {
  return normal_form(p, I).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (I.nvars() != J.nvars()) return false;
  return I.groebner(MonomialOrder::grevlex()) ==
         J.groebner(MonomialOrder::grevlex());
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), GrevlexAsc());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int i = 0; i < (int)gens.size(); ++i) {
    bool keep = true;
    for (int j = 0; j < (int)gens.size() && keep; ++j)
      if (j != i && gens[j].divides(gens[i]) && gens[j] != gens[i])
        keep = false;
    if (keep) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Monomial> initial_ideal(const Ideal& I, const MonomialOrder& ord) {
  std::vector<Monomial> leads;
  for (auto& g : I.groebner(ord)) leads.push_back(g.lead_monomial(ord));
  return minimalize_monomials(std::move(leads));
}

Ideal monomial_ideal(int nvars, const std::vector<Monomial>& gens) {
  std::vector<Polynomial> ps;
  for (auto& m : gens) ps.push_back(Polynomial::monomial(m, nvars));
  return Ideal(nvars, std::move(ps));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.nvars(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (auto& a : I.gens())
    for (auto& b : J.gens()) g.push_back(a * b);
  return Ideal(I.nvars(), std::move(g));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  int nv = I.nvars();
  int ext = nv + 1; // auxiliary variable t at the last index
  Polynomial t = Polynomial::var(nv, ext);
  Polynomial one_minus_t = Polynomial::constant(1, ext) - t;
  std::vector<Polynomial> gens;
  for (auto& f : I.gens()) gens.push_back(t * f.extended(ext));
  for (auto& g : J.gens()) gens.push_back(one_minus_t * g.extended(ext));
  MonomialOrder ord = MonomialOrder::elim_last();
  std::vector<Polynomial> result;
  for (auto& g : buchberger_reduced(gens, ord))
    if (g.lead_monomial(ord).e[nv] == 0) result.push_back(g.restricted(nv));
  return Ideal(nv, std::move(result));
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& f,
                        const MonomialOrder& ord) {
  Polynomial q(p.nvars());
  Polynomial r = p;
  while (!r.is_zero()) {
    const Monomial& m = r.lead_monomial(ord);
    const Monomial& mf = f.lead_monomial(ord);
    if (!mf.divides(m)) throw std::invalid_argument("divide_exact: remainder");
    Rational c = r.terms().at(m) / f.lead_coeff(ord);
    q.add_term(m / mf, c);
    r -= f.times_term(m / mf, c);
  }
  return q;
}

Ideal ideal_colon(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal_colon: zero divisor");
  Ideal fI(I.nvars(), {f});
  Ideal meet = ideal_intersect(I, fI);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Polynomial> gens;
  for (auto& g : meet.gens()) gens.push_back(divide_exact(g, f, ord));
  return Ideal(I.nvars(), std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
  bool first = true;
  Ideal acc;
  for (auto& f : J.gens()) {
    if (f.is_zero()) continue;
    Ideal c = ideal_colon(I, f);
    acc = first ? c : ideal_intersect(acc, c);
    first = false;
  }
  if (first) throw std::invalid_argument("ideal_colon: zero ideal divisor");
  return acc;
}

Ideal ideal_saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_colon(cur, J);
    if (ideal_equal(next, cur)) return cur;
    cur = next;
  }
}

Ideal ideal_saturate(const Ideal& I) {
  std::vector<Polynomial> vars;
  for (int i = 0; i < I.nvars(); ++i)
    vars.push_back(Polynomial::var(i, I.nvars()));
  return ideal_saturate(I, Ideal(I.nvars(), std::move(vars)));
}

bool is_saturated(const Ideal& I) { return ideal_equal(I, ideal_saturate(I)); }

std::vector<Polynomial> minimal_generators(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> sorted;
  for (auto& g : gens)
    if (!g.is_zero()) sorted.push_back(g);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.degree() < b.degree();
                   });
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Polynomial> kept;
  std::vector<Polynomial> gb;
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    int d = sorted[i].degree();
    while (j < sorted.size() && sorted[j].degree() == d) ++j;
    if (!kept.empty()) gb = buchberger_reduced(kept, ord);
    // Within a degree batch, keep elements whose normal forms modulo the
    // lower-degree span are linearly independent. Pivots are kept in
    // descending lead order so one elimination pass is exact (each pivot
    // subtraction only touches monomials below its lead).
    std::vector<Polynomial> pivots;
    for (size_t k = i; k < j; ++k) {
      Polynomial nf = normal_form(sorted[k], gb, ord);
      for (auto& pv : pivots) {
        if (nf.is_zero()) break;
        const Monomial& lm = pv.lead_monomial(ord);
        auto it = nf.terms().find(lm);
        if (it != nf.terms().end()) nf -= pv.scaled(it->second);
      }
      if (!nf.is_zero()) {
        Polynomial pv = nf.monic(ord);
        auto pos = std::find_if(
            pivots.begin(), pivots.end(), [&](const Polynomial& q) {
              return ord.less(q.lead_monomial(ord), pv.lead_monomial(ord));
            });
        pivots.insert(pos, pv);
        kept.push_back(sorted[k]);
      }
    }
    i = j;
  }
  return kept;
}

} // namespace planepairs
