#include "planepairs/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "planepairs/borel.hpp"
#include "planepairs/catalog.hpp"
#include "planepairs/cones.hpp"
#include "planepairs/deformation.hpp"
#include "planepairs/poly_io.hpp"

namespace planepairs {

namespace {

struct Outcome {
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Task {
  std::string id;
  std::string claim;
  std::function<Outcome()> fn;
};

Outcome ok(std::string expected, std::string computed, bool pass) {
  return Outcome{std::move(expected), std::move(computed), pass};
}

Outcome eq_long(long expected, long computed) {
  return ok(std::to_string(expected), std::to_string(computed),
            expected == computed);
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string flag(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------- borel --

void borel_tasks(std::vector<Task>& ts, const SuiteOptions&) {
  for (int n : {4, 5, 6}) {
    ts.push_back(
        {"borel/pair-polynomial/n" + std::to_string(n),
         "the pair Hilbert polynomial of a line and an (n-2)-plane in P^n "
         "has exactly two saturated borel-fixed ideals: the distinguished "
         "point and the lexicographic point",
         [n] {
           QPoly P = pair_hilbert_polynomial(1, n - 2, n);
           std::vector<Ideal> found = enumerate_borel(P, n);
           Ideal a = I_cdn(1, n - 2, n), b = lex_point(P, n);
           bool pass =
               found.size() == 2 &&
               ((ideal_equal(found[0], a) && ideal_equal(found[1], b)) ||
                (ideal_equal(found[0], b) && ideal_equal(found[1], a)));
           return ok("exactly {distinguished, lex}",
                     std::to_string(found.size()) + " ideals" +
                         (pass ? ", matching the two known points" : ""),
                     pass);
         }});
  }
  for (auto [c, n] : {std::pair{1, 4}, {2, 5}}) {
    ts.push_back(
        {"borel/hyperplane-pair/c" + std::to_string(c) + "n" +
             std::to_string(n),
         "a c-plane paired with a hyperplane admits a unique saturated "
         "borel-fixed ideal, the distinguished point",
         [c = c, n = n] {
           std::vector<Ideal> found =
               enumerate_borel(pair_hilbert_polynomial(c, n - 1, n), n);
           bool pass =
               found.size() == 1 && ideal_equal(found[0], I_cdn(c, n - 1, n));
           return ok("1 ideal = distinguished point",
                     std::to_string(found.size()) + " ideal(s)", pass);
         }});
  }
  for (auto [d, n] : {std::pair{2, 4}, {3, 5}}) {
    ts.push_back(
        {"borel/point-plane/d" + std::to_string(d) + "n" + std::to_string(n),
         "a point paired with a d-plane admits a unique saturated "
         "borel-fixed ideal, the distinguished point",
         [d = d, n = n] {
           std::vector<Ideal> found =
               enumerate_borel(pair_hilbert_polynomial(0, d, n), n);
           bool pass =
               found.size() == 1 && ideal_equal(found[0], I_cdn(0, d, n));
           return ok("1 ideal = distinguished point",
                     std::to_string(found.size()) + " ideal(s)", pass);
         }});
  }
  for (auto [d, n] : {std::pair{2, 3}, {2, 4}, {3, 3}}) {
    for (int k = 1; k <= 3; ++k) {
      long expect = (k == 3) ? 2 : 1;
      ts.push_back(
          {"borel/hypersurface-plus-points/d" + std::to_string(d) + "n" +
               std::to_string(n) + "k" + std::to_string(k),
           "the Hilbert polynomial of a degree-" + std::to_string(d) +
               " hypersurface plus " + std::to_string(k) +
               " points has the stated number of saturated borel-fixed "
               "ideals",
           [d = d, n = n, k, expect] {
             QPoly P = QPoly::binom(n, n) - QPoly::binom(n - d, n) +
                       QPoly::constant(Rational(k));
             return eq_long(expect, (long)enumerate_borel(P, n).size());
           }});
    }
  }
}

// -------------------------------------------------------------- catalog --

void catalog_tasks(std::vector<Task>& ts, const SuiteOptions& opt) {
  std::vector<std::pair<std::string, int>> defaults = {
      {"fixed", 4},  {"2plane", 5}, {"H1", 4},
      {"2points", 3}, {"2borel", 4}, {"hypersurface", 3}};
  for (auto& [family, def_n] : defaults) {
    if (!opt.family.empty() && opt.family != family) continue;
    int n = opt.n >= 0 ? opt.n : def_n;
    for (const CatalogEntry& e : catalog_ideals(family, n)) {
      std::string expected = "saturated; catalogued Hilbert polynomial";
      if (e.c >= 0)
        expected += "; gin equals the expected borel point";
      if (e.tangent_dim >= 0)
        expected += "; tangent dimension " + std::to_string(e.tangent_dim);
      ts.push_back(
          {"catalog/" + family + "/n" + std::to_string(n) + "/" + e.label,
           e.description, [e, expected, seed = opt.seed] {
             PointReport r = verify_point(e, seed);
             std::string got = "saturated=" + flag(r.saturated) +
                               " hilbert=" + flag(r.hilbert_ok);
             if (r.gin_checked) got += " gin=" + flag(r.gin_ok);
             got += " tangent=" + std::to_string(r.tangent_dim);
             return ok(expected, got, r.pass());
           }});
    }
  }
}

// -------------------------------------------------------------- tangent --

void tangent_tasks(std::vector<Task>& ts, const SuiteOptions&) {
  ts.push_back({"tangent/distinguished/c1d2n4",
                "tangent dimension 18 = 6n-6 at the distinguished borel "
                "point of the line-plane pairs in P^4",
                [] { return eq_long(18, tangent_dimension(I_cdn(1, 2, 4))); }});
  ts.push_back({"tangent/distinguished/c1d3n5",
                "tangent dimension 6n-6 at the distinguished borel point of "
                "the line-hyperplane pairs in P^5",
                [] { return eq_long(24, tangent_dimension(I_cdn(1, 3, 5))); }});
  ts.push_back(
      {"tangent/transverse-pair/n4",
       "a transverse line-plane pair in P^4 is a smooth point of its "
       "12-dimensional component",
       [] {
         VarNames v = VarNames::x(4);
         Ideal L(5, parse_polynomial_list("x0, x1, x2", v));
         Ideal M(5, parse_polynomial_list("x3, x4", v));
         return eq_long(12, tangent_dimension(ideal_intersect(L, M)));
       }});
  for (int n : {3, 4}) {
    ts.push_back(
        {"tangent/plane-two-points/n" + std::to_string(n),
         "tangent dimension 6n-4 at the singular borel point of the "
         "plane-plus-two-points scheme",
         [n] {
           auto es = catalog_ideals("2points", n);
           for (auto& e : es)
             if (e.label == "v")
               return eq_long(6L * n - 4, tangent_dimension(e.ideal));
           throw std::logic_error("missing catalog entry");
         }});
  }
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    ts.push_back(
        {"tangent/equidimensional/k" + std::to_string(k) + "n" +
             std::to_string(n),
         "at the distinguished borel point of the pairs of (n-k)-planes the "
         "explicit trivial and extra derivations are valid degree-zero "
         "homomorphisms spanning a subspace of dimension 2k(n-k+1), the "
         "dimension of the component",
         [k = k, n = n] {
           int c = k - 1, nv = n + 1;
           // Generators x_q x_j, q = 0..c, j = q..2c-q, in the order the
           // derivation columns refer to.
           std::vector<Polynomial> gens;
           std::vector<std::pair<int, int>> idx;
           for (int q = 0; q <= c; ++q)
             for (int j = q; j <= 2 * c - q; ++j) {
               gens.push_back(Polynomial::var(q, nv) * Polynomial::var(j, nv));
               idx.push_back({q, j});
             }
           Ideal I(nv, gens);
           bool same = ideal_equal(I, I_cdn(n - k, n - k, n));
           std::vector<ModElem> syz = syzygies_of_gens(I);
           size_t r = gens.size();
           // Trivial derivations x_i d/dx_p (i > p) plus the extra ones
           // supported on the last two generators.
           std::vector<std::vector<Polynomial>> ders;
           for (int p = 0; p <= 2 * c; ++p)
             for (int i = p + 1; i <= n; ++i) {
               std::vector<Polynomial> im;
               for (auto [q, j] : idx) {
                 Polynomial d(nv);
                 if (q == p) d += Polynomial::var(j, nv);
                 if (j == p) d += Polynomial::var(q, nv);
                 im.push_back(Polynomial::var(i, nv) * d);
               }
               ders.push_back(std::move(im));
             }
           for (int i = c + 2; i <= n; ++i) {
             std::vector<Polynomial> im(r, Polynomial(nv));
             im[r - 2] = Polynomial::var(c, nv) * Polynomial::var(i, nv);
             ders.push_back(std::move(im));
           }
           {
             std::vector<Polynomial> im(r, Polynomial(nv));
             im[r - 1] = Polynomial::var(c + 1, nv) * Polynomial::var(c + 1, nv);
             ders.push_back(std::move(im));
           }
           bool valid = true;
           for (auto& im : ders)
             for (auto& s : syz) {
               Polynomial acc(nv);
               for (size_t j = 0; j < r; ++j) acc += s.c[j] * im[j];
               if (!ideal_contains(I, acc)) valid = false;
             }
           std::vector<Monomial> mons = monomials_of_degree(nv, 2);
           std::vector<std::vector<Rational>> rows;
           for (auto& im : ders) {
             std::vector<Rational> row;
             for (size_t j = 0; j < r; ++j) {
               Polynomial nf = normal_form(im[j], I);
               for (auto& m : mons) {
                 auto it = nf.terms().find(m);
                 row.push_back(it == nf.terms().end() ? Rational(0)
                                                      : it->second);
               }
             }
             rows.push_back(std::move(row));
           }
           long rank = rational_rank(rows);
           long target = 2L * k * (n - k + 1);
           bool pass = same && valid &&
                       rank == target &&
                       target == expected_component_dim(n - k, n - k, n) &&
                       hom_degree_zero_dim(I) >= target;
           return ok("valid derivations of rank " + std::to_string(target),
                     std::string("valid=") + flag(valid) + " rank=" +
                         std::to_string(rank),
                     pass);
         }});
  }
  ts.push_back(
      {"tangent/stratum-types/n4",
       "across the nine classified points of the first stratum in P^4 the "
       "tangent dimension takes the three stated type values 5n-5, 4n-4 and "
       "6n-6",
       [] {
         std::vector<long> expect = {12, 15, 18, 15, 15, 15, 15, 18, 12};
         std::vector<long> got;
         for (auto& e : catalog_ideals("H1", 4))
           got.push_back(tangent_dimension(e.ideal));
         return ok(vec_str(expect), vec_str(got), got == expect);
       }});
}

// ---------------------------------------------------------------- betti --

void betti_tasks(std::vector<Task>& ts, const SuiteOptions&) {
  ts.push_back({"betti/distinguished/c1d2n4",
                "the minimal free resolution at the distinguished borel "
                "point of the line-plane pairs in P^4 has total Betti "
                "numbers (1,6,9,5,1)",
                [] {
                  std::vector<long> expect = {1, 6, 9, 5, 1};
                  auto got =
                      minimal_free_resolution(I_cdn(1, 2, 4)).betti().totals();
                  return ok(vec_str(expect), vec_str(got), got == expect);
                }});
  ts.push_back({"betti/plane-two-points/n3",
                "the singular borel point of the plane-plus-two-points "
                "scheme in P^3 has total Betti numbers (1,5,6,2)",
                [] {
                  std::vector<long> expect = {1, 5, 6, 2};
                  for (auto& e : catalog_ideals("2points", 3))
                    if (e.label == "v") {
                      auto got =
                          minimal_free_resolution(e.ideal).betti().totals();
                      return ok(vec_str(expect), vec_str(got), got == expect);
                    }
                  throw std::logic_error("missing catalog entry");
                }});
  for (int n = 3; n <= 6; ++n) {
    ts.push_back(
        {"betti/eliahou-kervaire/n" + std::to_string(n),
         "for every spanning distinguished borel ideal in P^n the computed "
         "minimal resolution matches the Eliahou-Kervaire table, is linear "
         "with (n-c)(n-d) quadric generators, and has depth c+d+2-n",
         [n] {
           int pairs = 0;
           std::string bad;
           for (int c = 0; c <= n - 1; ++c)
             for (int d = c; d <= n - 1; ++d) {
               if (c + d + 1 < n) continue;
               if (c == n - 1 && d == n - 1) continue;
               ++pairs;
               Ideal I = I_cdn(c, d, n);
               std::vector<Monomial> mons;
               for (auto& g : I.gens())
                 mons.push_back(g.terms().begin()->first);
               BettiTable B = minimal_free_resolution(I).betti();
               bool good = B == ek_betti_table(mons, n + 1) &&
                           B.regularity() == 1 &&
                           B.at(1, 2) == (long)(n - c) * (n - d) &&
                           depth_from_betti(n + 1, B) == c + d + 2 - n;
               if (!good)
                 bad += " (" + std::to_string(c) + "," + std::to_string(d) +
                        ")";
             }
           return ok("all " + std::to_string(pairs) + " pairs agree",
                     bad.empty() ? "all agree" : "mismatch at" + bad,
                     bad.empty());
         }});
  }
}

// --------------------------------------------------------------- deform --

void deform_tasks(std::vector<Task>& ts, const SuiteOptions& opt) {
  auto make = [mutate = opt.mutate](const std::string& name) {
    VersalFamily f = versal_family(name);
    if (mutate && name == "i124")
      f.phi1_inf[0][0] += Polynomial::var(f.n + 6, f.nvars()) *
                          Polynomial::var(4, f.nvars());
    return f;
  };
  for (std::string name : {"i124", "j3"}) {
    long tangents = name == "i124" ? 18 : 14;
    ts.push_back({"deform/" + name + "/presentation",
                  "the printed generators present the ideal and the printed "
                  "syzygy matrix composes to zero",
                  [name, make] {
                    VersalReport r = verify_versal(make(name));
                    return ok("valid presentation", flag(r.presentation_ok),
                              r.presentation_ok);
                  }});
    ts.push_back({"deform/" + name + "/lifts",
                  "the perturbed generator and syzygy matrices restrict to "
                  "the printed ones at u = 0",
                  [name, make] {
                    VersalReport r = verify_versal(make(name));
                    return ok("restriction holds", flag(r.lifts_ok),
                              r.lifts_ok);
                  }});
    ts.push_back({"deform/" + name + "/tangents",
                  "the printed first-order deformations are a basis of the "
                  "degree-zero tangent space of the stated dimension",
                  [name, make, tangents] {
                    VersalReport r = verify_versal(make(name));
                    bool pass = r.tangents_valid && r.tangents_span &&
                                r.tangent_count == tangents;
                    return ok("basis of dimension " + std::to_string(tangents),
                              "valid=" + flag(r.tangents_valid) +
                                  " span=" + flag(r.tangents_span) +
                                  " dim=" + std::to_string(r.tangent_count),
                              pass);
                  }});
    ts.push_back({"deform/" + name + "/flatness",
                  "every entry of the perturbed product matrix lies in "
                  "I*S[u] + J*S[u]",
                  [name, make] {
                    VersalReport r = verify_versal(make(name));
                    return ok("product vanishes modulo I + J", flag(r.flat),
                              r.flat);
                  }});
    std::string comp_claim =
        name == "i124"
            ? "the obstruction ideal decomposes as a 5-dimensional "
              "determinantal cone meeting a 2-plane"
            : "the obstruction ideal is the 5-dimensional irreducible cone "
              "over the rank-one 3x3 matrices";
    std::vector<long> dims = name == "i124" ? std::vector<long>{5, 2}
                                            : std::vector<long>{5};
    ts.push_back({"deform/" + name + "/obstruction", comp_claim,
                  [name, make, dims] {
                    VersalFamily f = make(name);
                    VersalReport r = verify_versal(f);
                    std::vector<long> got;
                    for (auto& c : f.components) got.push_back(krull_dim(c));
                    bool pass = r.obstruction_ok && got == dims &&
                                f.component_dims == dims;
                    return ok("component dims " + vec_str(dims),
                              "decomposition=" + flag(r.obstruction_ok) +
                                  " dims=" + vec_str(got),
                              pass);
                  }});
  }
  ts.push_back(
      {"deform/i124/transversality",
       "the two components of the versal base meet transversally along a "
       "line: their tangent spaces at the origin have codimensions 1 and 6 "
       "summing to the codimension 7 of the meet",
       [] {
         VersalFamily f = versal_family("i124");
         auto lin_rows = [&](const Ideal& I,
                             std::vector<std::vector<Rational>>& rows) {
           for (auto& g : I.gens()) {
             if (g.is_zero() || g.degree() != 1) continue;
             std::vector<Rational> r(f.nu, Rational(0));
             for (auto& [m, c] : g.terms())
               for (int j = 0; j < f.nu; ++j)
                 if (m.e[j]) r[j] = c;
             rows.push_back(r);
           }
         };
         std::vector<std::vector<Rational>> a, b, both;
         lin_rows(f.components[0], a);
         lin_rows(f.components[1], b);
         both = a;
         both.insert(both.end(), b.begin(), b.end());
         long r1 = rational_rank(a), r2 = rational_rank(b);
         long ru = rational_rank(both);
         bool pass = r1 == 1 && r2 == 6 && ru == r1 + r2 &&
                     krull_dim(f.component_meet) == f.nu - ru;
         return ok("ranks 1 + 6 = 7; meet is a line",
                   "ranks " + std::to_string(r1) + " + " + std::to_string(r2) +
                       " = " + std::to_string(ru) + "; meet dim " +
                       std::to_string(krull_dim(f.component_meet)),
                   pass);
       }});
}

// ---------------------------------------------------------------- cones --

void cones_tasks(std::vector<Task>& ts, const SuiteOptions& opt) {
  struct Case {
    std::string family;
    int n;
    bool fano;
    bool log_fano;
  };
  std::vector<Case> cases;
  for (int n = 4; n <= 8; ++n) cases.push_back({"H1", n, true, true});
  cases.push_back({"2plane", 5, true, true});
  cases.push_back({"2plane", 6, false, true});
  cases.push_back({"2plane", 7, false, false});
  cases.push_back({"2plane", 8, false, false});
  for (int n = 6; n <= 8; ++n) cases.push_back({"22", n, true, true});
  for (const Case& c : cases) {
    if (!opt.family.empty() && opt.family != c.family) continue;
    if (opt.n >= 0 && opt.n != c.n) continue;
    std::string expect = std::string("relations + canonical class + "
                                     "simplicial cones; fano=") +
                         flag(c.fano) + " log-fano=" + flag(c.log_fano);
    ts.push_back(
        {"cones/" + c.family + "/n" + std::to_string(c.n),
         "the intersection tables determine the stated divisor relations "
         "and canonical class, and give the stated (log-)Fano verdict",
         [c, expect] {
           ConeReport r = verify_cones(cone_family(c.family, c.n));
           bool pass = r.pass() && r.fano == c.fano && r.log_fano == c.log_fano;
           std::string got = "relations=" + flag(r.relations_ok) +
                             " canonical=" + flag(r.canonical_ok) +
                             " simplicial=" + flag(r.simplicial_ok) +
                             " fano=" + flag(r.fano) +
                             " log-fano=" + flag(r.log_fano);
           if (r.log_fano && !r.fano)
             got += " witness=" + r.witness_divisor;
           return ok(expect, got, pass);
         }});
  }
}

// --------------------------------------------------------------- family --

void family_tasks(std::vector<Task>& ts, const SuiteOptions& opt) {
  for (auto [k, n] : {std::pair{2, 3}, {2, 4}, {3, 5}, {3, 6}}) {
    ts.push_back(
        {"family/groebner/k" + std::to_string(k) + "n" + std::to_string(n),
         "the parametric pair family is a Groebner basis under the permuted "
         "lexicographic order: the initial ideal is the fixed monomial "
         "ideal, the Hilbert polynomial is the pair polynomial, and the "
         "monomial degeneration has the distinguished generic initial ideal",
         [k = k, n = n, seed = opt.seed] {
           Ideal C = monomial_ideal(n + 1, pair_family_initial_terms(k, n));
           MonomialOrder ord = pair_family_order(k, n);
           PairFamilySpec g{k, n, {}};
           for (int i = 1; i <= k; ++i)
             g.lambda.push_back(Rational(2 * i + 1) / 2);
           Ideal I = pair_family_ideal(g);
           bool init =
               ideal_equal(monomial_ideal(n + 1, initial_ideal(I, ord)), C);
           bool hp = hilbert_polynomial(I) ==
                     pair_hilbert_polynomial(n - k, n - k, n);
           bool degen = ideal_equal(gin(C, seed), I_cdn(n - k, n - k, n));
           return ok("initial ideal, Hilbert polynomial and degeneration "
                     "all as stated",
                     "initial=" + flag(init) + " hilbert=" + flag(hp) +
                         " degeneration=" + flag(degen),
                     init && hp && degen);
         }});
    ts.push_back(
        {"family/orbits/k" + std::to_string(k) + "n" + std::to_string(n),
         "20 seeded parameter draws plus the boundary patterns realize "
         "exactly the 2^k zero-pattern orbits, each verified",
         [k = k, n = n, seed = opt.seed] {
           return eq_long(1L << k,
                          (long)orbit_signatures(k, n, 20, seed).size());
         }});
  }
}

// ---------------------------------------------------------------- pool ---

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<CheckRecord> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      CheckRecord& r = out[i];
      r.id = tasks[i].id;
      r.claim = tasks[i].claim;
      auto t0 = std::chrono::steady_clock::now();
      try {
        Outcome o = tasks[i].fn();
        r.expected = o.expected;
        r.computed = o.computed;
        r.pass = o.pass;
      } catch (const std::exception& e) {
        r.computed = std::string("error: ") + e.what();
        r.pass = false;
      }
      r.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

} // namespace

std::vector<std::string> all_suites() {
  return {"catalog", "borel", "tangent", "betti", "deform", "cones", "family"};
}

Report run_suites(const std::vector<std::string>& suites,
                  const SuiteOptions& opt) {
  std::vector<Task> tasks;
  for (const std::string& s : suites) {
    if (s == "catalog")
      catalog_tasks(tasks, opt);
    else if (s == "borel")
      borel_tasks(tasks, opt);
    else if (s == "tangent")
      tangent_tasks(tasks, opt);
    else if (s == "betti")
      betti_tasks(tasks, opt);
    else if (s == "deform")
      deform_tasks(tasks, opt);
    else if (s == "cones")
      cones_tasks(tasks, opt);
    else if (s == "family")
      family_tasks(tasks, opt);
    else
      throw std::invalid_argument("unknown suite: " + s);
  }
  if (!opt.only.empty()) {
    std::vector<Task> kept;
    for (auto& t : tasks)
      if (t.id.find(opt.only) != std::string::npos) kept.push_back(t);
    tasks = std::move(kept);
  }
  Report rep;
  rep.seed = opt.seed;
  rep.records = run_tasks(tasks, opt.jobs);
  return rep;
}

bool Report::all_pass() const {
  for (auto& r : records)
    if (!r.pass) return false;
  return !records.empty();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["seed"] = seed;
  long passed = 0;
  for (auto& r : records) passed += r.pass;
  j["summary"] = {{"total", records.size()},
                  {"passed", passed},
                  {"failed", (long)records.size() - passed}};
  j["records"] = nlohmann::ordered_json::array();
  for (auto& r : records)
    j["records"].push_back({{"id", r.id},
                            {"claim", r.claim},
                            {"expected", r.expected},
                            {"computed", r.computed},
                            {"pass", r.pass}});
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  for (auto& r : records) timings[r.id] = r.ms;
  j["volatile"] = {{"timestamp", buf}, {"timings_ms", timings}};
  return j.dump(2) + "\n";
}

std::string Report::summary() const {
  size_t w = 4;
  for (auto& r : records) w = std::max(w, r.id.size());
  std::ostringstream os;
  long passed = 0;
  for (auto& r : records) {
    passed += r.pass;
    os << (r.pass ? "PASS  " : "FAIL  ") << r.id
       << std::string(w - r.id.size() + 2, ' ');
    if (r.pass)
      os << r.computed << "\n";
    else
      os << "expected [" << r.expected << "] got [" << r.computed << "]\n";
  }
  os << passed << "/" << records.size() << " checks passed\n";
  return os.str();
}

} // namespace planepairs
