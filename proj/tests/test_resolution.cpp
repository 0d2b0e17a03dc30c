#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planepairs/poly_io.hpp"
#include "planepairs/resolution.hpp"

using namespace planepairs;

namespace {

Ideal ideal_from(const std::string& gens, int n) {
  VarNames v = VarNames::x(n);
  return Ideal(n + 1, parse_polynomial_list(gens, v));
}

const char* kI124 = "x0^2,x0*x1,x1^2,x0*x2,x1*x2,x0*x3";
const char* kJ3 = "x0^2,x0*x1,x1^2,x0*x2,x1*x2";

BettiTable table(std::initializer_list<std::tuple<int, int, long>> cells) {
  BettiTable b;
  for (auto& [i, j, v] : cells) b.add(i, j, v);
  return b;
}

} // namespace

TEST_CASE("syzygies of a regular sequence are Koszul") {
  VarNames v = VarNames::x(2);
  auto syz = syzygies(parse_polynomial_list("x0,x1", v),
                      MonomialOrder::grevlex());
  REQUIRE(syz.size() == 1);
  ModElem expect({parse_polynomial("x1", v), parse_polynomial("-x0", v)});
  bool match = syz[0] == expect || syz[0] == expect.scaled(-1);
  CHECK(match);
}

TEST_CASE("syzygy columns annihilate the generators") {
  for (auto [gens, n] : {std::pair{kI124, 4}, {kJ3, 3}}) {
    Ideal I = ideal_from(gens, n);
    auto syz = syzygies_of_gens(I);
    CHECK(!syz.empty());
    for (auto& s : syz) {
      Polynomial acc(I.nvars());
      for (size_t k = 0; k < I.gens().size(); ++k) acc += s.c[k] * I.gens()[k];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("Koszul complex of the irrelevant ideal of P^2") {
  FreeResolution r = minimal_free_resolution(ideal_from("x0,x1,x2", 2));
  CHECK(r.betti() ==
        table({{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
  CHECK(r.composition_is_zero());
  CHECK(r.is_minimal());
}

TEST_CASE("twisted cubic: 0 <- S <- S(-2)^3 <- S(-3)^2") {
  FreeResolution r = minimal_free_resolution(
      ideal_from("x0*x2-x1^2, x1*x3-x2^2, x0*x3-x1*x2", 3));
  CHECK(r.betti() == table({{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  CHECK(r.composition_is_zero());
  CHECK(r.is_minimal());
}

TEST_CASE("resolution of I_{1,2,4}: S(-2)^6, S(-3)^9, S(-4)^5, S(-5)") {
  FreeResolution r = minimal_free_resolution(ideal_from(kI124, 4));
  BettiTable expect = table(
      {{0, 0, 1}, {1, 2, 6}, {2, 3, 9}, {3, 4, 5}, {4, 5, 1}});
  CHECK(r.betti() == expect);
  CHECK(r.composition_is_zero());
  CHECK(r.is_minimal());
  CHECK(r.betti().proj_dim() == 4);
  CHECK(r.betti().regularity() == 1);
  CHECK(depth_from_betti(5, r.betti()) == 1); // = c+d+2-n
  // Eliahou-Kervaire agrees (the ideal is borel fixed).
  VarNames v = VarNames::x(4);
  std::vector<Monomial> mons;
  for (auto& g : parse_polynomial_list(kI124, v))
    mons.push_back(g.terms().begin()->first);
  CHECK(ek_betti_table(mons, 5) == expect);
  CHECK(ek_betti(mons) == std::vector<long>{6, 9, 5, 1});
}

TEST_CASE("resolution of J_3: S(-2)^5, S(-3)^6, S(-4)^2") {
  FreeResolution r = minimal_free_resolution(ideal_from(kJ3, 3));
  BettiTable expect =
      table({{0, 0, 1}, {1, 2, 5}, {2, 3, 6}, {3, 4, 2}});
  CHECK(r.betti() == expect);
  CHECK(r.composition_is_zero());
  CHECK(r.is_minimal());
  VarNames v = VarNames::x(3);
  std::vector<Monomial> mons;
  for (auto& g : parse_polynomial_list(kJ3, v))
    mons.push_back(g.terms().begin()->first);
  CHECK(ek_betti_table(mons, 4) == expect);
}

TEST_CASE("minimal module generators prune graded redundancy") {
  VarNames v = VarNames::x(2);
  MonomialOrder ord = MonomialOrder::grevlex();
  // In S^1: {x0, x1, x0^2 + x0x1} minimally needs only the two linear ones.
  std::vector<ModElem> gens = {ModElem({parse_polynomial("x0", v)}),
                               ModElem({parse_polynomial("x1", v)}),
                               ModElem({parse_polynomial("x0^2+x0*x1", v)})};
  auto min = minimal_module_generators(gens, {0}, ord);
  CHECK(min.size() == 2);
}

TEST_CASE("module membership and equality") {
  VarNames v = VarNames::x(2);
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<ModElem> A = {
      ModElem({parse_polynomial("x0", v), parse_polynomial("x1", v)}),
      ModElem({parse_polynomial("x1", v), parse_polynomial("x2", v)})};
  ModElem combo = A[0].times_term(Monomial::var(2, 3), 1) -
                  A[1].times_term(Monomial::var(0, 3), 2);
  CHECK(module_contains(A, combo, ord));
  ModElem outside({parse_polynomial("x2", v), Polynomial(3)});
  CHECK(!module_contains(A, outside, ord));
  std::vector<ModElem> B = A;
  B.push_back(combo);
  CHECK(module_equal(A, B, ord));
  B.push_back(outside);
  CHECK(!module_equal(A, B, ord));
}
