#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planepairs/poly_io.hpp"

using namespace planepairs;

static Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

TEST_CASE("monomial arithmetic") {
  Monomial a = mono({2, 1, 0});
  Monomial b = mono({1, 0, 3});
  CHECK(a.degree() == 3);
  CHECK((a * b) == mono({3, 1, 3}));
  CHECK(Monomial::lcm(a, b) == mono({2, 1, 3}));
  CHECK(!a.divides(b));
  CHECK(mono({1, 0, 0}).divides(a));
  CHECK((a / mono({1, 1, 0})) == mono({1, 0, 0}));
  CHECK(a.max_var() == 1);
  CHECK(b.max_var() == 2);
  CHECK(Monomial(3).is_one());
  CHECK(Monomial::coprime(mono({0, 2, 0}), mono({1, 0, 1})));
  CHECK(!Monomial::coprime(a, b));
}

TEST_CASE("orders: lex and grevlex on standard examples") {
  // In k[x0,x1,x2]: lex has x0^2 > x0*x1 > x0*x2 > x0 > x1^3.
  MonomialOrder lex = MonomialOrder::lex();
  CHECK(lex.greater(mono({2, 0, 0}), mono({1, 1, 0})));
  CHECK(lex.greater(mono({1, 1, 0}), mono({1, 0, 1})));
  CHECK(lex.greater(mono({1, 0, 0}), mono({0, 3, 0})));
  // Grevlex refines degree; among degree 2: x0^2 > x0x1 > x1^2 > x0x2.
  MonomialOrder gr = MonomialOrder::grevlex();
  CHECK(gr.greater(mono({0, 3, 0}), mono({1, 1, 0})));
  CHECK(gr.greater(mono({2, 0, 0}), mono({1, 1, 0})));
  CHECK(gr.greater(mono({1, 1, 0}), mono({0, 2, 0})));
  CHECK(gr.greater(mono({0, 2, 0}), mono({1, 0, 1})));
}

TEST_CASE("permuted lex x0>x1>x4>x3>x2 picks the stated leads") {
  // Order used for the pair-family Groebner argument at k=2, n=4.
  MonomialOrder ord = MonomialOrder::permuted_lex({0, 1, 4, 3, 2});
  VarNames v = VarNames::x(4);
  // (x1+x4)*x0 = x0x1 + x0x4 leads with x0x1.
  Polynomial p = parse_polynomial("x0*x1+x0*x4", v);
  CHECK(print_monomial(p.lead_monomial(ord), v) == "x0*x1");
  // x0x4 - x1x3 leads with x0x4.
  Polynomial q = parse_polynomial("x0*x4-x1*x3", v);
  CHECK(print_monomial(q.lead_monomial(ord), v) == "x0*x4");
  // x0^2 + x0x3 leads with x0^2.
  Polynomial r = parse_polynomial("x0^2+x0*x3", v);
  CHECK(print_monomial(r.lead_monomial(ord), v) == "x0^2");
}

TEST_CASE("parse/print round trip is canonical") {
  VarNames v = VarNames::x(3);
  std::vector<std::string> cases = {
      "x0^2-x1*x2", "x0*x1+x1^2", "3*x0^3-1/2*x2^2*x3+x1", "0", "5",
      "x0*x2-2*x1*x3"};
  for (auto& s : cases) {
    Polynomial p = parse_polynomial(s, v);
    std::string printed = print_polynomial(p, v);
    CHECK(parse_polynomial(printed, v) == p);
  }
  // Canonical form: descending grevlex, explicit operators.
  CHECK(print_polynomial(parse_polynomial("x1 + x0^2", v), v) == "x0^2+x1");
  CHECK(print_polynomial(parse_polynomial("(x0+x1)*(x0-x1)", v), v) ==
        "x0^2-x1^2");
  CHECK(print_polynomial(parse_polynomial("-x0 + 2x1", v), v) == "-x0+2*x1");
}

TEST_CASE("ring axioms on random-ish inputs") {
  VarNames v = VarNames::x(2);
  std::vector<Polynomial> ps = {
      parse_polynomial("x0^2-x1", v), parse_polynomial("x1*x2+3", v),
      parse_polynomial("x0-x2^3+1/3", v), parse_polynomial("7*x2", v)};
  for (auto& a : ps)
    for (auto& b : ps)
      for (auto& c : ps) {
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
      }
  CHECK((ps[0] - ps[0]).is_zero());
}

TEST_CASE("compose substitutes linear forms") {
  VarNames v = VarNames::x(1);
  Polynomial p = parse_polynomial("x0^2+x1^2", v);
  std::vector<Polynomial> images = {parse_polynomial("x0+x1", v),
                                    parse_polynomial("x0-x1", v)};
  CHECK(p.compose(images) == parse_polynomial("2*x0^2+2*x1^2", v));
}

TEST_CASE("homogeneity detection") {
  VarNames v = VarNames::x(2);
  CHECK(parse_polynomial("x0*x1-x2^2", v).is_homogeneous());
  CHECK(!parse_polynomial("x0*x1-x2", v).is_homogeneous());
}
