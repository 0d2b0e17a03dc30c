#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planepairs/cones.hpp"

using namespace planepairs;

namespace {

std::vector<Rational> Q(std::vector<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<std::vector<Rational>> nef_gens(const ConeFamily& f) {
  std::vector<std::vector<Rational>> g;
  for (auto& d : f.nef_names) g.push_back(divisor_class(f, d));
  return g;
}

std::vector<Rational> minus_k(const ConeFamily& f) {
  std::vector<Rational> mk = canonical_class(f);
  for (auto& x : mk) x = -x;
  return mk;
}

} // namespace

TEST_CASE("family construction and input validation") {
  CHECK_THROWS(cone_family("H1", 3));
  CHECK_THROWS(cone_family("2plane", 4));
  CHECK_THROWS(cone_family("22", 5));
  CHECK_THROWS(cone_family("nosuch", 6));
  CHECK(cone_family("H1", 4).basis == 3);
  CHECK(cone_family("2plane", 5).basis == 3);
  CHECK(cone_family("22", 6).basis == 4);
}

TEST_CASE("the stated relations are recovered from the tables") {
  ConeFamily a = cone_family("H1", 5);
  CHECK(*express_in_basis(a, "N1") == Q({-1, 1, 1}));
  CHECK(*express_in_basis(a, "N2") == Q({2, -1, -1}));
  CHECK_THROWS(express_in_basis(a, "D1")); // basis divisor

  ConeFamily b = cone_family("2plane", 5);
  CHECK(*express_in_basis(b, "N1") == Q({0, -2, 2}));
  CHECK(*express_in_basis(b, "N2") == Q({-1, 2, -1}));
  CHECK(*express_in_basis(b, "N3") == Q({2, -1, 0}));

  // The codimension-(n-2) pair family carries the same relations with the
  // extra fibration class F entering only the last one.
  ConeFamily c = cone_family("22", 6);
  CHECK(*express_in_basis(c, "N1") == Q({0, -2, 2, 0}));
  CHECK(*express_in_basis(c, "N2") == Q({-1, 2, -1, 0}));
  CHECK(*express_in_basis(c, "N3") == Q({2, -1, 0, -1}));
}

TEST_CASE("a corrupted table is flagged") {
  ConeFamily a = cone_family("H1", 5);
  for (auto& [d, c, v] : a.table)
    if (a.divisor_names[d] == "N1" && a.curve_names[c] == "B2") v = 5;
  // The over-determined pairing data is now inconsistent.
  CHECK_FALSE(express_in_basis(a, "N1").has_value());
  CHECK_FALSE(verify_cones(a).relations_ok);
}

TEST_CASE("canonical classes") {
  CHECK(canonical_class(cone_family("H1", 4)) == Q({-3, -2, -2}));
  CHECK(canonical_class(cone_family("H1", 6)) == Q({-3, -4, -4}));
  CHECK(canonical_class(cone_family("2plane", 5)) == Q({-3, -1, -2}));
  CHECK(canonical_class(cone_family("2plane", 6)) == Q({-5, 0, -2}));
  CHECK(canonical_class(cone_family("22", 6)) == Q({-3, -1, -2, -1}));
  CHECK(canonical_class(cone_family("22", 8)) == Q({-3, -1, -2, -3}));
  for (int n : {4, 5, 6, 7, 8}) CHECK(verify_cones(cone_family("H1", n)).canonical_ok);
  for (int n : {5, 6, 7, 8}) CHECK(verify_cones(cone_family("2plane", n)).canonical_ok);
  for (int n : {6, 7, 8}) CHECK(verify_cones(cone_family("22", n)).canonical_ok);
}

TEST_CASE("cone membership") {
  std::vector<std::vector<Rational>> gens = {Q({1, 0, 0}), Q({0, 1, 0}),
                                             Q({0, 0, 1})};
  CHECK(cone_contains(gens, Q({1, 2, 3}), true));
  CHECK(cone_contains(gens, Q({1, 0, 3}), false));
  CHECK_FALSE(cone_contains(gens, Q({1, 0, 3}), true)); // boundary
  CHECK_FALSE(cone_contains(gens, Q({1, -1, 3}), false));
  std::vector<std::vector<Rational>> dep = {Q({1, 0, 0}), Q({2, 0, 0})};
  CHECK_THROWS(cone_contains(dep, Q({1, 0, 0}), false));
  // A two-generator face of a 3-dimensional lattice.
  std::vector<std::vector<Rational>> face = {Q({1, 1, 0}), Q({0, 1, 1})};
  CHECK(cone_contains(face, Q({1, 2, 1}), true));
  CHECK_FALSE(cone_contains(face, Q({1, 1, 1}), false)); // off the span
}

TEST_CASE("fano and log-fano verdicts") {
  for (int n : {4, 5, 6, 7, 8}) {
    ConeReport r = verify_cones(cone_family("H1", n));
    CHECK(r.pass());
    CHECK(r.fano);
  }
  for (int n : {6, 7, 8}) {
    ConeReport r = verify_cones(cone_family("22", n));
    CHECK(r.pass());
    CHECK(r.fano);
  }
  CHECK(verify_cones(cone_family("2plane", 5)).fano);

  // n = 6: -K = 5 D1 + 2 D3 is nef but not ample; subtracting a small
  // multiple of the effective divisor N1 = 2 D3 - 2 D2 moves it inside.
  ConeFamily b6 = cone_family("2plane", 6);
  ConeReport r6 = verify_cones(b6);
  CHECK(r6.pass());
  CHECK_FALSE(r6.fano);
  CHECK(r6.log_fano);
  CHECK(r6.witness_divisor == "N1");
  auto nef = nef_gens(b6);
  std::vector<Rational> mk = minus_k(b6);
  CHECK(cone_contains(nef, mk, false));       // nef
  CHECK_FALSE(cone_contains(nef, mk, true));  // not ample
  // -K - eps*D2 leaves the nef cone for every eps > 0.
  std::vector<Rational> d2 = divisor_class(b6, "D2");
  for (int k = 1; k <= 10; ++k) {
    std::vector<Rational> v = mk;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= d2[i] / (1 << k);
    CHECK_FALSE(cone_contains(nef, v, true));
  }
  // -K - (1/10) N1 is strictly inside.
  std::vector<Rational> n1 = divisor_class(b6, "N1");
  std::vector<Rational> w = mk;
  for (size_t i = 0; i < w.size(); ++i) w[i] -= n1[i] / 10;
  CHECK(cone_contains(nef, w, true));

  // For n >= 7 the paper claims neither; the Mori-dream property comes
  // from the contraction of the fano H(2,2,n) instead.
  for (int n : {7, 8}) {
    ConeReport r = verify_cones(cone_family("2plane", n));
    CHECK(r.pass());
    CHECK_FALSE(r.fano);
    CHECK_FALSE(r.log_fano);
  }
}
