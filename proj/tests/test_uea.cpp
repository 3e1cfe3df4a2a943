#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polarcat/normalform.hpp"
#include "polarcat/uea.hpp"

using namespace polarcat;

namespace {

PBWElement lie_bracket(const PBWElement& a, const PBWElement& b) {
  return pbw_mul(a, b) - pbw_mul(b, a);
}

PBWElement mono(const LieData& L, std::vector<int> e,
                const Rational& c = Rational(1)) {
  PBWElement r = PBWElement::zero(L);
  r.add(e, c);
  return r;
}

PBWElement random_elem(const LieData& L, std::mt19937& rng, int deg) {
  PBWElement r = PBWElement::one(L, Rational((long)(rng() % 7) - 3));
  for (int t = 0; t < 3; ++t) {
    std::vector<int> e(L.n(), 0);
    int d = (int)(rng() % (deg + 1));
    for (int i = 0; i < d; ++i) e[rng() % L.n()]++;
    r.add(e, Rational((long)(rng() % 9) - 4));
  }
  return r;
}

// Push the closure scalar through delta -> m, z2 -> I(2).
PBWElement push_closure(const Frac& f, const LieData& so_m, int m) {
  Frac at_m = f.specialize({{"delta", Rational(m)}});
  PBWElement I2 = gelfand(2, so_m);
  PBWElement out = PBWElement::zero(so_m);
  Rational den = at_m.den.constant_value();
  for (auto& [mo, c] : at_m.num.terms) {
    int j = mo.exp_of("z2");
    PBWElement p = PBWElement::one(so_m, c / den);
    for (int t = 0; t < j; ++t) p = pbw_mul(p, I2);
    out = out + p;
  }
  return out;
}

}  // namespace

TEST_CASE("pbw straightening") {
  LieData L = sl2_data();
  auto T = PBWElement::gen(L, 0), X = PBWElement::gen(L, 1),
       Y = PBWElement::gen(L, 2);
  // Y X = XY - T, X T = TX - 2X
  CHECK(pbw_mul(Y, X) == mono(L, {0, 1, 1}) - T);
  CHECK(pbw_mul(X, T) == mono(L, {1, 1, 0}) - Rational(2) * X);
  CHECK(pbw_mul(PBWElement::one(L), Y) == Y);
  CHECK(mono(L, {0, 1, 1}).to_string() == "1*X*Y");
}

TEST_CASE("pbw associativity") {
  std::mt19937 rng(11);
  std::vector<LieData> algebras{sl2_data(), so_data(3)};
  for (const LieData& L : algebras) {
    for (int t = 0; t < 8; ++t) {
      auto a = random_elem(L, rng, 2), b = random_elem(L, rng, 2),
           c = random_elem(L, rng, 2);
      CHECK(pbw_mul(pbw_mul(a, b), c) == pbw_mul(a, pbw_mul(b, c)));
    }
  }
}

TEST_CASE("quadratic casimir") {
  LieData L = sl2_data();
  PBWElement C = casimir(L);
  // -2(T^2/2 + XY + YX) straightened
  PBWElement expect = mono(L, {2, 0, 0}, -1) + mono(L, {1, 0, 0}, 2) +
                      mono(L, {0, 1, 1}, -4);
  CHECK(C == expect);
  // defining-space value sdim - 1 = -3
  QMat v = pbw_eval(C, L.rep);
  CHECK(v == Rational(-3) * QMat::identity(2));

  LieData so3 = so_data(3);
  CHECK(Rational(2) * casimir(so3) == gelfand(2, so3));
}

TEST_CASE("tempered matrix on the defining space") {
  LieData L = sl2_data();
  auto T = PBWElement::gen(L, 0), X = PBWElement::gen(L, 1),
       Y = PBWElement::gen(L, 2);
  UeaMatrix E = e_matrix(L);
  CHECK(E.at(0, 0) == Rational(-1) * T);
  CHECK(E.at(1, 1) == T);
  CHECK(E.at(0, 1) == Rational(-2) * Y);
  CHECK(E.at(1, 0) == Rational(-2) * X);
  // str(E^2) = 2C and the quadratic identity E^2 - 2E + C = 0
  UeaMatrix E2 = E * E;
  CHECK(uea_str(L, E2) == Rational(2) * casimir(L));
  UeaMatrix total =
      E2 + PBWElement::one(L, -2) * E + casimir(L) * uea_identity(L);
  CHECK(total.is_zero());

  for (int m : {3, 4}) {
    LieData so = so_data(m);
    UeaMatrix Es = e_matrix(so);
    CHECK(uea_str(so, Es * Es) == gelfand(2, so));
  }
}

TEST_CASE("characteristic identity for sl2") {
  LieData L = sl2_data();
  std::vector<Rational> grid;
  for (int k = 0; k < 5; ++k) grid.push_back(Rational(1, 3) + k);
  CharIdentity ci = char_identity(L, grid);
  CHECK(ci.entrywise_zero);
  REQUIRE(ci.Q.size() == 2);
  CHECK(ci.Q[0] == PBWElement::one(L, -2));
  CHECK(ci.Q[1] == casimir(L));
  CHECK_THROWS_AS(char_identity(L, {Rational(1, 3)}), CatError);
}

TEST_CASE("characteristic identity for so3") {
  LieData L = so_split_data(3);
  std::vector<Rational> grid;
  for (int k = 0; k < 7; ++k) grid.push_back(Rational(1, 5) + k);
  CharIdentity ci = char_identity(L, grid);
  CHECK(ci.entrywise_zero);
  REQUIRE(ci.Q.size() == 3);

  // the cubic identity holds on every L_lambda, lambda = 0, 1, 2
  UeaMatrix E = e_matrix(L);
  for (long lam : {0L, 1L, 2L}) {
    auto mats = fd_module(L, Rational(lam));
    CHECK(mats[0].rows == 2 * lam + 1);
    QMat A = eval_matrix(E, mats);
    QMat total = A.pow(3);
    for (int i = 1; i <= 3; ++i) {
      QMat qi = eval_matrix(ci.Q[i - 1] * uea_identity(L), mats);
      total = total + qi * A.pow(3 - i);
    }
    CHECK(total.is_zero());
  }
}

TEST_CASE("gelfand invariants") {
  for (int m : {3, 4}) {
    LieData so = so_data(m);
    PBWElement I2 = gelfand(2, so);
    for (int i = 0; i < so.n(); ++i)
      CHECK(lie_bracket(I2, PBWElement::gen(so, i)).is_zero());
    // odd closure pushforward: I(3) = ((2-m)/2) I(2)
    CHECK(gelfand(3, so) == push_closure(z_closure(3), so, m));
  }
  LieData so3 = so_data(3);
  CHECK(gelfand(3, so3) == Rational(-1, 2) * gelfand(2, so3));
}

TEST_CASE("centre families") {
  CentreReport r5 = centre_surjectivity_check(so_data(5), 4);
  CHECK(r5.i2_central);
  CHECK(r5.i4_central);
  CHECK(r5.commute);
  CHECK(r5.rank == 4);

  CentreReport r3 = centre_surjectivity_check(so_data(3), 4);
  CHECK(r3.rank == 3);
  CHECK_THROWS_AS(centre_surjectivity_check(so_data(3), 2), CatError);
}
