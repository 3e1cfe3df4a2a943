#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarcat/g2.hpp"

using namespace polarcat;

TEST_CASE("epsilon tensor") {
  Epsilon3 e = epsilon3();
  CHECK(e.at(0, 1, 2) == 1);
  CHECK(e.at(1, 0, 2) == -1);
  CHECK(e.at(1, 4, 6) == 1);
  CHECK(e.at(0, 3, 4) == -1);
  CHECK(e.at(0, 0, 1) == 0);
  // full antisymmetry and support size
  int nonzero = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        CHECK(e.at(a, b, c) == -e.at(b, a, c));
        CHECK(e.at(a, b, c) == -e.at(a, c, b));
        if (e.at(a, b, c) != 0) ++nonzero;
      }
  CHECK(nonzero == 7 * 6);
}

TEST_CASE("annihilator subalgebra") {
  G2Data g = g2_subalgebra();
  CHECK(g.basis.size() == 14);
  CHECK(g.s == 6);  // trace-form Casimir gives 2 on V; 12 needs s = 6
  // every basis element is antisymmetric (inside so_7)
  for (auto& B : g.basis) CHECK(B.transpose() == Rational(-1) * B);
}

TEST_CASE("relation battery") {
  G2Report r = verify_g2_suite();
  CHECK(r.dim14);
  CHECK(r.casimir_value);
  CHECK(r.casimir_spectrum);
  CHECK(r.tempered_spectrum);
  CHECK(r.upsilon_inverse);
  CHECK(r.upsilon_quasi);
  CHECK(r.quartic);
  CHECK(r.spectral);
  CHECK(r.lemma_reduction);
  CHECK(r.lemma_vee);
  CHECK(r.equivariance);
  CHECK(r.projector);
  CHECK(r.norm_contraction);
  CHECK(r.loop_scalar);
  CHECK(r.all());
}

TEST_CASE("enhanced coupon at m = 3") {
  CouponReport r = enhanced_coupon_check();
  CHECK(r.skew);
  CHECK(r.normalization == Rational(-1));
  CHECK(r.relation);
  CHECK(r.closure_poly);
  CHECK(r.delta_consistent);
}
