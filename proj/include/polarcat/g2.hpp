#pragma once
// The G2 layer: the invariant 3-form on Q^7 (cross-product epsilon tensor),
// the 14-dimensional subalgebra of so_7 annihilating it, the Upsilon
// contraction maps, and the relation battery they satisfy on V (x) V.  All
// checks are exact rational matrix identities.
//
// Also the enhanced-coupon check for m = 3: the Levi-Civita coupon Delta_3
// against the signed symmetrizer Sigma(3) in the Brauer algebra B_3.

#include "polarcat/linalg.hpp"
#include "polarcat/scalars.hpp"

namespace polarcat {

// Totally antisymmetric 3-tensor on Q^7 supported on the seven triples
// (0-indexed) 012+, 034-, 056-, 135-, 146+, 236-, 245-.
struct Epsilon3 {
  std::vector<Rational> v;  // dense 7x7x7

  const Rational& at(int a, int b, int c) const { return v[(a * 7 + b) * 7 + c]; }
};

Epsilon3 epsilon3();

struct G2Data {
  std::vector<QMat> basis;  // 14 matrices in so_7 annihilating the 3-form
  QMat gram;                // Gram matrix of the trace form on the basis
  Rational s;               // scaling of the form so that chi_V(C) = 12
};

// Exact kernel of the so_7 action (dim 21) on Lambda^3 applied to the
// 3-form; dimension 14, Casimir acts on V as 12 after normalization.
G2Data g2_subalgebra();

// Upsilon: V -> V(x)V and Upsilon-hat: V(x)V -> V, the epsilon contraction
// maps; Upsilon-hat Upsilon = 6 id_V exactly, and K = Upsilon Upsilon-hat is
// 6 times the projector onto the 7-dimensional summand of Lambda^2 V.
std::pair<QMat, QMat> upsilon();

struct G2Report {
  bool dim14 = false;             // dim G2 = 14
  bool casimir_value = false;     // C = 12 on V
  bool casimir_spectrum = false;  // {0,12,24,28} on VxV, mult 1/7/14/27
  bool tempered_spectrum = false; // H in {-12,-6,0,2}, same multiplicities
  bool upsilon_inverse = false;   // Upsilon-hat Upsilon = 6 I
  bool upsilon_quasi = false;     // (Upsilon Upsilon-hat)^2 = 6 Upsilon Upsilon-hat
  bool quartic = false;           // H(H-2)(H+6)(H+12) = 0
  bool spectral = false;          // H - X + 2E - I + K = 0
  bool lemma_reduction = false;   // K - X K^T + 2X - E - I = 0
  bool lemma_vee = false;         // K^{T1} + K + X + E - 2I = 0
  bool equivariance = false;      // H and Upsilon commute with the action
  bool projector = false;         // P = K/6: P^2 = P, XP = -P, EP = 0
  bool norm_contraction = false;  // double contraction of the 3-form pair
  bool loop_scalar = false;       // cap cup = 7

  bool all() const;
};

G2Report verify_g2_suite();

struct CouponReport {
  bool skew = false;              // sigma Delta_3 = sgn(sigma) Delta_3
  Rational normalization;         // u with Sigma(3) = u Delta Delta^*, Delta = eps
  bool relation = false;          // Sigma(3) = u Delta Delta^* exactly
  bool closure_poly = false;      // symbolic closure = delta(delta-1)(delta-2)
  bool delta_consistent = false;  // its value at delta = 3 matches tr Sigma(3)
};

// m = 3 enhanced coupon: Delta_3 = Levi-Civita tensor on Q^3, Delta^* its
// rotation by nested caps.  Over Q the solved normalization is u = -1 (the
// coupon satisfying Sigma(3) = Delta Delta^* on the nose is sqrt(-1) times
// the rational tensor; the identity checked here is rational and exact).
CouponReport enhanced_coupon_check();

}  // namespace polarcat
