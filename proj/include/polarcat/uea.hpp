#pragma once
// PBW arithmetic in enveloping algebras of ordinary Lie algebras given by
// structure constants, with the invariants used elsewhere in the project:
// the quadratic Casimir, Gelfand invariants I(l) of so_m, the E-matrix
// (the U(g)-valued matrix of the tempered Casimir on the defining space),
// and characteristic identities E^d + Q_1 E^{d-1} + ... + Q_d = 0 with
// central coefficients.

#include <map>
#include <string>
#include <vector>

#include "polarcat/linalg.hpp"
#include "polarcat/scalars.hpp"

namespace polarcat {

struct LieData {
  std::vector<std::string> labels;
  std::vector<QMat> rep;        // defining representation, one matrix per basis
  std::vector<int> rep_par;     // parities of the defining space (supertrace)
  // [X_i, X_j] = sum_k c[i][j][k] X_k
  std::vector<std::vector<std::vector<Rational>>> c;

  int n() const { return (int)labels.size(); }
  int d() const { return rep.empty() ? 0 : rep[0].rows; }
};

// Structure constants solved from the faithful defining rep; antisymmetry,
// Jacobi and [rep_i, rep_j] = sum c rep_k are verified at construction.
LieData lie_from_rep(const std::vector<std::string>& labels,
                     const std::vector<QMat>& rep,
                     const std::vector<int>& rep_par);

// sl2 with basis (T, X, Y): [T,X] = 2X, [T,Y] = -2Y, [X,Y] = T; the defining
// space counts as odd for the supertrace (symplectic normalization).
LieData sl2_data();
// so_m with the identity form, basis X_{ab} = E_{ab} - E_{ba} for a < b in
// lexicographic order (the realization the delta-form formulas use).
LieData so_data(int m);
// so_m with the antidiagonal (split) form: rational diagonal Cartan, used for
// characteristic identities via highest-weight modules.
LieData so_split_data(int m);

struct PBWElement {
  const LieData* lie = nullptr;
  // exponent vector (basis order) -> coefficient; monomials are products in
  // increasing basis order
  std::map<std::vector<int>, Rational> terms;

  static PBWElement zero(const LieData& L) { return {&L, {}}; }
  static PBWElement one(const LieData& L, const Rational& c = Rational(1));
  static PBWElement gen(const LieData& L, int i);

  bool is_zero() const { return terms.empty(); }
  void add(const std::vector<int>& mono, const Rational& c);

  friend PBWElement operator+(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator-(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator*(const Rational& c, const PBWElement& a);
  bool operator==(const PBWElement& o) const;
  std::string to_string() const;
};

// Exact product, straightened to PBW order.
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);
// Evaluate in a module given action matrices per basis element.
QMat pbw_eval(const PBWElement& a, const std::vector<QMat>& mats);

// Quadratic Casimir from the invariant form B(x,y) = (1/2) str_V(xy);
// verified central.  Throws SingularForm when the form degenerates.
PBWElement casimir(const LieData& L);

// Gelfand invariant I(l) = sum X_{i1 i2} X_{i2 i3} ... X_{il i1} of so_m
// (L must come from so_data).
PBWElement gelfand(int l, const LieData& so_m);

struct UeaMatrix {
  int d = 0;
  std::vector<PBWElement> e;  // row-major d*d

  PBWElement& at(int r, int c) { return e[r * d + c]; }
  const PBWElement& at(int r, int c) const { return e[r * d + c]; }
  bool is_zero() const;

  friend UeaMatrix operator+(const UeaMatrix& a, const UeaMatrix& b);
  friend UeaMatrix operator*(const UeaMatrix& a, const UeaMatrix& b);
  friend UeaMatrix operator*(const PBWElement& c, const UeaMatrix& a);
};

UeaMatrix uea_identity(const LieData& L);
// The U(g)-valued matrix of the tempered Casimir element on the defining
// space: E(r,c) = sum_{k,l} (B^{-1})_{kl} X_k rho(X_l)_{rc}.
UeaMatrix e_matrix(const LieData& L);
// Supertrace over the defining space; str(E^2) recovers the degree-2 closure
// image (2C for sl2, I(2) for so_m).
PBWElement uea_str(const LieData& L, const UeaMatrix& a);

struct CharIdentity {
  std::vector<PBWElement> Q;  // Q_1 .. Q_d, polynomials in the Casimir
  bool entrywise_zero = false;
};

// Characteristic identity for a rank-1 split realization (sl2, split so_3):
// the weight-block restriction of the E action on a truncated Verma module
// gives the signed elementary symmetric values P_i(lambda); the Q_i are
// solved as polynomials in the Casimir by exact matching over the grid and
// the final identity is re-verified entrywise in PBW form.  Throws
// SolveUnderdetermined when the grid is too small.
CharIdentity char_identity(const LieData& L,
                           const std::vector<Rational>& lambda_grid);

// Finite-dimensional highest-weight module L_lambda of a rank-1 split
// realization (integral dominant lambda); returns action matrices per basis
// element.
std::vector<QMat> fd_module(const LieData& L, const Rational& lambda);

// Block evaluation of a UeaMatrix in a module: rows ordered module-major
// ((i, r) -> i * d + r).
QMat eval_matrix(const UeaMatrix& a, const std::vector<QMat>& mats);

struct CentreReport {
  bool i2_central = false;
  bool i4_central = false;
  bool commute = false;
  int rank = 0;  // rank of {1, I(2), I(2)^2, I(4)} by PBW coefficients
};

// Centrality of I(2), I(4) and linear independence of {1, I(2), I(2)^2,
// I(4)} in U(so_m) (rank 4 expected for m = 5, rank 3 for m = 3).
CentreReport centre_surjectivity_check(const LieData& so_m, int degree_bound);

}  // namespace polarcat
