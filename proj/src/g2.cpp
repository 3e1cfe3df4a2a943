#include "polarcat/g2.hpp"

#include <algorithm>
#include <array>

namespace polarcat {

namespace {

QMat kron(const QMat& A, const QMat& B) {
  QMat r(A.rows * B.rows, A.cols * B.cols);
  for (int a = 0; a < A.rows; ++a)
    for (int c = 0; c < A.cols; ++c) {
      if (A(a, c) == 0) continue;
      for (int b = 0; b < B.rows; ++b)
        for (int d = 0; d < B.cols; ++d)
          r(a * B.rows + b, c * B.cols + d) = A(a, c) * B(b, d);
    }
  return r;
}

QMat inverse(const QMat& g) {
  int n = g.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = g(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug) < n)
    throw CatError(Err::SingularForm, "trace form is degenerate");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// swap on V (x) V and the cap-cup operator (identity form on Q^7)
QMat tau7() {
  QMat t(49, 49);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) t(a * 7 + b, b * 7 + a) = 1;
  return t;
}

QMat e7() {
  QMat e(49, 49);
  for (int a = 0; a < 7; ++a)
    for (int c = 0; c < 7; ++c) e(a * 7 + a, c * 7 + c) = 1;
  return e;
}

// partial transposes of an endomorphism of V (x) V (identity form):
// on the second factor ...
QMat ptrans2(const QMat& B) {
  QMat r(49, 49);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d)
          r(a * 7 + b, c * 7 + d) = B(a * 7 + d, c * 7 + b);
  return r;
}

// ... and on the first factor
QMat ptrans1(const QMat& B) {
  QMat r(49, 49);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c)
        for (int d = 0; d < 7; ++d)
          r(a * 7 + b, c * 7 + d) = B(c * 7 + b, a * 7 + d);
  return r;
}

int eigen_mult(const QMat& M, const Rational& lam) {
  QMat s = M;
  for (int i = 0; i < s.rows; ++i) s(i, i) -= lam;
  return s.rows - rank_of(s);
}

bool scalar_matrix(const QMat& M, Rational& value) {
  value = M(0, 0);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      if (M(i, j) != (i == j ? value : Rational(0))) return false;
  return true;
}

struct Perm3 {
  std::array<int, 3> p;
  int sign;
  int cycles;
};

std::vector<Perm3> sym3() {
  std::vector<Perm3> out;
  std::array<int, 3> p = {0, 1, 2};
  do {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (p[i] > p[j]) ++inv;
    std::array<bool, 3> seen = {false, false, false};
    int cyc = 0;
    for (int i = 0; i < 3; ++i) {
      if (seen[i]) continue;
      ++cyc;
      for (int j = i; !seen[j]; j = p[j]) seen[j] = true;
    }
    out.push_back({p, inv % 2 ? -1 : 1, cyc});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

Epsilon3 epsilon3() {
  Epsilon3 e;
  e.v.assign(343, Rational(0));
  const int tri[7][3] = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                         {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  const int sgn[7] = {1, -1, -1, -1, 1, -1, -1};
  for (int t = 0; t < 7; ++t) {
    std::array<int, 3> p = {0, 1, 2};
    do {
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (p[i] > p[j]) ++inv;
      int a = tri[t][p[0]], b = tri[t][p[1]], c = tri[t][p[2]];
      e.v[(a * 7 + b) * 7 + c] = Rational(sgn[t] * (inv % 2 ? -1 : 1));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return e;
}

G2Data g2_subalgebra() {
  Epsilon3 eps = epsilon3();
  // so_7 basis J_ab = E_ab - E_ba, a < b
  std::vector<QMat> so7;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      QMat J(7, 7);
      J(a, b) = 1;
      J(b, a) = -1;
      so7.push_back(J);
    }
  // sorted triples index Lambda^3
  std::vector<std::array<int, 3>> tri;
  std::map<std::array<int, 3>, int> tidx;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b)
      for (int c = b + 1; c < 7; ++c) {
        tidx[{a, b, c}] = (int)tri.size();
        tri.push_back({a, b, c});
      }
  // action of X on a wedge e_a ^ e_b ^ e_c, resorted with signs
  auto act = [&](const QMat& X) {
    QMat out((int)tri.size(), (int)tri.size());
    for (int t = 0; t < (int)tri.size(); ++t)
      for (int slot = 0; slot < 3; ++slot)
        for (int r = 0; r < 7; ++r) {
          const Rational& x = X(r, tri[t][slot]);
          if (x == 0) continue;
          std::array<int, 3> w = tri[t];
          w[slot] = r;
          if (w[0] == w[1] || w[0] == w[2] || w[1] == w[2]) continue;
          int sg = 1;
          for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
              if (w[i] > w[j]) {
                std::swap(w[i], w[j]);
                sg = -sg;
              }
          out(tidx[w], t) += sg * x;
        }
    return out;
  };
  std::vector<Rational> form((int)tri.size());
  for (int t = 0; t < (int)tri.size(); ++t)
    form[t] = eps.at(tri[t][0], tri[t][1], tri[t][2]);
  // kernel of X -> X . (3-form)
  QMat M((int)tri.size(), (int)so7.size());
  for (size_t k = 0; k < so7.size(); ++k) {
    QMat A = act(so7[k]);
    for (int t = 0; t < (int)tri.size(); ++t) {
      Rational s(0);
      for (int u = 0; u < (int)tri.size(); ++u)
        if (A(t, u) != 0) s += A(t, u) * form[u];
      M(t, (int)k) = s;
    }
  }
  QMat ker = nullspace(M);
  G2Data g;
  for (int c = 0; c < ker.cols; ++c) {
    QMat B(7, 7);
    for (int k = 0; k < ker.rows; ++k)
      if (ker(k, c) != 0) B = B + ker(k, c) * so7[k];
    g.basis.push_back(B);
  }
  int n = (int)g.basis.size();
  g.gram = QMat(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l)
      g.gram(k, l) = g.gram(l, k) = (g.basis[k] * g.basis[l]).trace();
  // normalization: Casimir for the plain trace form is a scalar on V;
  // rescale the form so that the scalar becomes 12
  QMat gi = inverse(g.gram);
  QMat cv(7, 7);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (gi(k, l) != 0) cv = cv + gi(k, l) * (g.basis[k] * g.basis[l]);
  Rational kappa;
  if (!scalar_matrix(cv, kappa) || kappa == 0)
    throw CatError(Err::SingularForm, "Casimir is not scalar on V");
  g.s = Rational(12) / kappa;
  return g;
}

std::pair<QMat, QMat> upsilon() {
  Epsilon3 eps = epsilon3();
  QMat up(49, 7), uhat(7, 49);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        up(a * 7 + b, c) = eps.at(a, b, c);
        uhat(a, b * 7 + c) = eps.at(a, b, c);
      }
  return {up, uhat};
}

bool G2Report::all() const {
  return dim14 && casimir_value && casimir_spectrum && tempered_spectrum &&
         upsilon_inverse && upsilon_quasi && quartic && spectral &&
         lemma_reduction && lemma_vee && equivariance && projector &&
         norm_contraction && loop_scalar;
}

G2Report verify_g2_suite() {
  G2Report rep;
  G2Data g = g2_subalgebra();
  int n = (int)g.basis.size();
  rep.dim14 = (n == 14);

  QMat gi = inverse(g.gram);
  QMat I7 = QMat::identity(7), I49 = QMat::identity(49);
  // Casimir on V with the normalized form
  QMat cv(7, 7);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (gi(k, l) != 0) cv = cv + (g.s * gi(k, l)) * (g.basis[k] * g.basis[l]);
  rep.casimir_value = (cv == Rational(12) * I7);

  // tempered Casimir on V (x) V and the full Casimir C2 = 24 + 2H
  QMat H(49, 49);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (gi(k, l) != 0)
        H = H + (g.s * gi(k, l)) * kron(g.basis[k], g.basis[l]);
  QMat C2 = Rational(24) * I49 + Rational(2) * H;

  rep.tempered_spectrum =
      eigen_mult(H, Rational(-12)) == 1 && eigen_mult(H, Rational(-6)) == 7 &&
      eigen_mult(H, Rational(0)) == 14 && eigen_mult(H, Rational(2)) == 27;
  rep.casimir_spectrum =
      eigen_mult(C2, Rational(0)) == 1 && eigen_mult(C2, Rational(12)) == 7 &&
      eigen_mult(C2, Rational(24)) == 14 && eigen_mult(C2, Rational(28)) == 27;

  auto [up, uhat] = upsilon();
  QMat K = up * uhat;
  rep.upsilon_inverse = (uhat * up == Rational(6) * I7);
  rep.upsilon_quasi = (K * K == Rational(6) * K);

  QMat X = tau7(), E = e7();
  {
    QMat q = H;
    QMat f1 = H, f2 = H, f3 = H;
    for (int i = 0; i < 49; ++i) {
      f1(i, i) -= 2;
      f2(i, i) += 6;
      f3(i, i) += 12;
    }
    rep.quartic = (q * f1 * f2 * f3).is_zero();
  }
  rep.spectral = (H - X + Rational(2) * E - I49 + K).is_zero();
  rep.lemma_reduction =
      (K - X * ptrans2(K) + Rational(2) * X - E - I49).is_zero();
  // Partial transpose of the projector relation.  K is symmetric, so the
  // transpose in either tensor factor gives the same matrix.
  rep.lemma_vee = (ptrans1(K) + K + X + E - Rational(2) * I49).is_zero();

  rep.equivariance = true;
  for (int k = 0; k < n; ++k) {
    QMat rho2 = kron(g.basis[k], I7) + kron(I7, g.basis[k]);
    if (!(rho2 * H == H * rho2) || !(rho2 * up == up * g.basis[k]))
      rep.equivariance = false;
  }

  QMat P = Rational(1, 6) * K;
  rep.projector =
      (P * P == P) && (X * P == Rational(-1) * P) && (E * P).is_zero();

  // double contraction of the 3-form with its dual-oriented copy: 6 Cech(1);
  // with the 1/sqrt(2) coupon normalization this is the stated value 3
  {
    Epsilon3 eps = epsilon3();
    QMat N(7, 7);
    for (int a = 0; a < 7; ++a)
      for (int f = 0; f < 7; ++f) {
        Rational s(0);
        for (int b = 0; b < 7; ++b)
          for (int c = 0; c < 7; ++c) s += eps.at(a, b, c) * eps.at(f, b, c);
        N(a, f) = s;
      }
    rep.norm_contraction = (N == Rational(2 * 3) * I7);
  }
  // loop scalar: sum_i omega(e_i, e_i) with the identity form
  {
    Rational s(0);
    for (int i = 0; i < 7; ++i) s += I7(i, i);
    rep.loop_scalar = (s == 7);
  }
  return rep;
}

CouponReport enhanced_coupon_check() {
  CouponReport rep;
  auto perms = sym3();
  // Levi-Civita on Q^3 as a vector in V^(x)3
  auto lc = [&](int i, int j, int k) -> int {
    if (i == j || j == k || i == k) return 0;
    int inv = (i > j) + (i > k) + (j > k);
    return inv % 2 ? -1 : 1;
  };
  std::vector<Rational> delta(27);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) delta[(i * 3 + j) * 3 + k] = lc(i, j, k);

  // signed symmetrizer Sigma(3) and the place-permutation operators
  auto pmat = [&](const Perm3& s) {
    QMat m(27, 27);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          int in[3] = {i, j, k}, out[3];
          for (int t = 0; t < 3; ++t) out[s.p[t]] = in[t];
          m((out[0] * 3 + out[1]) * 3 + out[2], (i * 3 + j) * 3 + k) = 1;
        }
    return m;
  };
  QMat sigma(27, 27);
  rep.skew = true;
  for (auto& s : perms) {
    QMat P = pmat(s);
    sigma = sigma + Rational(s.sign) * P;
    // sigma Delta = sgn(sigma) Delta
    for (int x = 0; x < 27; ++x) {
      Rational v(0);
      for (int y = 0; y < 27; ++y)
        if (P(x, y) != 0) v += P(x, y) * delta[y];
      if (v != Rational(s.sign) * delta[x]) rep.skew = false;
    }
  }

  // Delta^* by nested caps reverses the legs; M = Delta Delta^*
  QMat M(27, 27);
  for (int a = 0; a < 27; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          M(a, (i * 3 + j) * 3 + k) = delta[a] * delta[(k * 3 + j) * 3 + i];
  // solve the one-parameter equation Sigma(3) = u M
  rep.normalization = 0;
  for (int x = 0; x < 27 * 27 && rep.normalization == 0; ++x)
    if (M.a[x] != 0) rep.normalization = sigma.a[x] / M.a[x];
  rep.relation = (sigma == rep.normalization * M);

  // closure of Sigma(3) in the Brauer algebra: delta^{cycles} per term
  Poly closure;
  for (auto& s : perms) {
    Poly t(Rational(s.sign));
    for (int c = 0; c < s.cycles; ++c) t *= Poly::delta();
    closure += t;
  }
  Poly expect = Poly::delta() * (Poly::delta() - Poly(1)) *
                (Poly::delta() - Poly(2));
  rep.closure_poly = (closure == expect);
  Rational at3 = closure.specialize({{"delta", Rational(3)}}).constant_value();
  rep.delta_consistent = (at3 == sigma.trace() && at3 == 6);
  return rep;
}

}  // namespace polarcat
