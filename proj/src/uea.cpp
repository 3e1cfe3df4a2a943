#include "polarcat/uea.hpp"

#include <algorithm>
#include <sstream>

namespace polarcat {

namespace {

QMat comm(const QMat& a, const QMat& b) { return a * b - b * a; }

QMat inverse(const QMat& g) {
  int n = g.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = g(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug) < n)
    throw CatError(Err::SingularForm, "bilinear form is degenerate");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Inverse of the invariant form B(x,y) = (1/2) str_V(xy).
QMat dual_form(const LieData& L) {
  int n = L.n(), d = L.d();
  QMat G(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = k; l < n; ++l) {
      QMat p = L.rep[k] * L.rep[l];
      Rational s(0);
      for (int i = 0; i < d; ++i)
        s += L.rep_par[i] ? -p(i, i) : p(i, i);
      G(k, l) = G(l, k) = s / 2;
    }
  return inverse(G);
}

// Right multiplication by single generators with straightening to PBW order,
// memoized per multiplication.
struct Straightener {
  const LieData& L;
  std::map<std::pair<std::vector<int>, int>, PBWElement> memo;

  PBWElement mono_gen(const std::vector<int>& e, int g) {
    auto key = std::make_pair(e, g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int j = -1;
    for (int k = L.n() - 1; k > g; --k)
      if (e[k] > 0) {
        j = k;
        break;
      }
    PBWElement out = PBWElement::zero(L);
    if (j < 0) {
      auto m = e;
      ++m[g];
      out.add(m, 1);
    } else {
      auto ep = e;
      --ep[j];
      // X_e X_g = (X_e' X_g) X_j + sum_k c[j][g][k] X_e' X_k
      out = elem_gen(mono_gen(ep, g), j);
      for (int k = 0; k < L.n(); ++k) {
        const Rational& cc = L.c[j][g][k];
        if (cc == 0) continue;
        PBWElement t = mono_gen(ep, k);
        for (auto& [m2, c2] : t.terms) out.add(m2, cc * c2);
      }
    }
    memo.emplace(key, out);
    return out;
  }

  PBWElement elem_gen(const PBWElement& a, int g) {
    PBWElement r = PBWElement::zero(L);
    for (auto& [m, c] : a.terms) {
      PBWElement t = mono_gen(m, g);
      for (auto& [m2, c2] : t.terms) r.add(m2, c * c2);
    }
    return r;
  }
};

PBWElement bracket(const PBWElement& a, const PBWElement& b) {
  return pbw_mul(a, b) - pbw_mul(b, a);
}

// so_m boundary size from the basis count m(m-1)/2.
int so_size(const LieData& L) {
  for (int m = 2; m <= 2 * L.n() + 2; ++m)
    if (m * (m - 1) / 2 == L.n() && L.d() == m) return m;
  throw CatError(Err::UnsupportedParameter, "not an so_m basis");
}

// Signed generator X_{ij} of so_m (antisymmetric in the indices).  The sign
// convention is X_{ij} = E_{ji} - E_{ij} = -J_{ij}: even-length invariants
// are insensitive to it, and it is the convention under which the odd
// closure scalars push forward with the stated coefficients.
PBWElement so_gen(const LieData& L, int m, int i, int j) {
  if (i == j) return PBWElement::zero(L);
  int a = std::min(i, j), b = std::max(i, j);
  int idx = 0;
  for (int p = 0; p < a; ++p) idx += m - 1 - p;
  idx += b - a - 1;
  PBWElement g = PBWElement::gen(L, idx);
  return i < j ? Rational(-1) * g : g;
}

// Rank-1 split data: a diagonal Cartan h with [h,e] = alpha e, [h,f] =
// -alpha f, [e,f] = beta h.
struct Sl2Triple {
  int h = -1, e = -1, f = -1;
  Rational alpha, beta;
};

Sl2Triple find_triple(const LieData& L) {
  if (L.n() != 3)
    throw CatError(Err::UnsupportedParameter,
                   "characteristic identities need a rank-1 realization");
  Sl2Triple t;
  for (int i = 0; i < 3 && t.h < 0; ++i) {
    bool diag = true;
    for (int r = 0; r < L.d() && diag; ++r)
      for (int c = 0; c < L.d(); ++c)
        if (r != c && L.rep[i](r, c) != 0) {
          diag = false;
          break;
        }
    if (diag && !L.rep[i].is_zero()) t.h = i;
  }
  if (t.h < 0)
    throw CatError(Err::UnsupportedParameter, "no diagonal Cartan element");
  for (int j = 0; j < 3; ++j) {
    if (j == t.h) continue;
    for (int k = 0; k < 3; ++k)
      if (k != j && L.c[t.h][j][k] != 0)
        throw CatError(Err::UnsupportedParameter, "basis not weight-split");
    Rational a = L.c[t.h][j][j];
    if (a > 0) {
      t.e = j;
      t.alpha = a;
    } else if (a < 0) {
      t.f = j;
    }
  }
  if (t.e < 0 || t.f < 0 || L.c[t.h][t.f][t.f] != -t.alpha)
    throw CatError(Err::UnsupportedParameter, "no sl2 triple in basis");
  for (int k = 0; k < 3; ++k)
    if (k != t.h && L.c[t.e][t.f][k] != 0)
      throw CatError(Err::UnsupportedParameter, "no sl2 triple in basis");
  t.beta = L.c[t.e][t.f][t.h];
  if (t.beta == 0)
    throw CatError(Err::UnsupportedParameter, "degenerate sl2 triple");
  return t;
}

// Highest-weight module matrices on the window m_0..m_K.  For integral
// dominant lambda with K = 2*lambda/alpha this is the finite module L_lambda;
// otherwise it is a truncated Verma module and only entries away from the
// k = K boundary are exact.
std::vector<QMat> hw_module(const LieData& L, const Sl2Triple& t,
                            const Rational& lambda, int K) {
  QMat h(K + 1, K + 1), e(K + 1, K + 1), f(K + 1, K + 1);
  Rational phi(0);
  for (int k = 0; k <= K; ++k) {
    h(k, k) = lambda - k * t.alpha;
    if (k < K) f(k + 1, k) = 1;
    if (k > 0) {
      phi += t.beta * (lambda - (k - 1) * t.alpha);
      e(k - 1, k) = phi;
    }
  }
  std::vector<QMat> mats(3);
  mats[t.h] = h;
  mats[t.e] = e;
  mats[t.f] = f;
  return mats;
}

}  // namespace

LieData lie_from_rep(const std::vector<std::string>& labels,
                     const std::vector<QMat>& rep,
                     const std::vector<int>& rep_par) {
  LieData L;
  L.labels = labels;
  L.rep = rep;
  L.rep_par = rep_par;
  int n = L.n(), d = L.d();
  if ((int)rep.size() != n || (int)rep_par.size() != d)
    throw CatError(Err::DimensionMismatch, "lie_from_rep: size mismatch");
  QMat flat(d * d, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) flat(i * d + j, k) = rep[k](i, j);
  L.c.assign(n, std::vector<std::vector<Rational>>(
                    n, std::vector<Rational>(n, Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QMat br = comm(rep[i], rep[j]);
      std::vector<Rational> b(d * d);
      for (int r = 0; r < d; ++r)
        for (int cc = 0; cc < d; ++cc) b[r * d + cc] = br(r, cc);
      auto x = solve_unique(flat, b);
      if (!x)
        throw CatError(Err::UnsupportedParameter,
                       "bracket leaves the span of the basis");
      for (int k = 0; k < n; ++k) {
        L.c[i][j][k] = (*x)[k];
        L.c[j][i][k] = -(*x)[k];
      }
    }
  // Jacobi identity on structure constants
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Rational s(0);
          for (int m = 0; m < n; ++m)
            s += L.c[i][j][m] * L.c[m][k][l] + L.c[j][k][m] * L.c[m][i][l] +
                 L.c[k][i][m] * L.c[m][j][l];
          if (s != 0)
            throw CatError(Err::UnsupportedParameter, "Jacobi identity fails");
        }
  return L;
}

LieData sl2_data() {
  QMat T(2, 2), X(2, 2), Y(2, 2);
  T(0, 0) = 1;
  T(1, 1) = -1;
  X(0, 1) = 1;
  Y(1, 0) = 1;
  return lie_from_rep({"T", "X", "Y"}, {T, X, Y}, {1, 1});
}

LieData so_data(int m) {
  std::vector<std::string> labels;
  std::vector<QMat> rep;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      QMat J(m, m);
      J(a, b) = 1;
      J(b, a) = -1;
      labels.push_back("X" + std::to_string(a) + std::to_string(b));
      rep.push_back(J);
    }
  return lie_from_rep(labels, rep, std::vector<int>(m, 0));
}

LieData so_split_data(int m) {
  // form g = antidiagonal ones; J(a,b) = E_{ab} - E_{ba} with lowered index,
  // E_{ab} = sum_c g_{ac} E^c_b
  std::vector<std::string> labels;
  std::vector<QMat> rep;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      QMat J(m, m);
      J(m - 1 - a, b) += 1;
      J(m - 1 - b, a) -= 1;
      labels.push_back("J" + std::to_string(a) + std::to_string(b));
      rep.push_back(J);
    }
  return lie_from_rep(labels, rep, std::vector<int>(m, 0));
}

PBWElement PBWElement::one(const LieData& L, const Rational& c) {
  PBWElement r = zero(L);
  r.add(std::vector<int>(L.n(), 0), c);
  return r;
}

PBWElement PBWElement::gen(const LieData& L, int i) {
  PBWElement r = zero(L);
  std::vector<int> m(L.n(), 0);
  m[i] = 1;
  r.add(m, 1);
  return r;
}

void PBWElement::add(const std::vector<int>& mono, const Rational& c) {
  if (c == 0) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms[mono] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

PBWElement operator+(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  for (auto& [m, c] : b.terms) r.add(m, c);
  return r;
}

PBWElement operator-(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  for (auto& [m, c] : b.terms) r.add(m, -c);
  return r;
}

PBWElement operator*(const Rational& c, const PBWElement& a) {
  PBWElement r = PBWElement::zero(*a.lie);
  if (c == 0) return r;
  r.lie = a.lie;
  for (auto& [m, v] : a.terms) r.terms[m] = c * v;
  return r;
}

bool PBWElement::operator==(const PBWElement& o) const {
  return (*this - o).is_zero();
}

std::string PBWElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first) out << " + ";
    first = false;
    out << rat_str(c);
    for (int k = 0; k < (int)m.size(); ++k) {
      if (m[k] == 0) continue;
      out << "*" << lie->labels[k];
      if (m[k] > 1) out << "^" << m[k];
    }
  }
  return out.str();
}

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
  if (a.lie != b.lie)
    throw CatError(Err::DimensionMismatch, "pbw_mul: different algebras");
  const LieData& L = *a.lie;
  Straightener st{L, {}};
  PBWElement r = PBWElement::zero(L);
  for (auto& [mb, cb] : b.terms) {
    PBWElement cur = a;
    for (int k = 0; k < L.n(); ++k)
      for (int t = 0; t < mb[k]; ++t) cur = st.elem_gen(cur, k);
    for (auto& [m, c] : cur.terms) r.add(m, cb * c);
  }
  return r;
}

QMat pbw_eval(const PBWElement& a, const std::vector<QMat>& mats) {
  int dim = mats[0].rows;
  QMat r(dim, dim);
  for (auto& [m, c] : a.terms) {
    QMat p = QMat::identity(dim);
    for (int k = 0; k < (int)m.size(); ++k)
      for (int t = 0; t < m[k]; ++t) p = p * mats[k];
    r = r + c * p;
  }
  return r;
}

PBWElement casimir(const LieData& L) {
  QMat Ginv = dual_form(L);
  int n = L.n();
  PBWElement C = PBWElement::zero(L);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (Ginv(k, l) == 0) continue;
      PBWElement t = pbw_mul(PBWElement::gen(L, k), PBWElement::gen(L, l));
      C = C + Ginv(k, l) * t;
    }
  for (int i = 0; i < n; ++i)
    if (!bracket(C, PBWElement::gen(L, i)).is_zero())
      throw CatError(Err::SingularForm, "casimir is not central");
  return C;
}

PBWElement gelfand(int l, const LieData& so_m) {
  int m = so_size(so_m);
  PBWElement r = PBWElement::zero(so_m);
  std::vector<int> idx(l, 0);
  for (;;) {
    bool skip = false;
    for (int t = 0; t < l; ++t)
      if (idx[t] == idx[(t + 1) % l]) {
        skip = true;
        break;
      }
    if (!skip) {
      PBWElement p = so_gen(so_m, m, idx[0], idx[1 % l]);
      for (int t = 1; t < l; ++t)
        p = pbw_mul(p, so_gen(so_m, m, idx[t], idx[(t + 1) % l]));
      r = r + p;
    }
    int t = l - 1;
    while (t >= 0 && idx[t] == m - 1) idx[t--] = 0;
    if (t < 0) break;
    ++idx[t];
  }
  return r;
}

bool UeaMatrix::is_zero() const {
  for (auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

UeaMatrix operator+(const UeaMatrix& a, const UeaMatrix& b) {
  if (a.d != b.d)
    throw CatError(Err::DimensionMismatch, "UeaMatrix size mismatch");
  UeaMatrix r = a;
  for (int i = 0; i < a.d * a.d; ++i) r.e[i] = r.e[i] + b.e[i];
  return r;
}

UeaMatrix operator*(const UeaMatrix& a, const UeaMatrix& b) {
  if (a.d != b.d)
    throw CatError(Err::DimensionMismatch, "UeaMatrix size mismatch");
  UeaMatrix r;
  r.d = a.d;
  r.e.assign((size_t)a.d * a.d, PBWElement::zero(*a.e[0].lie));
  for (int i = 0; i < a.d; ++i)
    for (int k = 0; k < a.d; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < a.d; ++j)
        if (!b.at(k, j).is_zero())
          r.at(i, j) = r.at(i, j) + pbw_mul(a.at(i, k), b.at(k, j));
    }
  return r;
}

UeaMatrix operator*(const PBWElement& c, const UeaMatrix& a) {
  UeaMatrix r = a;
  for (auto& x : r.e) x = pbw_mul(c, x);
  return r;
}

UeaMatrix uea_identity(const LieData& L) {
  UeaMatrix r;
  r.d = L.d();
  r.e.assign((size_t)r.d * r.d, PBWElement::zero(L));
  for (int i = 0; i < r.d; ++i) r.at(i, i) = PBWElement::one(L);
  return r;
}

UeaMatrix e_matrix(const LieData& L) {
  QMat Ginv = dual_form(L);
  int n = L.n(), d = L.d();
  UeaMatrix E;
  E.d = d;
  E.e.assign((size_t)d * d, PBWElement::zero(L));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (Ginv(k, l) == 0) continue;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          const Rational& v = L.rep[l](r, c);
          if (v != 0)
            E.at(r, c) = E.at(r, c) + (Ginv(k, l) * v) * PBWElement::gen(L, k);
        }
    }
  return E;
}

PBWElement uea_str(const LieData& L, const UeaMatrix& a) {
  PBWElement r = PBWElement::zero(L);
  for (int i = 0; i < a.d; ++i)
    r = r + (L.rep_par[i] ? Rational(-1) : Rational(1)) * a.at(i, i);
  return r;
}

QMat eval_matrix(const UeaMatrix& a, const std::vector<QMat>& mats) {
  int dim = mats[0].rows, d = a.d;
  QMat r(dim * d, dim * d);
  for (int rr = 0; rr < d; ++rr)
    for (int cc = 0; cc < d; ++cc) {
      QMat blk = pbw_eval(a.at(rr, cc), mats);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) r(i * d + rr, j * d + cc) = blk(i, j);
    }
  return r;
}

CharIdentity char_identity(const LieData& L,
                           const std::vector<Rational>& lambda_grid) {
  Sl2Triple t = find_triple(L);
  int d = L.d();
  // weight offsets of the defining space (h eigenvalues), as Verma steps
  std::vector<Rational> w(d);
  Rational wmin;
  for (int j = 0; j < d; ++j) {
    w[j] = L.rep[t.h](j, j);
    if (j == 0 || w[j] < wmin) wmin = w[j];
  }
  // m_k (x) v_j has weight (lambda - k alpha) + w_j, so within one weight
  // block a higher defining weight pairs with a deeper Verma level
  std::vector<int> off(d);
  int omax = 0;
  for (int j = 0; j < d; ++j) {
    Rational q = (w[j] - wmin) / t.alpha;
    if (q.get_den() != 1)
      throw CatError(Err::UnsupportedParameter,
                     "defining weights are not aligned with the root");
    off[j] = (int)q.get_num().get_si();
    omax = std::max(omax, off[j]);
    for (int i = 0; i < j; ++i)
      if (w[i] == w[j])
        throw CatError(Err::UnsupportedParameter,
                       "repeated weight on the defining space");
  }
  const int c0 = 2, K = omax + c0 + 4;
  PBWElement C = casimir(L);
  UeaMatrix E = e_matrix(L);

  // P_i(lambda): characteristic polynomial of the E action restricted to one
  // interior weight block of (truncated Verma) x V; z(lambda): Casimir scalar.
  std::vector<std::vector<Rational>> P(lambda_grid.size());
  std::vector<Rational> zval(lambda_grid.size());
  for (size_t g = 0; g < lambda_grid.size(); ++g) {
    auto mats = hw_module(L, t, lambda_grid[g], K);
    zval[g] = pbw_eval(C, mats)(0, 0);
    QMat A = eval_matrix(E, mats);
    QMat B(d, d);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        B(p, q) = A((c0 + off[p]) * d + p, (c0 + off[q]) * d + q);
    // Faddeev-LeVerrier: x^d + P_1 x^{d-1} + ... + P_d
    QMat M = B;
    std::vector<Rational> coef;
    for (int k = 1; k <= d; ++k) {
      if (k > 1) {
        for (int i = 0; i < d; ++i) M(i, i) += coef.back();
        M = B * M;
      }
      coef.push_back(-M.trace() / k);
    }
    P[g] = coef;
  }

  // Q_i = polynomial in C matched against P_i over the grid
  CharIdentity out;
  std::vector<PBWElement> cpow{PBWElement::one(L)};
  for (int i = 1; i <= d; ++i) {
    int cols = i + 1;  // 1, z, ..., z^i
    QMat V((int)lambda_grid.size(), cols);
    std::vector<Rational> rhs(lambda_grid.size());
    for (size_t g = 0; g < lambda_grid.size(); ++g) {
      Rational p(1);
      for (int j = 0; j < cols; ++j) {
        V((int)g, j) = p;
        p *= zval[g];
      }
      rhs[g] = P[g][i - 1];
    }
    auto a = solve_unique(V, rhs);
    if (!a)
      throw CatError(Err::UnsupportedParameter,
                     "characteristic coefficient is not a Casimir polynomial");
    while ((int)cpow.size() < cols)
      cpow.push_back(pbw_mul(cpow.back(), C));
    PBWElement Qi = PBWElement::zero(L);
    for (int j = 0; j < cols; ++j) Qi = Qi + (*a)[j] * cpow[j];
    out.Q.push_back(Qi);
  }

  // entrywise verification of E^d + sum Q_i E^{d-i} = 0 in PBW form
  UeaMatrix acc = uea_identity(L);
  std::vector<UeaMatrix> Epow{acc};
  for (int k = 1; k <= d; ++k) Epow.push_back(Epow.back() * E);
  UeaMatrix total = Epow[d];
  for (int i = 1; i <= d; ++i) total = total + out.Q[i - 1] * Epow[d - i];
  out.entrywise_zero = total.is_zero();
  return out;
}

std::vector<QMat> fd_module(const LieData& L, const Rational& lambda) {
  Sl2Triple t = find_triple(L);
  Rational q = 2 * lambda / t.alpha;
  if (q.get_den() != 1 || q < 0)
    throw CatError(Err::UnsupportedParameter,
                   "highest weight is not integral dominant");
  int s = (int)q.get_num().get_si();
  return hw_module(L, t, lambda, s);
}

CentreReport centre_surjectivity_check(const LieData& so_m, int degree_bound) {
  if (degree_bound < 4)
    throw CatError(Err::UnsupportedParameter, "degree bound below 4");
  PBWElement I2 = gelfand(2, so_m), I4 = gelfand(4, so_m);
  CentreReport rep;
  rep.i2_central = rep.i4_central = true;
  for (int i = 0; i < so_m.n(); ++i) {
    PBWElement g = PBWElement::gen(so_m, i);
    if (!bracket(I2, g).is_zero()) rep.i2_central = false;
    if (!bracket(I4, g).is_zero()) rep.i4_central = false;
  }
  rep.commute = bracket(I2, I4).is_zero();
  std::vector<PBWElement> fam{PBWElement::one(so_m), I2, pbw_mul(I2, I2), I4};
  std::map<std::vector<int>, int> cols;
  for (auto& f : fam)
    for (auto& [m, c] : f.terms)
      if (!cols.count(m)) {
        int k = (int)cols.size();
        cols[m] = k;
      }
  QMat coeffs((int)fam.size(), (int)cols.size());
  for (size_t i = 0; i < fam.size(); ++i)
    for (auto& [m, c] : fam[i].terms) coeffs((int)i, cols[m]) = c;
  rep.rank = rank_of(coeffs);
  return rep;
}

}  // namespace polarcat
