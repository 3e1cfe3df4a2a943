#include "polarcat/superlin.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <set>

namespace polarcat {

namespace {

QMat invert(const QMat& a) {
  int n = a.rows;
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug) != n)
    throw CatError(Err::SingularForm, "form is singular");
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RepCtx::Triplet> to_triplets(const QMat& m) {
  std::vector<RepCtx::Triplet> t;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != 0) t.push_back({i, j, m(i, j)});
  return t;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

OspData osp_build(int m, int n) {
  OspData o;
  o.m = m;
  o.n = n;
  o.V = GradedSpace::mn(m, n);
  int d = o.V.dim();
  if (d == 0) throw CatError(Err::EmptySpace, "osp(0|0) has no space");
  // form: identity on the even block, standard symplectic pairs on the odd
  o.g = QMat(d, d);
  for (int i = 0; i < m; ++i) o.g(i, i) = 1;
  for (int t = 0; t < n; ++t) {
    o.g(m + 2 * t, m + 2 * t + 1) = 1;
    o.g(m + 2 * t + 1, m + 2 * t) = -1;
  }
  o.ginv = invert(o.g);

  // E_{ab} = sum_c g_{ac} E^c_b acts by e^x -> delta_{xb} sum_c g_{ac} e^c
  auto E = [&](int a, int b) {
    QMat r(d, d);
    for (int c = 0; c < d; ++c) r(c, b) = o.g(a, c);
    return r;
  };
  auto par = [&](int x) { return o.V.par[x]; };
  auto J = [&](int a, int b) {
    QMat r = E(a, b);
    QMat s = E(b, a);
    Rational sign = (par(a) && par(b)) ? 1 : -1;  // -(-1)^{|a||b|}
    return r + sign * s;
  };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      o.basis.push_back(J(a, b));
      o.basis_par.push_back(0);
    }
  for (int a = 0; a < m; ++a)
    for (int b = m; b < d; ++b) {
      o.basis.push_back(J(a, b));
      o.basis_par.push_back(1);
    }
  for (int a = m; a < d; ++a)
    for (int b = a; b < d; ++b) {
      o.basis.push_back(J(a, b));
      o.basis_par.push_back(0);
    }

  // Solve for t with (mu ⊗ mu)(t) = tau - e on V ⊗ V.
  QMat rhs = tau(o);
  auto [cap, cup] = cap_cup(o);
  rhs = rhs - cup * cap;
  int nb = (int)o.basis.size();
  QMat sys(d * d * d * d, nb * nb);
  for (int k = 0; k < nb; ++k)
    for (int l = 0; l < nb; ++l) {
      QMat kr = super_kron(o.basis[k], o.basis[l], o.V.par, o.basis_par[l]);
      for (int i = 0; i < kr.rows; ++i)
        for (int j = 0; j < kr.cols; ++j)
          if (kr(i, j) != 0) sys(i * kr.cols + j, k * nb + l) = kr(i, j);
    }
  std::vector<Rational> b(d * d * d * d, Rational(0));
  for (int i = 0; i < rhs.rows; ++i)
    for (int j = 0; j < rhs.cols; ++j) b[(size_t)i * rhs.cols + j] = rhs(i, j);
  auto sol = solve_unique(sys, b);
  if (!sol)
    throw CatError(Err::SolveUnderdetermined,
                   "tau - e is not in the image of the enveloping action");
  for (int k = 0; k < nb; ++k)
    for (int l = 0; l < nb; ++l) {
      Rational c = (*sol)[(size_t)k * nb + l];
      if (c != 0) o.tpairs.push_back({k, l, c});
    }
  o.casimir_v = QMat(d, d);
  for (auto& tp : o.tpairs)
    o.casimir_v = o.casimir_v + tp.coeff * (o.basis[tp.k] * o.basis[tp.l]);
  return o;
}

QMat tau(const OspData& o) {
  int d = o.dim();
  QMat t(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      t(b * d + a, a * d + b) = (o.V.par[a] && o.V.par[b]) ? -1 : 1;
  return t;
}

std::pair<QMat, QMat> cap_cup(const OspData& o) {
  int d = o.dim();
  QMat cap(1, d * d), cup(d * d, 1);
  // omega(e^a, e^b) is the entry of the inverse matrix; the coevaluation
  // vector sum e^a ⊗ e_a expands through the lower matrix.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      cap(0, a * d + b) = o.ginv(a, b);
      cup(a * d + b, 0) = o.g(a, b);
    }
  return {cap, cup};
}

QMat tempered_casimir(const OspData& o, const std::vector<QMat>& mu_left,
                      const std::vector<int>& par_left,
                      const std::vector<QMat>& mu_right) {
  int dl = mu_left.empty() ? 0 : mu_left[0].rows;
  int dr = mu_right.empty() ? 0 : mu_right[0].rows;
  QMat out(dl * dr, dl * dr);
  for (auto& tp : o.tpairs)
    out = out + tp.coeff * super_kron(mu_left[tp.k], mu_right[tp.l], par_left,
                                      o.basis_par[tp.l]);
  return out;
}

TruncVerma trunc_verma(const Rational& lambda, int cutoff) {
  if (cutoff < 0) throw CatError(Err::IndexOutOfRange, "cutoff must be >= 0");
  TruncVerma v;
  v.lambda = lambda;
  v.cutoff = cutoff;
  int n = cutoff + 1;
  v.T = QMat(n, n);
  v.X = QMat(n, n);
  v.Y = QMat(n, n);
  for (int k = 0; k <= cutoff; ++k) {
    v.T(k, k) = lambda - 2 * k;
    if (k >= 1) v.X(k - 1, k) = Rational(k) * (lambda - (k - 1));
    if (k + 1 <= cutoff) v.Y(k + 1, k) = 1;
  }
  return v;
}

namespace {

// Assemble hpairs from the module action matrices and the t expansion.
void fill_hpairs(RepCtx& ctx, const std::vector<QMat>& mu_m,
                 const std::vector<std::vector<char>>& bad_m) {
  for (auto& tp : ctx.osp.tpairs) {
    RepCtx::HPair hp;
    hp.A = to_triplets(tp.coeff * mu_m[tp.k]);
    hp.bad_a = bad_m[tp.k];
    hp.B = to_triplets(ctx.osp.basis[tp.l]);
    hp.par_b = ctx.osp.basis_par[tp.l];
    ctx.hpairs.push_back(std::move(hp));
  }
}

}  // namespace

RepCtx osp_rep_ctx(int m, int n) {
  RepCtx ctx;
  ctx.osp = osp_build(m, n);
  ctx.dim_m = ctx.osp.dim();
  ctx.par_m = ctx.osp.V.par;
  std::vector<std::vector<char>> bad(ctx.osp.basis.size(),
                                     std::vector<char>(ctx.dim_m, 0));
  fill_hpairs(ctx, ctx.osp.basis, bad);
  ctx.bind["delta"] = ctx.osp.sdim();
  return ctx;
}

RepCtx trivial_rep_ctx(int m, int n) {
  RepCtx ctx;
  ctx.osp = osp_build(m, n);
  ctx.dim_m = 1;
  ctx.par_m = {0};
  ctx.bind["delta"] = ctx.osp.sdim();
  return ctx;
}

RepCtx verma_rep_ctx(const Rational& lambda, int cutoff) {
  RepCtx ctx;
  ctx.osp = osp_build(0, 1);  // osp(0|2)
  ctx.is_verma = true;
  ctx.lambda = lambda;
  ctx.cutoff = cutoff;
  ctx.dim_m = cutoff + 1;
  ctx.par_m.assign(cutoff + 1, 0);
  ctx.bind["delta"] = ctx.osp.sdim();  // -2
  ctx.bind["lambda"] = lambda;

  // Bridge: express each basis element in the sl_2 triple of the defining
  // 2-dimensional action, then replay the combination on the Verma matrices.
  QMat T2(2, 2), X2(2, 2), Y2(2, 2);
  T2(0, 0) = 1;
  T2(1, 1) = -1;
  X2(0, 1) = 1;
  Y2(1, 0) = 1;
  TruncVerma vm = trunc_verma(lambda, cutoff);
  std::vector<QMat> mu_m;
  std::vector<std::vector<char>> bad_m;
  for (auto& J : ctx.osp.basis) {
    QMat sys(4, 3);
    std::vector<Rational> b(4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        sys(i * 2 + j, 0) = T2(i, j);
        sys(i * 2 + j, 1) = X2(i, j);
        sys(i * 2 + j, 2) = Y2(i, j);
        b[i * 2 + j] = J(i, j);
      }
    auto sol = solve_unique(sys, b);
    if (!sol)
      throw CatError(Err::DimensionMismatch,
                     "basis element outside the sl2 span");
    QMat act = (*sol)[0] * vm.T + (*sol)[1] * vm.X + (*sol)[2] * vm.Y;
    std::vector<char> bad(cutoff + 1, 0);
    if ((*sol)[2] != 0) bad[cutoff] = 1;  // Y pushes m_K out of the window
    mu_m.push_back(act);
    bad_m.push_back(bad);
  }
  fill_hpairs(ctx, mu_m, bad_m);
  return ctx;
}

std::vector<Rational> apply_word(RepCtx& ctx, const PolarWord& w,
                                 const std::vector<Rational>& vec) {
  int d = ctx.osp.dim();
  int rank = w.r;
  std::vector<Rational> cur = vec;
  if ((long)cur.size() != (long)ctx.dim_m * ipow(d, rank))
    throw CatError(Err::DimensionMismatch, "apply_word: wrong vector size");
  for (const PolarGen& g : w.seq) {
    if (g.src != rank)
      throw CatError(Err::RankMismatch, "word rank bookkeeping broken");
    switch (g.k) {
      case PGen::S: {
        long stride = ipow(d, rank - 1 - g.i);  // slot g.i (0-based)
        long block = d * d * stride;
        std::vector<Rational> out(cur.size(), Rational(0));
        for (long hi = 0; hi * block < (long)cur.size(); ++hi)
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
              Rational sign =
                  (ctx.osp.V.par[a] && ctx.osp.V.par[b]) ? -1 : 1;
              long src = hi * block + ((long)a * d + b) * stride;
              long dst = hi * block + ((long)b * d + a) * stride;
              for (long lo = 0; lo < stride; ++lo)
                if (cur[src + lo] != 0) out[dst + lo] = sign * cur[src + lo];
            }
        cur.swap(out);
        break;
      }
      case PGen::E: {
        long stride = ipow(d, rank - 1 - g.i);
        long block = d * d * stride;
        std::vector<Rational> out(cur.size(), Rational(0));
        for (long hi = 0; hi * block < (long)cur.size(); ++hi)
          for (long lo = 0; lo < stride; ++lo) {
            Rational s(0);
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b) {
                const Rational& gv = ctx.osp.ginv(a, b);
                if (gv != 0)
                  s += gv * cur[hi * block + ((long)a * d + b) * stride + lo];
              }
            if (s == 0) continue;
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b) {
                const Rational& kv = ctx.osp.g(a, b);
                if (kv != 0)
                  out[hi * block + ((long)a * d + b) * stride + lo] = kv * s;
              }
          }
        cur.swap(out);
        break;
      }
      case PGen::CAP: {
        long stride = ipow(d, rank - 1 - g.i);
        long block = d * d * stride;
        std::vector<Rational> out(cur.size() / (d * d), Rational(0));
        for (long hi = 0; hi * block < (long)cur.size(); ++hi)
          for (long lo = 0; lo < stride; ++lo) {
            Rational s(0);
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b) {
                const Rational& gv = ctx.osp.ginv(a, b);
                if (gv != 0)
                  s += gv * cur[hi * block + ((long)a * d + b) * stride + lo];
              }
            out[hi * stride + lo] = s;
          }
        cur.swap(out);
        rank -= 2;
        break;
      }
      case PGen::CUP: {
        // target slot positions (g.i-1, g.i) 0-based in rank+2 strands
        long stride = ipow(d, rank + 2 - 1 - g.i);
        long block = d * d * stride;
        std::vector<Rational> out(cur.size() * d * d, Rational(0));
        for (long hi = 0; hi * stride < (long)cur.size(); ++hi)
          for (long lo = 0; lo < stride; ++lo) {
            const Rational& v = cur[hi * stride + lo];
            if (v == 0) continue;
            for (int a = 0; a < d; ++a)
              for (int b = 0; b < d; ++b) {
                const Rational& kv = ctx.osp.g(a, b);
                if (kv != 0)
                  out[hi * block + ((long)a * d + b) * stride + lo] = kv * v;
              }
          }
        cur.swap(out);
        rank += 2;
        break;
      }
      case PGen::D: {
        if (ctx.hpairs.empty())
          throw CatError(Err::UnsupportedParameter,
                         "no pole action in this context");
        long mstride = ipow(d, rank);
        long vstride = ipow(d, rank - 1);
        std::vector<Rational> out(cur.size(), Rational(0));
        for (auto& hp : ctx.hpairs) {
          // window check before the (truncated) matrix is used
          for (int col = 0; col < ctx.dim_m; ++col) {
            if (!hp.bad_a[col]) continue;
            for (long x = 0; x < mstride; ++x)
              if (cur[col * mstride + x] != 0)
                throw CatError(Err::CutoffExceeded,
                               "Verma window exceeded; raise the cutoff");
          }
          for (auto& ta : hp.A) {
            Rational av = ta.v;
            if (hp.par_b && ctx.par_m[ta.c]) av = -av;
            for (auto& tb : hp.B) {
              Rational f = av * tb.v;
              long srcbase = ta.c * mstride + tb.c * vstride;
              long dstbase = ta.r * mstride + tb.r * vstride;
              for (long lo = 0; lo < vstride; ++lo)
                if (cur[srcbase + lo] != 0)
                  out[dstbase + lo] += f * cur[srcbase + lo];
            }
          }
        }
        cur.swap(out);
        break;
      }
      case PGen::Z: {
        Rational zv = z_value(ctx, g.i);
        for (auto& x : cur) x *= zv;
        break;
      }
    }
  }
  if (rank != w.s)
    throw CatError(Err::RankMismatch, "word target rank bookkeeping broken");
  return cur;
}

Rational z_value(RepCtx& ctx, int l) {
  auto it = ctx.zcache.find(l);
  if (it != ctx.zcache.end()) return it->second;
  Rational val;
  if (ctx.is_verma && ctx.cutoff < l + 2) {
    RepCtx wide = verma_rep_ctx(ctx.lambda, l + 2);
    val = z_value(wide, l);
  } else {
    PolarWord w = z_word(l);
    // evaluate on a couple of pole basis vectors and insist on a scalar
    int probes = std::min(ctx.dim_m, 2);
    bool have = false;
    for (int j = 0; j < probes; ++j) {
      std::vector<Rational> unit(ctx.dim_m, Rational(0));
      unit[j] = 1;
      auto res = apply_word(ctx, w, unit);
      for (int i = 0; i < ctx.dim_m; ++i) {
        if (i == j) continue;
        if (res[i] != 0)
          throw CatError(Err::DimensionMismatch,
                         "closure did not act as a scalar");
      }
      if (!have) {
        val = res[j];
        have = true;
      } else if (res[j] != val) {
        throw CatError(Err::DimensionMismatch,
                       "closure did not act as a scalar");
      }
    }
  }
  ctx.zcache[l] = val;
  return val;
}

namespace {

// Bind every z_k appearing in the element (coefficients or Z generators).
void prebind_z(RepCtx& ctx, const PolarElem& elem) {
  std::set<int> needed;
  auto scan_poly = [&](const Poly& p) {
    for (auto& [mono, c] : p.terms)
      for (auto& [name, exp] : mono.e)
        if (name.size() >= 2 && name[0] == 'z')
          needed.insert(std::stoi(name.substr(1)));
  };
  for (auto& [w, c] : elem.terms) {
    scan_poly(c.num);
    scan_poly(c.den);
    for (auto& g : w.seq)
      if (g.k == PGen::Z) needed.insert(g.i);
  }
  for (int l : needed) {
    Rational v = z_value(ctx, l);
    ctx.bind["z" + std::to_string(l)] = v;
  }
}

}  // namespace

QMat functor_eval_columns(RepCtx& ctx, const PolarElem& elem,
                          const std::vector<int>& cols, bool parallel) {
  int d = ctx.osp.dim();
  long dsrc = (long)ctx.dim_m * ipow(d, elem.r);
  long ddst = (long)ctx.dim_m * ipow(d, elem.s);
  prebind_z(ctx, elem);
  // specialize coefficients once
  std::vector<std::pair<const PolarWord*, Rational>> terms;
  for (auto& [w, c] : elem.terms)
    terms.push_back({&w, c.specialize(ctx.bind).rational_value()});
  QMat out((int)ddst, (int)cols.size());
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    try {
      long col = cols[ci];
      if (col < 0 || col >= dsrc)
        throw CatError(Err::IndexOutOfRange, "probe column out of range");
      std::vector<Rational> unit(dsrc, Rational(0));
      unit[col] = 1;
      std::vector<Rational> acc(ddst, Rational(0));
      for (auto& [w, c] : terms) {
        if (c == 0) continue;
        auto res = apply_word(ctx, *w, unit);
        for (long i = 0; i < ddst; ++i)
          if (res[i] != 0) acc[i] += c * res[i];
      }
      // each thread writes a distinct column
      for (long i = 0; i < ddst; ++i)
        if (acc[i] != 0) out((int)i, (int)ci) = acc[i];
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(functor_eval_err)
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

QMat functor_eval(RepCtx& ctx, const PolarElem& elem, bool parallel) {
  int d = ctx.osp.dim();
  long dsrc = (long)ctx.dim_m * ipow(d, elem.r);
  std::vector<int> cols(dsrc);
  for (long i = 0; i < dsrc; ++i) cols[i] = (int)i;
  return functor_eval_columns(ctx, elem, cols, parallel);
}

QMat functor_eval_brauer(RepCtx& ctx, const BrauerElem& elem, bool parallel) {
  return functor_eval(ctx, embed_brauer(elem), parallel);
}

Rational hom_dim_weightzero(int N) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * N, N);
  return Rational(b);
}

}  // namespace polarcat
