// Acceptance battery: twelve end-to-end criteria, one pass/fail line each.
// Everything is exact rational/polynomial arithmetic; a criterion passes only
// when every identity inside it holds identically.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "polarcat/g2.hpp"
#include "polarcat/normalform.hpp"
#include "polarcat/ptl.hpp"
#include "polarcat/suites.hpp"
#include "polarcat/superlin.hpp"
#include "polarcat/uea.hpp"

using namespace polarcat;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<std::pair<int, int>> kFamily = {
    {3, 0}, {5, 0}, {0, 1}, {0, 2}, {2, 1}};  // osp(m|2n)

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PolarElem we(const PolarWord& w) { return PolarElem::from(w); }

// A relation holds when it normalizes to zero and evaluates to zero in every
// family member.
bool both_ways_zero(const PolarElem& e, std::vector<RepCtx>& ctxs) {
  if (!normalize(e).is_zero()) return false;
  for (auto& ctx : ctxs)
    if (!functor_eval(ctx, e).is_zero()) return false;
  return true;
}

// ---- criterion bodies ----------------------------------------------------

bool criterion1() {
  for (int r = 0; r <= 6; ++r)
    for (int s = (r % 2); r + s <= 10; s += 2)
      if ((long)enumerate_basis(r, s).size() != brauer_rank(r, s))
        return false;
  std::mt19937 rng(123);
  auto b22 = enumerate_basis(2, 2);
  auto b24 = enumerate_basis(2, 4);
  auto b42 = enumerate_basis(4, 2);
  auto b44 = enumerate_basis(4, 4);
  for (int t = 0; t < 100; ++t) {
    BrauerElem A, B, C;
    if (t % 2) {
      A = BrauerElem::from(b24[rng() % b24.size()]);
      B = BrauerElem::from(b22[rng() % b22.size()]);
      C = BrauerElem::from(b42[rng() % b42.size()]);
    } else {
      A = BrauerElem::from(b44[rng() % b44.size()]);
      B = BrauerElem::from(b44[rng() % b44.size()]);
      C = BrauerElem::from(b44[rng() % b44.size()]);
    }
    if (!(compose(A, compose(B, C)) == compose(compose(A, B), C)))
      return false;
  }
  auto H = generator(BrauerGen::H, 1, 2);
  auto I = BrauerElem::id(2);
  auto cubic = compose(compose(H - I, H + I),
                       H - Frac(Poly(1) - Poly::delta()) * I);
  return cubic.is_zero();
}

BrauerElem hb(int a, int b, int r) {
  BrauerDiagram s = BrauerDiagram::id(r);
  s.pair(a - 1, r + b - 1);
  s.pair(b - 1, r + a - 1);
  BrauerDiagram e = BrauerDiagram::id(r);
  e.pair(a - 1, b - 1);
  e.pair(r + a - 1, r + b - 1);
  return BrauerElem::from(s) - BrauerElem::from(e);
}

bool criterion2() {
  for (int r : {3, 4})
    for (int a = 1; a <= r; ++a)
      for (int b = a + 1; b <= r; ++b)
        for (int c = b + 1; c <= r; ++c) {
          auto ab = hb(a, b, r), ac = hb(a, c, r), bc = hb(b, c, r);
          auto x = ac + bc;
          if (!(compose(ab, x) - compose(x, ab)).is_zero()) return false;
          auto y = ab + ac;
          if (!(compose(y, bc) - compose(bc, y)).is_zero()) return false;
        }
  return true;
}

bool criterion3() {
  std::vector<RepCtx> ctxs;
  for (auto [m, n] : kFamily) ctxs.push_back(osp_rep_ctx(m, n));

  // closure scalars
  if (!z_closure(1).is_zero()) return false;
  if (!(Frac(Poly(2)) * z_closure(3) ==
        Frac(Poly(2) - Poly::delta()) * Frac(Poly::z(2))))
    return false;
  for (auto& ctx : ctxs) {
    std::map<std::string, Rational> bind = {{"delta", Rational(ctx.osp.sdim())},
                                            {"z2", z_value(ctx, 2)},
                                            {"z4", z_value(ctx, 4)}};
    if (z_closure(3).specialize(bind).rational_value() != z_value(ctx, 3))
      return false;
  }
  if (!both_ways_zero(we(z_word(1)), ctxs)) return false;

  auto D1 = PolarElem::gen(PGen::D, 0, 1);
  // (H^2)^T = H^2 + (delta - 2) H
  auto sq = we(transpose_word(2)) - D1.powed(2) -
            Frac(Poly::delta() - Poly(2)) * D1;
  if (!both_ways_zero(sq, ctxs)) return false;
  // transpose words l <= 4 agree with their eliminated forms
  for (int l = 1; l <= 4; ++l) {
    auto diff = we(transpose_word(l)) - normalize(we(transpose_word(l))).to_elem();
    if (!both_ways_zero(diff, ctxs)) return false;
  }
  // [H^k, (H^l)^T] = 0 for k + l <= 6 (normalization; evaluation for k+l<=4)
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; k + l <= 6; ++l) {
      auto A = D1.powed(k);
      auto B = we(transpose_word(l));
      auto comm = A.after(B) - B.after(A);
      if (!normalize(comm).is_zero()) return false;
      if (k + l <= 4) {
        for (auto& ctx : ctxs)
          if (!functor_eval(ctx, comm).is_zero()) return false;
      }
    }

  // Jucys-Murphy battery at ranks 2..4 (small family members carry the
  // expensive rank-4 evaluations; every relation still normalizes to zero)
  std::vector<RepCtx> small;
  small.push_back(osp_rep_ctx(3, 0));
  small.push_back(osp_rep_ctx(0, 1));
  for (int r = 2; r <= 4; ++r) {
    std::vector<RepCtx>& use = r <= 3 ? ctxs : small;
    std::vector<PolarElem> rels;
    // JM-1: E_1 theta_1^l E_1 = Z_l E_1 (l <= 3)
    auto E1 = PolarElem::gen(PGen::E, 1, r);
    for (int l = 1; l <= 3; ++l)
      rels.push_back(E1.after(vartheta(1, r).powed(l)).after(E1) -
                     z_closure(l) * E1);
    // JM-2: the theta commute
    for (int i = 1; i <= r; ++i)
      for (int j = i + 1; j <= r; ++j) {
        auto a = vartheta(i, r), b = vartheta(j, r);
        rels.push_back(a.after(b) - b.after(a));
      }
    for (int k = 1; k <= r - 1; ++k) {
      auto Sk = PolarElem::gen(PGen::S, k, r);
      auto Ek = PolarElem::gen(PGen::E, k, r);
      auto Ir = PolarElem::id(r);
      // JM-3 / JM-4: S_k and E_k commute with theta_j for j != k, k+1
      for (int j = 1; j <= r; ++j) {
        if (j == k || j == k + 1) continue;
        auto th = vartheta(j, r);
        rels.push_back(Sk.after(th) - th.after(Sk));
        rels.push_back(Ek.after(th) - th.after(Ek));
      }
      // JM-5 / JM-6
      rels.push_back(Sk.after(vartheta(k, r)) -
                     vartheta(k + 1, r).after(Sk) - Ek + Ir);
      rels.push_back(vartheta(k, r).after(Sk) -
                     Sk.after(vartheta(k + 1, r)) - Ek + Ir);
      // JM-7 / JM-8
      auto sum = vartheta(k, r) + vartheta(k + 1, r);
      rels.push_back(Ek.after(sum) - Frac(Poly(1) - Poly::delta()) * Ek);
      rels.push_back(sum.after(Ek) - Frac(Poly(1) - Poly::delta()) * Ek);
    }
    for (auto& rel : rels)
      if (!both_ways_zero(rel, use)) return false;
  }
  return true;
}

bool criterion4() {
  std::vector<RepCtx> ctxs;
  for (auto [m, n] : kFamily) ctxs.push_back(osp_rep_ctx(m, n));
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 200; ++trial) {
    int cur = 1 + (int)(rng() % 3);
    PolarWord w = PolarWord::id(cur);
    int len = 3 + (int)(rng() % 6), dots = 0;
    for (int t = 0; t < len; ++t) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        int pick = (int)(rng() % 5);
        if (pick == 0 && cur >= 1 && dots < 3) {
          w = PolarWord::gen(PGen::D, 0, cur).after(w);
          ++dots;
          break;
        }
        if (pick == 1 && cur >= 2) {
          w = PolarWord::gen(PGen::S, 1 + (int)(rng() % (cur - 1)), cur).after(w);
          break;
        }
        if (pick == 2 && cur >= 2) {
          w = PolarWord::gen(PGen::E, 1 + (int)(rng() % (cur - 1)), cur).after(w);
          break;
        }
        if (pick == 3 && cur >= 2) {
          w = PolarWord::gen(PGen::CAP, 1 + (int)(rng() % (cur - 1)), cur).after(w);
          cur -= 2;
          break;
        }
        if (pick == 4 && cur <= 2) {
          w = PolarWord::gen(PGen::CUP, 1 + (int)(rng() % (cur + 1)), cur).after(w);
          cur += 2;
          break;
        }
      }
    }
    auto e = we(w);
    NormalForm nf = normalize(e);
    if (!(normalize(nf.to_elem()) == nf)) return false;
    PolarElem back = nf.to_elem();
    // oracle equality across the family; the largest members only probe
    // every fifth word to stay inside the runtime budget
    for (size_t c = 0; c < ctxs.size(); ++c) {
      int d = ctxs[c].osp.dim();
      if (d >= 5 && (int)w.seq.size() > 6 && trial % 5 != 0) continue;
      if (!(functor_eval(ctxs[c], e) == functor_eval(ctxs[c], back)))
        return false;
    }
  }
  return true;
}

bool criterion5() {
  for (int N = 1; N <= 4; ++N)
    for (int r = 0; r <= 2 * N; ++r)
      if (ptl_rank(r, 2 * N - r) != binom(2 * N, N)) return false;
  for (int N = 1; N <= 2; ++N) {
    RepCtx ctx = verma_rep_ctx(Rational(1, 2), 8);
    auto basis = standard_basis(0, 2 * N);
    std::vector<int> cols = {0, 1, 2, 3};
    std::vector<QMat> images;
    for (auto& p : basis) {
      PtlElem one(0, 2 * N);
      one.add(p, Frac(1));
      images.push_back(functor_eval_columns(ctx, one.to_elem(), cols, true));
    }
    QMat flat((int)images.size(), images[0].rows * images[0].cols);
    for (size_t k = 0; k < images.size(); ++k)
      for (int i = 0; i < images[k].rows; ++i)
        for (int j = 0; j < images[k].cols; ++j)
          flat((int)k, i * images[k].cols + j) = images[k](i, j);
    if (rank_of(flat) != (int)basis.size()) return false;
  }
  return true;
}

bool criterion6() {
  std::mt19937 rng(4242);
  for (auto [m, n] : kFamily) {
    auto o = osp_build(m, n);
    auto [cap, cup] = cap_cup(o);
    QMat H = tau(o) - cup * cap;
    QMat I = QMat::identity(o.dim() * o.dim());
    Rational s(1 - o.sdim());
    if (!((H - I) * (H + I) * (H - s * I)).is_zero()) return false;
    // sliding/absorption identities of the duality structure
    auto t = tau(o);
    if (!(t * cup == cup) || !(cap * t == cap)) return false;
    if ((cap * cup)(0, 0) != Rational(o.sdim())) return false;
    if (!(o.casimir_v == Rational(o.sdim() - 1) * QMat::identity(o.dim())))
      return false;
  }
  int done = 0;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 0}, {0, 1}}) {
    RepCtx ctx = trivial_rep_ctx(m, n);
    auto b22 = enumerate_basis(2, 2);
    auto b24 = enumerate_basis(2, 4);
    while (done < 100) {
      bool big = done % 2;
      auto a = big ? BrauerElem::from(b24[rng() % b24.size()])
                   : BrauerElem::from(b22[rng() % b22.size()]);
      auto b = BrauerElem::from(b22[rng() % b22.size()]);
      if (!(functor_eval_brauer(ctx, compose(a, b)) ==
            functor_eval_brauer(ctx, a) * functor_eval_brauer(ctx, b)))
        return false;
      if (++done == 50) break;
    }
  }
  return done == 100;
}

bool criterion7() {
  LieData L = sl2_data();
  UeaMatrix E = e_matrix(L);
  UeaMatrix lhs = E * E + PBWElement::one(L, Rational(-2)) * E +
                  casimir(L) * uea_identity(L);
  if (!lhs.is_zero()) return false;
  return uea_str(L, E * E) == Rational(2) * casimir(L);
}

bool criterion8() {
  LieData L = so_split_data(3);
  std::vector<Rational> grid;
  for (int k = 0; k < 7; ++k) grid.push_back(Rational(1, 5) + k);
  CharIdentity ci = char_identity(L, grid);
  if (!ci.entrywise_zero) return false;
  UeaMatrix E = e_matrix(L);
  for (int lam = 0; lam <= 2; ++lam) {
    auto mats = fd_module(L, Rational(lam));
    QMat A = eval_matrix(E, mats);
    // A^3 + sum_i Q_i A^{3-i} evaluated on L_lambda
    QMat acc = A * A * A;
    for (int i = 1; i <= 3; ++i) {
      QMat Qi = eval_matrix(ci.Q[i - 1] * uea_identity(L), mats);
      QMat Apow = QMat::identity(A.rows);
      for (int j = 0; j < 3 - i; ++j) Apow = Apow * A;
      acc = acc + Qi * Apow;
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

bool criterion9() {
  for (int m : {3, 4}) {
    LieData L = so_data(m);
    PBWElement i2 = gelfand(2, L);
    for (int k = 0; k < L.n(); ++k) {
      PBWElement x = PBWElement::gen(L, k);
      if (!(pbw_mul(i2, x) == pbw_mul(x, i2))) return false;
    }
  }
  // I(3) equals the closed-loop scalar pushed into U(so_m):
  // 2 Z_3 = (2 - delta) Z_2 with delta -> m, z2 -> I(2)
  for (int m : {3, 4}) {
    LieData L = so_data(m);
    Frac z3 = z_closure(3).specialize({{"delta", Rational(m)}});
    // z3 = c * z2 with c rational
    Rational c = 0;
    for (auto& [mo, co] : z3.num.terms) {
      if (mo.exp_of("z2") != 1) return false;
      c = co / z3.den.constant_value();
    }
    if (!(gelfand(3, L) == c * gelfand(2, L))) return false;
  }
  auto rep5 = centre_surjectivity_check(so_data(5), 4);
  if (!(rep5.i2_central && rep5.i4_central && rep5.commute && rep5.rank == 4))
    return false;
  return true;
}

bool criterion10() {
  G2Report r = verify_g2_suite();
  return r.all();
}

bool criterion11() {
  auto D1 = PolarElem::gen(PGen::D, 0, 1);
  auto I1 = PolarElem::id(1);
  Rational d0(-2), lam(1, 2);
  auto quad =
      (D1 + Frac(lam) * I1).after(D1 + Frac((d0 - 2) / 2 - lam) * I1);
  if (!tlb_specialize(quad, d0, lam).is_zero()) return false;
  for (int N = 1; N <= 6; ++N)
    if (hom_dim_weightzero(N) != Rational(binom(2 * N, N))) return false;
  // lowering-operator witness: (-2Y)^t m_+ != 0 for t <= 3 at lambda = 1/2
  auto v = trunc_verma(lam, 6);
  QMat w(7, 1);
  w(0, 0) = 1;
  for (int t = 1; t <= 3; ++t) {
    w = Rational(-2) * (v.Y * w);
    if (w.is_zero()) return false;
  }
  return true;
}

bool criterion12() {
  CouponReport r = enhanced_coupon_check();
  return r.skew && r.normalization == Rational(-1) && r.relation &&
         r.closure_poly && r.delta_consistent;
}

}  // namespace

int main() {
  struct Crit {
    const char* name;
    std::function<bool()> run;
  };
  std::vector<Crit> crits = {
      {"Brauer core: hom counts, associativity, cubic relation", criterion1},
      {"four-term relations in B_3 and B_4", criterion2},
      {"polar relation battery (normalized and evaluated)", criterion3},
      {"normal-form soundness on 200 random words", criterion4},
      {"PTL ranks and truncated-Verma independence", criterion5},
      {"osp functor: cubic, duality identities, Casimir, functoriality",
       criterion6},
      {"sp2 characteristic identity E^2 - 2E + C = 0, str(E^2) = 2C",
       criterion7},
      {"so3 characteristic identity, entrywise and per-lambda", criterion8},
      {"centre: I(2), I(3), independence of {1, I(2), I(2)^2, I(4)}",
       criterion9},
      {"G2 suite: dimensions, spectra, Upsilon relations", criterion10},
      {"sp2/TLB: quadratic relation, weight-zero dims, Verma witness",
       criterion11},
      {"enhanced coupon at m = 3", criterion12},
  };
  int failures = 0;
  for (size_t i = 0; i < crits.size(); ++i) {
    bool ok = false;
    auto t0 = Clock::now();
    try {
      ok = crits[i].run();
    } catch (const std::exception& e) {
      std::cerr << "criterion " << i + 1 << " raised: " << e.what() << "\n";
      ok = false;
    }
    auto t1 = Clock::now();
    double sec = std::chrono::duration<double>(t1 - t0).count();
    std::cout << "criterion " << i + 1 << " (" << crits[i].name
              << "): " << (ok ? "PASS" : "FAIL") << "  [" << sec << "s]"
              << std::endl;
    if (!ok) ++failures;
  }
  return failures;
}
