#include "polarcat/suites.hpp"

#include <functional>
#include <random>

#include "polarcat/g2.hpp"
#include "polarcat/morphism_text.hpp"
#include "polarcat/normalform.hpp"
#include "polarcat/ptl.hpp"
#include "polarcat/superlin.hpp"
#include "polarcat/uea.hpp"

namespace polarcat {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// H_{ab} = s_{ab} - e_{ab} on strands a < b of B_r.
BrauerElem hb(int a, int b, int r) {
  BrauerDiagram s = BrauerDiagram::id(r);
  s.pair(a - 1, r + b - 1);
  s.pair(b - 1, r + a - 1);
  BrauerDiagram e = BrauerDiagram::id(r);
  e.pair(a - 1, b - 1);
  e.pair(r + a - 1, r + b - 1);
  return BrauerElem::from(s) - BrauerElem::from(e);
}

bool four_term(int r) {
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

std::vector<Check> brauer_checks() {
  std::vector<Check> cs;
  cs.push_back({"|Hom(r,s)| = (r+s-1)!! for r+s <= 10", [] {
                  for (int r = 0; r <= 6; ++r)
                    for (int s = (r % 2); r + s <= 10; s += 2)
                      if ((long)enumerate_basis(r, s).size() !=
                          brauer_rank(r, s))
                        return false;
                  return true;
                }});
  cs.push_back({"composition is associative (random triples)", [] {
                  std::mt19937 rng(99);
                  auto b22 = enumerate_basis(2, 2);
                  auto b24 = enumerate_basis(2, 4);
                  auto b42 = enumerate_basis(4, 2);
                  for (int t = 0; t < 30; ++t) {
                    auto A = BrauerElem::from(b24[rng() % b24.size()]);
                    auto B = BrauerElem::from(b22[rng() % b22.size()]);
                    auto C = BrauerElem::from(b42[rng() % b42.size()]);
                    if (!(compose(A, compose(B, C)) ==
                          compose(compose(A, B), C)))
                      return false;
                  }
                  return true;
                }});
  cs.push_back({"(H - 1)(H + 1)(H - (1 - delta)) = 0 in B_2", [] {
                  auto H = generator(BrauerGen::H, 1, 2);
                  auto I = BrauerElem::id(2);
                  auto f = compose(H - I, H + I);
                  auto g = H - Frac(Poly(1) - Poly::delta()) * I;
                  return compose(f, g).is_zero();
                }});
  cs.push_back({"[H12, H13 + H23] = 0 and [H12 + H13, H23] = 0 in B_3",
                [] { return four_term(3); }});
  cs.push_back({"four-term relations hold in B_4", [] { return four_term(4); }});
  cs.push_back({"cap cup = delta", [] {
                  auto loop = compose(generator(BrauerGen::CAP, 1, 2),
                                      generator(BrauerGen::CUP, 1, 2));
                  return loop.terms.size() == 1 &&
                         loop.terms.begin()->second == Frac(Poly::delta());
                }});
  cs.push_back({"Sigma(3) = -Delta_3 Delta_3^* (skew coupon)", [] {
                  auto r = enhanced_coupon_check();
                  return r.skew && r.relation && r.normalization == Rational(-1);
                }});
  cs.push_back({"closure of Sigma(3) = delta(delta-1)(delta-2), = 6 at delta=3",
                [] {
                  auto r = enhanced_coupon_check();
                  return r.closure_poly && r.delta_consistent;
                }});
  return cs;
}

std::vector<Check> polar_checks() {
  std::vector<Check> cs;
  auto we = [](const PolarWord& w) { return PolarElem::from(w); };
  cs.push_back({"Z_1 = 0", [] { return z_closure(1).is_zero(); }});
  cs.push_back({"2 Z_3 = (2 - delta) Z_2", [] {
                  return Frac(Poly(2)) * z_closure(3) ==
                         Frac(Poly(2) - Poly::delta()) * Frac(Poly::z(2));
                }});
  cs.push_back({"H^T = -H", [we] {
                  auto D1 = PolarElem::gen(PGen::D, 0, 1);
                  return normalize(we(transpose_word(1))) ==
                         normalize(Frac(-1) * D1);
                }});
  cs.push_back({"(H^2)^T = H^2 + (delta - 2) H", [we] {
                  auto D1 = PolarElem::gen(PGen::D, 0, 1);
                  auto rhs =
                      D1.powed(2) + Frac(Poly::delta() - Poly(2)) * D1;
                  return normalize(we(transpose_word(2))) == normalize(rhs);
                }});
  cs.push_back({"[H^k, (H^l)^T] = 0 for k + l <= 6", [we] {
                  auto D1 = PolarElem::gen(PGen::D, 0, 1);
                  for (int k = 1; k <= 5; ++k)
                    for (int l = 1; k + l <= 6; ++l) {
                      auto A = D1.powed(k);
                      auto B = we(transpose_word(l));
                      if (!normalize(A.after(B) - B.after(A)).is_zero())
                        return false;
                    }
                  return true;
                }});
  cs.push_back({"E_1 H E_1 = 0 and E_1 H^2 E_1 = Z_2 E_1", [we] {
                  auto E1 = PolarElem::gen(PGen::E, 1, 2);
                  auto H = we(hh(1, 2));
                  return normalize(E1.after(H).after(E1)).is_zero() &&
                         normalize(E1.after(H.powed(2)).after(E1)) ==
                             normalize(Frac(Poly::z(2)) * E1);
                }});
  cs.push_back({"[H_x, H_y + s_xy - e_xy] = 0 for r <= 3", [we] {
                  for (int r : {2, 3})
                    for (int x = 1; x <= r; ++x)
                      for (int y = x + 1; y <= r; ++y) {
                        auto Hx = we(hh(x, r));
                        auto B = we(hh(y, r)) + we(s_word(x, y, r)) -
                                 we(e_word(x, y, r));
                        if (!normalize(Hx.after(B) - B.after(Hx)).is_zero())
                          return false;
                      }
                  return true;
                }});
  cs.push_back({"Jucys-Murphy sums commute for r <= 3", [] {
                  for (int r : {2, 3})
                    for (int j = 1; j <= r; ++j)
                      for (int k = j + 1; k <= r; ++k) {
                        auto a = vartheta(j, r), b = vartheta(k, r);
                        if (!normalize(a.after(b) - b.after(a)).is_zero())
                          return false;
                      }
                  return true;
                }});
  cs.push_back(
      {"functor_eval(W) = functor_eval(normalize(W)) on osp(3|0), osp(0|2)",
       [we] {
         std::vector<PolarElem> cases = {
             we(hh(2, 3)), vartheta(2, 2).powed(2), we(transpose_word(2)),
             we(hh(2, 2).after(hh(1, 2))),
             we(PolarWord::gen(PGen::CAP, 1, 2)
                    .after(PolarWord::gen(PGen::D, 0, 2).powed(2))
                    .after(PolarWord::gen(PGen::CUP, 1, 0)))};
         for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 0}, {0, 1}}) {
           RepCtx ctx = osp_rep_ctx(m, n);
           for (auto& e : cases)
             if (!(functor_eval(ctx, e) ==
                   functor_eval(ctx, normalize(e).to_elem())))
               return false;
         }
         return true;
       }});
  return cs;
}

std::vector<Check> ptl_checks() {
  std::vector<Check> cs;
  cs.push_back({"rank(r, 2N-r) = C(2N, N) for N <= 4", [] {
                  for (int N = 1; N <= 4; ++N)
                    for (int r = 0; r <= 2 * N; ++r)
                      if (ptl_rank(r, 2 * N - r) != binom(2 * N, N))
                        return false;
                  return true;
                }});
  cs.push_back({"rank(0,8) = 70", [] { return ptl_rank(0, 8) == 70; }});
  cs.push_back({"S_1 = (2/delta) E_1 - 1 in the quotient", [] {
                  auto theta = PolarElem::gen(PGen::S, 1, 2) +
                               PolarElem::id(2) -
                               Frac(Poly(2), Poly::delta()) *
                                   PolarElem::gen(PGen::E, 1, 2);
                  return project_ptl(theta).is_zero();
                }});
  cs.push_back({"H^2 + ((delta-2)/2) H - (z2/delta) 1 = 0", [] {
                  auto D1 = PolarElem::gen(PGen::D, 0, 1);
                  auto lhs = project_ptl(
                      D1.powed(2) +
                      Frac(Poly::delta() - Poly(2), Poly(2)) * D1 -
                      Frac(Poly::z(2), Poly::delta()) * PolarElem::id(1));
                  return lhs.is_zero();
                }});
  cs.push_back({"(H + lambda)(H + (delta-2)/2 - lambda) = 0 at delta = -2",
                [] {
                  auto D1 = PolarElem::gen(PGen::D, 0, 1);
                  auto I1 = PolarElem::id(1);
                  Rational d0(-2), lam(1, 2);
                  auto quad = (D1 + Frac(lam) * I1)
                                  .after(D1 + Frac((d0 - 2) / 2 - lam) * I1);
                  return tlb_specialize(quad, d0, lam).is_zero();
                }});
  cs.push_back(
      {"standard-basis images independent under the lambda = 1/2 Verma "
       "functor (N <= 2)",
       [] {
         for (int N = 1; N <= 2; ++N) {
           RepCtx ctx = verma_rep_ctx(Rational(1, 2), 8);
           auto basis = standard_basis(0, 2 * N);
           // rank-0 source: columns are indexed by the Verma level directly
           std::vector<int> cols = {0, 1, 2, 3};
           std::vector<QMat> images;
           for (auto& p : basis) {
             PtlElem one(0, 2 * N);
             one.add(p, Frac(1));
             images.push_back(
                 functor_eval_columns(ctx, one.to_elem(), cols, false));
           }
           QMat flat((int)images.size(), images[0].rows * images[0].cols);
           for (size_t k = 0; k < images.size(); ++k)
             for (int i = 0; i < images[k].rows; ++i)
               for (int j = 0; j < images[k].cols; ++j)
                 flat((int)k, i * images[k].cols + j) = images[k](i, j);
           if (rank_of(flat) != (int)basis.size()) return false;
         }
         return true;
       }});
  return cs;
}

std::vector<Check> osp_checks() {
  const std::vector<std::pair<int, int>> family = {
      {3, 0}, {5, 0}, {0, 1}, {0, 2}, {2, 1}};
  std::vector<Check> cs;
  cs.push_back({"tau^2 = 1, tau cup = cup, cap tau = cap", [family] {
                  for (auto [m, n] : family) {
                    auto o = osp_build(m, n);
                    auto [cap, cup] = cap_cup(o);
                    auto t = tau(o);
                    if (!(t * t == QMat::identity(o.dim() * o.dim())))
                      return false;
                    if (!(t * cup == cup) || !(cap * t == cap)) return false;
                  }
                  return true;
                }});
  cs.push_back({"Cap Cup = sdim(V)", [family] {
                  for (auto [m, n] : family) {
                    auto o = osp_build(m, n);
                    auto [cap, cup] = cap_cup(o);
                    if ((cap * cup)(0, 0) != Rational(o.sdim())) return false;
                  }
                  return true;
                }});
  cs.push_back({"(H - 1)(H + 1)(H - (1 - sdim)) = 0 on V(x)V", [family] {
                  for (auto [m, n] : family) {
                    auto o = osp_build(m, n);
                    auto [cap, cup] = cap_cup(o);
                    QMat H = tau(o) - cup * cap;
                    QMat I = QMat::identity(o.dim() * o.dim());
                    Rational s(1 - o.sdim());
                    if (!((H - I) * (H + I) * (H - s * I)).is_zero())
                      return false;
                  }
                  return true;
                }});
  cs.push_back({"H = (mu x mu)(t) on V(x)V", [family] {
                  for (auto [m, n] : family) {
                    auto o = osp_build(m, n);
                    auto [cap, cup] = cap_cup(o);
                    QMat H = tau(o) - cup * cap;
                    if (!(H == tempered_casimir(o, o.basis, o.V.par, o.basis)))
                      return false;
                  }
                  return true;
                }});
  cs.push_back({"chi_V(C) = sdim(V) - 1", [family] {
                  for (auto [m, n] : family) {
                    auto o = osp_build(m, n);
                    if (!(o.casimir_v ==
                          Rational(o.sdim() - 1) * QMat::identity(o.dim())))
                      return false;
                  }
                  return true;
                }});
  cs.push_back({"functor respects composition (random pairs)", [] {
                  std::mt19937 rng(7);
                  for (auto [m, n] :
                       std::vector<std::pair<int, int>>{{3, 0}, {0, 1}}) {
                    RepCtx ctx = trivial_rep_ctx(m, n);
                    auto b22 = enumerate_basis(2, 2);
                    for (int t = 0; t < 10; ++t) {
                      auto a = BrauerElem::from(b22[rng() % b22.size()]);
                      auto b = BrauerElem::from(b22[rng() % b22.size()]);
                      if (!(functor_eval_brauer(ctx, compose(a, b)) ==
                            functor_eval_brauer(ctx, a) *
                                functor_eval_brauer(ctx, b)))
                        return false;
                    }
                  }
                  return true;
                }});
  return cs;
}

std::vector<Check> uea_checks() {
  std::vector<Check> cs;
  cs.push_back({"E^2 - 2E + C = 0 entrywise in U(sp2)", [] {
                  LieData L = sl2_data();
                  UeaMatrix E = e_matrix(L);
                  UeaMatrix lhs = E * E + PBWElement::one(L, Rational(-2)) * E +
                                  casimir(L) * uea_identity(L);
                  return lhs.is_zero();
                }});
  cs.push_back({"str(E^2) = 2C in U(sp2)", [] {
                  LieData L = sl2_data();
                  UeaMatrix E = e_matrix(L);
                  return uea_str(L, E * E) == Rational(2) * casimir(L);
                }});
  cs.push_back({"I(2) is central in U(so3) and U(so4)", [] {
                  for (int m : {3, 4}) {
                    LieData L = so_data(m);
                    PBWElement i2 = gelfand(2, L);
                    for (int k = 0; k < L.n(); ++k) {
                      PBWElement x = PBWElement::gen(L, k);
                      if (!(pbw_mul(i2, x) == pbw_mul(x, i2))) return false;
                    }
                  }
                  return true;
                }});
  cs.push_back({"2 I(3) = (2 - m) I(2) in U(so_m), m = 3", [] {
                  LieData L = so_data(3);
                  return Rational(2) * gelfand(3, L) ==
                         Rational(-1) * gelfand(2, L);
                }});
  cs.push_back({"degree-3 characteristic identity holds in U(so3)", [] {
                  LieData L = so_split_data(3);
                  std::vector<Rational> grid;
                  for (int k = 0; k < 7; ++k)
                    grid.push_back(Rational(1, 5) + k);
                  return char_identity(L, grid).entrywise_zero;
                }});
  cs.push_back({"{1, I(2), I(2)^2, I(4)} independent in U(so5)", [] {
                  auto rep = centre_surjectivity_check(so_data(5), 4);
                  return rep.i2_central && rep.i4_central && rep.commute &&
                         rep.rank == 4;
                }});
  return cs;
}

std::vector<Check> g2_checks() {
  // the full battery is one expensive computation; run it once and share
  auto rep = std::make_shared<G2Report>(verify_g2_suite());
  std::vector<Check> cs;
  auto line = [&cs, rep](const std::string& name, bool G2Report::* field) {
    cs.push_back({name, [rep, field] { return (*rep).*field; }});
  };
  line("dim g = 14", &G2Report::dim14);
  line("C = 12 on V", &G2Report::casimir_value);
  line("Casimir spectrum on V(x)V = {0,12,24,28}, mult {1,7,14,27}",
       &G2Report::casimir_spectrum);
  line("tempered spectrum = {-12,-6,0,2}", &G2Report::tempered_spectrum);
  line("UpsilonHat Upsilon = 6 I", &G2Report::upsilon_inverse);
  line("(Upsilon UpsilonHat)^2 = 6 Upsilon UpsilonHat",
       &G2Report::upsilon_quasi);
  line("H - X + 2E - 1 + K = 0", &G2Report::spectral);
  line("H(H-2)(H+6)(H+12) = 0", &G2Report::quartic);
  line("K - X K^T2 + 2X - E - 1 = 0", &G2Report::lemma_reduction);
  line("K^T1 + K + X + E - 2 = 0", &G2Report::lemma_vee);
  line("H and Upsilon are equivariant", &G2Report::equivariance);
  line("P = K/6: P^2 = P, XP = -P, EP = 0", &G2Report::projector);
  line("double contraction of the 3-form = 6 Cech(1)",
       &G2Report::norm_contraction);
  line("cap cup = 7", &G2Report::loop_scalar);
  return cs;
}

std::vector<CheckResult> run_checks(const std::string& suite,
                                    std::vector<Check> checks) {
  std::vector<CheckResult> out(checks.size());
  // warm the closure-scalar cache before going parallel (process-wide memo);
  // degree 6 covers every word the checks can produce
  for (int l = 0; l <= 6; ++l) (void)z_closure(l);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < (int)checks.size(); ++i) {
    bool pass = false;
    try {
      pass = checks[i].second();
    } catch (...) {
      pass = false;
    }
    out[i] = {suite, checks[i].first, pass};
  }
  return out;
}

}  // namespace

long brauer_rank(int r, int s) {
  if ((r + s) % 2)
    throw CatError(Err::OddBoundary, "brauer_rank: odd boundary");
  long v = 1;
  for (long k = r + s - 1; k >= 1; k -= 2) v *= k;
  return v;
}

std::vector<CheckResult> run_suite(const std::string& name) {
  if (name == "brauer") return run_checks(name, brauer_checks());
  if (name == "polar") return run_checks(name, polar_checks());
  if (name == "ptl") return run_checks(name, ptl_checks());
  if (name == "osp") return run_checks(name, osp_checks());
  if (name == "uea") return run_checks(name, uea_checks());
  if (name == "g2") return run_checks(name, g2_checks());
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"brauer", "polar", "ptl", "osp", "uea", "g2"}) {
      auto part = run_suite(s);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw CatError(Err::UnsupportedParameter, "unknown suite: " + name);
}

}  // namespace polarcat
