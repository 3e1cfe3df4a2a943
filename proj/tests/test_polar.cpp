#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "polarcat/normalform.hpp"
#include "polarcat/superlin.hpp"

using namespace polarcat;

namespace {

const std::vector<std::pair<int, int>> kFamily = {
    {3, 0}, {5, 0}, {0, 1}, {0, 2}, {2, 1}};
// small-dimensional contexts used for the expensive random battery
const std::vector<std::pair<int, int>> kSmall = {{3, 0}, {0, 1}};

// Normalize, check every term is canonical and the dot filtration did not
// grow, then compare the evaluation of input and normal form exactly.
bool sound(const PolarElem& e, std::vector<RepCtx*> ctxs) {
  NormalForm nf = normalize(e);
  int in_dots = 0;
  for (auto& [w, c] : e.terms) in_dots = std::max(in_dots, w.dot_count());
  for (auto& [d, c] : nf.terms) {
    if (!is_canonical(d)) return false;
    if (d.total_dots() > in_dots) return false;
  }
  PolarElem back = nf.to_elem();
  for (RepCtx* ctx : ctxs) {
    if (!(functor_eval(*ctx, e) == functor_eval(*ctx, back))) return false;
  }
  return true;
}

PolarElem we(const PolarWord& w) { return PolarElem::from(w); }

Frac half_poly(const Poly& p) { return Frac(p, Poly(2)); }

}  // namespace

TEST_CASE("closure scalars") {
  CHECK(z_closure(0) == Frac(Poly::delta()));
  CHECK(z_closure(1).is_zero());
  // 2 Z3 = (2 - delta) Z2
  CHECK(z_closure(3) == half_poly(Poly(2) - Poly::delta()) * Frac(Poly::z(2)));
  // numeric cross-checks against each representation's closure values
  for (auto [m, n] : kFamily) {
    RepCtx ctx = osp_rep_ctx(m, n);
    std::map<std::string, Rational> bind = {
        {"delta", Rational(ctx.osp.sdim())},
        {"z2", z_value(ctx, 2)},
        {"z4", z_value(ctx, 4)}};
    CHECK(z_closure(3).specialize(bind).rational_value() == z_value(ctx, 3));
    CHECK(z_closure(5).specialize(bind).rational_value() == z_value(ctx, 5));
  }
}

TEST_CASE("closed loops reduce to closure scalars") {
  for (int k = 0; k <= 5; ++k) {
    NormalForm nf = normalize(we(z_word(k)));
    NormalForm expect(0, 0);
    expect.add(DottedDiagram::id(0), z_closure(k));
    CHECK(nf == expect);
  }
}

TEST_CASE("targeted rule soundness against the oracle") {
  std::vector<RepCtx> store;
  store.reserve(kFamily.size());
  std::vector<RepCtx*> ctxs;
  for (auto [m, n] : kFamily) {
    store.push_back(osp_rep_ctx(m, n));
    ctxs.push_back(&store.back());
  }
  std::vector<PolarElem> cases;
  // dot transport and sorting
  cases.push_back(we(PolarWord::gen(PGen::D, 0, 1)));
  cases.push_back(we(hh(2, 2)));
  cases.push_back(we(hh(2, 3)));
  cases.push_back(we(hh(3, 3)));
  cases.push_back(we(hh(2, 2).after(hh(1, 2))));
  cases.push_back(we(hh(1, 2).after(hh(2, 2))));
  cases.push_back(we(hh(3, 3).after(hh(1, 3))));
  cases.push_back(we(hh(2, 3).after(hh(3, 3)).after(hh(1, 3))));
  // crossings and contractions over dots
  cases.push_back(we(PolarWord::gen(PGen::S, 1, 2)
                         .after(PolarWord::gen(PGen::D, 0, 2))));
  cases.push_back(we(PolarWord::gen(PGen::D, 0, 2)
                         .after(PolarWord::gen(PGen::S, 1, 2))));
  cases.push_back(we(PolarWord::gen(PGen::E, 1, 2)
                         .after(PolarWord::gen(PGen::D, 0, 2))));
  cases.push_back(we(PolarWord::gen(PGen::D, 0, 2)
                         .after(PolarWord::gen(PGen::E, 1, 2))));
  cases.push_back(we(PolarWord::gen(PGen::E, 2, 3).after(hh(2, 3))));
  cases.push_back(we(hh(2, 3).after(PolarWord::gen(PGen::E, 2, 3))));
  // arc dots: dots placed on cup arcs, then capped or crossed
  PolarWord cup0 = PolarWord::gen(PGen::CUP, 1, 0);
  PolarWord d2 = PolarWord::gen(PGen::D, 0, 2);
  cases.push_back(we(d2.after(cup0)));
  cases.push_back(we(d2.powed(2).after(cup0)));
  cases.push_back(we(PolarWord::gen(PGen::S, 1, 2).after(d2).after(cup0)));
  cases.push_back(we(hh(2, 2).after(d2).after(cup0)));
  cases.push_back(
      we(PolarWord::gen(PGen::CAP, 1, 2).after(d2.powed(2)).after(cup0)));
  cases.push_back(we(PolarWord::gen(PGen::CAP, 1, 3)
                         .after(hh(2, 3))
                         .after(PolarWord::gen(PGen::CUP, 1, 1))));
  // caps over through-strand dots (transport down)
  cases.push_back(we(PolarWord::gen(PGen::CAP, 1, 2).after(d2)));
  cases.push_back(we(PolarWord::gen(PGen::CAP, 1, 3).after(hh(3, 3))));
  cases.push_back(we(PolarWord::gen(PGen::CAP, 2, 3).after(hh(1, 3))));
  // transpose words
  for (int l = 1; l <= 3; ++l) cases.push_back(we(transpose_word(l)));
  // Jucys-Murphy sums and powers
  cases.push_back(vartheta(2, 2));
  cases.push_back(vartheta(2, 2).powed(2));
  cases.push_back(vartheta(3, 3));
  cases.push_back(vartheta(2, 3).powed(2));
  for (auto& e : cases) CHECK(sound(e, ctxs));
}

TEST_CASE("transpose identities") {
  auto D1 = PolarElem::gen(PGen::D, 0, 1);
  // H^T = -H
  CHECK(normalize(we(transpose_word(1))) == normalize(Frac(-1) * D1));
  // (H^2)^T = H^2 + (delta - 2) H
  auto rhs = D1.powed(2) + Frac(Poly::delta() - Poly(2)) * D1;
  CHECK(normalize(we(transpose_word(2))) == normalize(rhs));
  // [H^k, (H^l)^T] = 0 for k + l <= 6
  for (int k = 1; k <= 5; ++k)
    for (int l = 1; k + l <= 6; ++l) {
      auto A = D1.powed(k);
      auto B = we(transpose_word(l));
      CHECK(normalize(A.after(B) - B.after(A)).is_zero());
    }
}

TEST_CASE("four-term relation") {
  for (int r : {2, 3}) {
    for (int x = 1; x <= r; ++x)
      for (int y = x + 1; y <= r; ++y) {
        auto Hx = we(hh(x, r));
        auto B = we(hh(y, r)) + we(s_word(x, y, r)) - we(e_word(x, y, r));
        CHECK(normalize(Hx.after(B) - B.after(Hx)).is_zero());
      }
  }
}

TEST_CASE("Jucys-Murphy elements commute") {
  for (int r : {2, 3}) {
    for (int j = 1; j <= r; ++j)
      for (int k = j + 1; k <= r; ++k) {
        auto a = vartheta(j, r), b = vartheta(k, r);
        CHECK(normalize(a.after(b) - b.after(a)).is_zero());
      }
  }
}

TEST_CASE("contraction sandwich") {
  auto E1 = PolarElem::gen(PGen::E, 1, 2);
  auto H = we(hh(1, 2));
  CHECK(normalize(E1.after(H).after(E1)).is_zero());
  CHECK(normalize(E1.after(H.powed(2)).after(E1)) ==
        normalize(Frac(Poly::z(2)) * E1));
}

TEST_CASE("closed loops are central") {
  for (int r : {1, 2}) {
    PolarWord loop = PolarWord::gen(PGen::CUP, 1, r);
    loop = PolarWord::gen(PGen::D, 0, r + 2).after(loop);
    loop = PolarWord::gen(PGen::D, 0, r + 2).after(loop);
    loop = PolarWord::gen(PGen::CAP, 1, r + 2).after(loop);
    auto L = we(loop);
    CHECK(normalize(L) == normalize(Frac(Poly::z(2)) * PolarElem::id(r)));
    auto A = r == 1 ? we(hh(1, 1)) : vartheta(2, 2) + PolarElem::gen(PGen::E, 1, 2);
    CHECK(normalize(L.after(A) - A.after(L)).is_zero());
  }
}

TEST_CASE("endomorphisms of the pole object commute") {
  auto a = we(z_word(2)), b = we(z_word(3));
  CHECK(normalize(a.after(b) - b.after(a)).is_zero());
  CHECK(normalize(a.after(b)) ==
        normalize(Frac(Poly::z(2)) * z_closure(3) * PolarElem::id(0)));
}

TEST_CASE("random word soundness and idempotence") {
  std::vector<RepCtx> store;
  store.reserve(3);
  std::vector<RepCtx*> ctxs;
  for (auto [m, n] : kSmall) {
    store.push_back(osp_rep_ctx(m, n));
    ctxs.push_back(&store.back());
  }
  store.push_back(osp_rep_ctx(2, 1));
  RepCtx* wide = &store.back();

  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 200; ++trial) {
    int cur = 1 + (int)(rng() % 3);
    PolarWord w = PolarWord::id(cur);
    int len = 3 + (int)(rng() % 5), dots = 0;
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
        if (pick == 4 && cur <= 1) {
          w = PolarWord::gen(PGen::CUP, 1 + (int)(rng() % (cur + 1)), cur).after(w);
          cur += 2;
          break;
        }
      }
    }
    auto e = we(w);
    std::vector<RepCtx*> use = ctxs;
    if (trial % 5 == 0) use.push_back(wide);
    CHECK(sound(e, use));
    if (trial % 10 == 0) {
      NormalForm nf = normalize(e);
      CHECK(normalize(nf.to_elem()) == nf);
    }
  }
}

TEST_CASE("affine translation") {
  auto D1 = PolarElem::gen(PGen::D, 0, 1);
  auto shifted = D1 + half_poly(Poly(1) - Poly::delta()) * PolarElem::id(1);
  CHECK((from_affine(D1) - shifted).is_zero());
  CHECK((to_affine(shifted) - D1).is_zero());
  // Brauer generators pass through unchanged
  auto E1 = PolarElem::gen(PGen::E, 1, 2);
  CHECK((to_affine(E1) - E1).is_zero());
  CHECK((from_affine(E1) - E1).is_zero());
  // round trips on composite words
  std::vector<PolarElem> cases = {vartheta(2, 3), we(transpose_word(2)),
                                  we(hh(2, 2).after(hh(1, 2)))};
  for (auto& e : cases) {
    CHECK((to_affine(from_affine(e)) - e).is_zero());
    CHECK((from_affine(to_affine(e)) - e).is_zero());
  }
}

TEST_CASE("rewrite budget guard") {
  auto e = we(hh(3, 3)).powed(3);
  CHECK_THROWS_AS(normalize(e, 5), CatError);
  try {
    normalize(e, 5);
  } catch (const CatError& err) {
    CHECK(err.kind() == Err::NonTermination);
  }
}
