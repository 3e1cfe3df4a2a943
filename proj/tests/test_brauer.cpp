#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polarcat/brauer.hpp"
#include "polarcat/polar.hpp"

using namespace polarcat;

namespace {

BrauerElem G(BrauerGen k, int i, int r) { return generator(k, i, r); }

BrauerElem eval_word(const std::vector<PolarGen>& w, int src) {
  BrauerElem acc = BrauerElem::id(src);
  for (auto& g : w) {
    BrauerElem step;
    switch (g.k) {
      case PGen::S: step = G(BrauerGen::S, g.i, g.src); break;
      case PGen::E: step = G(BrauerGen::E, g.i, g.src); break;
      case PGen::CAP: step = G(BrauerGen::CAP, g.i, g.src); break;
      case PGen::CUP: step = G(BrauerGen::CUP, g.i, g.src + 2); break;
      default: REQUIRE(false);
    }
    acc = compose(step, acc);
  }
  return acc;
}

long double_factorial(int n) {  // (n)!! with (-1)!! = 1
  long r = 1;
  for (int k = n; k > 0; k -= 2) r *= k;
  return r;
}

}  // namespace

TEST_CASE("symmetric group and contraction relations") {
  for (int r = 2; r <= 4; ++r) {
    for (int i = 1; i < r; ++i) {
      auto s = G(BrauerGen::S, i, r);
      auto e = G(BrauerGen::E, i, r);
      CHECK(compose(s, s) == BrauerElem::id(r));
      CHECK(compose(e, e) == Frac(Poly::delta()) * e);
      CHECK(compose(s, e) == e);
      CHECK(compose(e, s) == e);
    }
    for (int i = 1; i + 1 < r; ++i) {
      auto si = G(BrauerGen::S, i, r), sj = G(BrauerGen::S, i + 1, r);
      CHECK(compose(si, compose(sj, si)) == compose(sj, compose(si, sj)));
      auto ei = G(BrauerGen::E, i, r), ej = G(BrauerGen::E, i + 1, r);
      CHECK(compose(ei, compose(ej, ei)) == ei);
      CHECK(compose(ej, compose(ei, ej)) == ej);
      CHECK(compose(ei, compose(sj, si)) == compose(ei, ej));
    }
  }
}

TEST_CASE("cap and cup") {
  // zig-zag: (CAP_1 ⊗ id) ∘ (id ⊗ CUP_1) = id on one strand
  auto cap12 = G(BrauerGen::CAP, 1, 3);
  auto cup23 = G(BrauerGen::CUP, 2, 3);
  CHECK(compose(cap12, cup23) == BrauerElem::id(1));
  auto cap23 = G(BrauerGen::CAP, 2, 3);
  auto cup12 = G(BrauerGen::CUP, 1, 3);
  CHECK(compose(cap23, cup12) == BrauerElem::id(1));
  // closing a cup gives a delta loop
  auto cap11 = G(BrauerGen::CAP, 1, 2);
  auto cup11 = G(BrauerGen::CUP, 1, 2);
  CHECK(compose(cap11, cup11) ==
        Frac(Poly::delta()) * BrauerElem::id(0));
  // E = CUP ∘ CAP
  CHECK(compose(cup11, cap11) == G(BrauerGen::E, 1, 2));
}

TEST_CASE("cubic relation for H") {
  Poly d = Poly::delta();
  for (int r = 2; r <= 3; ++r)
    for (int i = 1; i < r; ++i) {
      auto h = G(BrauerGen::H, i, r);
      auto one = BrauerElem::id(r);
      auto f = compose(h - one, compose(h + one, h - (Frac(Poly(1) - d) * one)));
      CHECK(f.is_zero());
    }
}

TEST_CASE("four-term relation") {
  for (int r = 3; r <= 4; ++r) {
    // H_{12}, H_{13}, H_{23} inside the first three strands
    auto h12 = G(BrauerGen::H, 1, r);
    auto h23 = G(BrauerGen::H, 2, r);
    auto s2 = G(BrauerGen::S, 2, r);
    auto h13 = compose(s2, compose(h12, s2));
    auto sum = h13 + h23;
    CHECK(compose(h12, sum) == compose(sum, h12));
  }
}

TEST_CASE("basis counts") {
  CHECK((int)enumerate_basis(2, 2).size() == double_factorial(3));
  CHECK((int)enumerate_basis(3, 3).size() == double_factorial(5));
  CHECK((int)enumerate_basis(1, 3).size() == double_factorial(3));
  CHECK((int)enumerate_basis(4, 4).size() == double_factorial(7));
  CHECK((int)enumerate_basis(0, 2).size() == 1);
  CHECK_THROWS_AS(enumerate_basis(2, 1), CatError);
}

TEST_CASE("random associativity") {
  std::mt19937 rng(12345);
  auto basis33 = enumerate_basis(3, 3);
  auto pick = [&](const std::vector<BrauerDiagram>& b) {
    return BrauerElem::from(b[rng() % b.size()]);
  };
  for (int t = 0; t < 50; ++t) {
    auto a = pick(basis33), b = pick(basis33), c = pick(basis33);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("tensor respects composition") {
  auto a = G(BrauerGen::S, 1, 2);
  auto b = G(BrauerGen::E, 1, 2);
  auto lhs = compose(tensor(a, b), tensor(b, a));
  auto rhs = tensor(compose(a, b), compose(b, a));
  CHECK(lhs == rhs);
}

TEST_CASE("Theta is an essential idempotent multiple") {
  auto t = theta();
  auto two = Frac(Poly(2));
  CHECK(compose(t, t) == two * t);
  auto x = G(BrauerGen::S, 1, 2);
  auto one = BrauerElem::id(2);
  CHECK(compose(one - x, t).is_zero());
  CHECK(compose(G(BrauerGen::E, 1, 2), t).is_zero());
}

TEST_CASE("diagram word decomposition round-trips") {
  std::mt19937 rng(777);
  for (auto [r, s] : std::vector<std::pair<int, int>>{
           {2, 2}, {3, 3}, {1, 3}, {4, 2}, {2, 4}, {0, 4}, {4, 4}}) {
    auto basis = enumerate_basis(r, s);
    for (int t = 0; t < 12; ++t) {
      const auto& d = basis[rng() % basis.size()];
      auto word = eval_word(decompose_to_word(d), r);
      CHECK(word == BrauerElem::from(d));
    }
  }
}
