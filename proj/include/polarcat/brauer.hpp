#pragma once
// Classical Brauer category B(delta): perfect-matching diagrams, composition
// with delta-loop extraction, tensor product, standard generators, and the
// Temperley-Lieb element Theta.
//
// Label convention: bottom points 0..r-1 left-to-right, then top points
// r..r+s-1 left-to-right (1-based in JSON output).

#include <algorithm>
#include <map>
#include <vector>

#include "polarcat/scalars.hpp"

namespace polarcat {

struct BrauerDiagram {
  int bot = 0, top = 0;
  std::vector<int> mate;  // involution on 0..bot+top-1, no fixed points

  BrauerDiagram() = default;
  BrauerDiagram(int r, int s) : bot(r), top(s), mate(r + s, -1) {}

  static BrauerDiagram id(int r) {
    BrauerDiagram d(r, r);
    for (int i = 0; i < r; ++i) {
      d.mate[i] = r + i;
      d.mate[r + i] = i;
    }
    return d;
  }

  void pair(int a, int b) {
    mate[a] = b;
    mate[b] = a;
  }
  int n() const { return bot + top; }
  bool is_top(int x) const { return x >= bot; }
  // top position (0-based) of label x
  int top_pos(int x) const { return x - bot; }
  int top_label(int pos) const { return bot + pos; }

  bool valid() const {
    if ((bot + top) % 2) return false;
    for (int i = 0; i < n(); ++i)
      if (mate[i] < 0 || mate[i] == i || mate[mate[i]] != i) return false;
    return true;
  }

  auto operator<=>(const BrauerDiagram& o) const = default;
};

// Diagram composition a∘b (b applied first; requires b.top == a.bot).
// Returns the composed diagram and the number of closed loops removed.
// Path tracing: each interface node (glued b-top / a-bottom point) has one
// b-edge and one a-edge; alternate between them.
inline std::pair<BrauerDiagram, int> compose_diagrams(const BrauerDiagram& a,
                                                      const BrauerDiagram& b) {
  if (a.bot != b.top)
    throw CatError(Err::RankMismatch, "compose: rank mismatch");
  int r = b.bot, m = b.top, s = a.top;
  BrauerDiagram out(r, s);
  // Unified endpoint encoding for walk results:
  //   0..r-1          outer bottom (b-bottom i)
  //   r..r+m-1        interface j
  //   r+m..r+m+s-1    outer top (a-top k)
  auto b_step = [&](int node) {  // follow b's matching from node (b-side)
    int lbl = node < r ? node : b.top_label(node - r);
    int mt = b.mate[lbl];
    return b.is_top(mt) ? r + b.top_pos(mt) : mt;
  };
  auto a_step = [&](int node) {  // follow a's matching from node (a-side)
    int lbl = node < r + m ? node - r : a.top_label(node - r - m);
    int mt = a.mate[lbl];
    return a.is_top(mt) ? r + m + a.top_pos(mt) : r + mt;
  };
  auto is_outer = [&](int v) { return v < r || v >= r + m; };
  auto out_label = [&](int v) { return v < r ? v : r + (v - r - m); };
  std::vector<bool> visited(r + m + s, false);
  for (int v = 0; v < r + m + s; ++v) {
    if (visited[v] || !is_outer(v)) continue;
    visited[v] = true;
    // first step uses the matching the outer point belongs to
    bool via_b = v < r;
    int cur = via_b ? b_step(v) : a_step(v);
    while (!is_outer(cur)) {
      visited[cur] = true;
      via_b = !via_b;  // arrived through one side; leave through the other
      cur = via_b ? b_step(cur) : a_step(cur);
    }
    visited[cur] = true;
    out.pair(out_label(v), out_label(cur));
  }
  int loops = 0;
  for (int j = 0; j < m; ++j) {
    if (visited[r + j]) continue;
    ++loops;
    int v = r + j;
    visited[v] = true;
    bool via_b = true;  // start along b's edge; orientation irrelevant
    int cur = b_step(v);
    while (cur != v) {
      visited[cur] = true;
      via_b = !via_b;
      cur = via_b ? b_step(cur) : a_step(cur);
    }
  }
  return {out, loops};
}

inline BrauerDiagram tensor_diagrams(const BrauerDiagram& a,
                                     const BrauerDiagram& b) {
  BrauerDiagram out(a.bot + b.bot, a.top + b.top);
  auto amap = [&](int x) {
    return a.is_top(x) ? out.bot + a.top_pos(x) : x;
  };
  auto bmap = [&](int x) {
    return b.is_top(x) ? out.bot + a.top + b.top_pos(x) : a.bot + x;
  };
  for (int x = 0; x < a.n(); ++x) out.mate[amap(x)] = amap(a.mate[x]);
  for (int x = 0; x < b.n(); ++x) out.mate[bmap(x)] = bmap(b.mate[x]);
  return out;
}

// Linear combination of diagrams sharing (bot, top), Frac coefficients.
class BrauerElem {
 public:
  int bot = 0, top = 0;
  std::map<BrauerDiagram, Frac> terms;

  BrauerElem() = default;
  BrauerElem(int r, int s) : bot(r), top(s) {}
  static BrauerElem from(const BrauerDiagram& d, const Frac& c = Frac(1)) {
    BrauerElem e(d.bot, d.top);
    if (!c.is_zero()) e.terms[d] = c;
    return e;
  }
  static BrauerElem zero(int r, int s) { return BrauerElem(r, s); }
  static BrauerElem id(int r) { return from(BrauerDiagram::id(r)); }

  void add(const BrauerDiagram& d, const Frac& c) {
    auto it = terms.find(d);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }

  friend BrauerElem operator+(const BrauerElem& x, const BrauerElem& y) {
    BrauerElem r = x;
    for (auto& [d, c] : y.terms) r.add(d, c);
    return r;
  }
  friend BrauerElem operator-(const BrauerElem& x, const BrauerElem& y) {
    BrauerElem r = x;
    for (auto& [d, c] : y.terms) r.add(d, -c);
    return r;
  }
  friend BrauerElem operator*(const Frac& c, const BrauerElem& x) {
    BrauerElem r(x.bot, x.top);
    for (auto& [d, v] : x.terms) r.add(d, c * v);
    return r;
  }
  bool operator==(const BrauerElem& o) const {
    return (*this - o).is_zero();
  }
};

// a∘b with delta-loop factors (delta symbolic).
inline BrauerElem compose(const BrauerElem& a, const BrauerElem& b) {
  if (a.bot != b.top)
    throw CatError(Err::RankMismatch, "compose: rank mismatch");
  BrauerElem r(b.bot, a.top);
  Poly delta = Poly::delta();
  for (auto& [da, ca] : a.terms)
    for (auto& [db, cb] : b.terms) {
      auto [d, loops] = compose_diagrams(da, db);
      r.add(d, ca * cb * Frac(delta.pow(loops)));
    }
  return r;
}

inline BrauerElem tensor(const BrauerElem& a, const BrauerElem& b) {
  BrauerElem r(a.bot + b.bot, a.top + b.top);
  for (auto& [da, ca] : a.terms)
    for (auto& [db, cb] : b.terms) r.add(tensor_diagrams(da, db), ca * cb);
  return r;
}

enum class BrauerGen { S, E, H, CAP, CUP, ID };

// generator(kind, i, r): S/E/H_i: r->r (1 <= i <= r-1); CAP_i: r->r-2;
// CUP_i: r-2->r (cup occupies target positions i, i+1); ID: r->r.
inline BrauerElem generator(BrauerGen kind, int i, int r) {
  switch (kind) {
    case BrauerGen::ID:
      return BrauerElem::id(r);
    case BrauerGen::S: {
      if (i < 1 || i > r - 1)
        throw CatError(Err::IndexOutOfRange, "S index");
      BrauerDiagram d = BrauerDiagram::id(r);
      d.pair(i - 1, r + i);
      d.pair(i, r + i - 1);
      return BrauerElem::from(d);
    }
    case BrauerGen::E: {
      if (i < 1 || i > r - 1)
        throw CatError(Err::IndexOutOfRange, "E index");
      BrauerDiagram d = BrauerDiagram::id(r);
      d.pair(i - 1, i);
      d.pair(r + i - 1, r + i);
      return BrauerElem::from(d);
    }
    case BrauerGen::H:
      return generator(BrauerGen::S, i, r) - generator(BrauerGen::E, i, r);
    case BrauerGen::CAP: {
      if (i < 1 || i > r - 1)
        throw CatError(Err::IndexOutOfRange, "CAP index");
      BrauerDiagram d(r, r - 2);
      d.pair(i - 1, i);
      for (int x = 0, t = 0; x < r; ++x) {
        if (x == i - 1 || x == i) continue;
        d.pair(x, r + t);
        ++t;
      }
      return BrauerElem::from(d);
    }
    case BrauerGen::CUP: {
      int src = r - 2;
      if (i < 1 || i > r - 1)
        throw CatError(Err::IndexOutOfRange, "CUP index");
      BrauerDiagram d(src, r);
      d.pair(src + i - 1, src + i);
      for (int x = 0, t = 0; x < src; ++x, ++t) {
        if (t == i - 1) t += 2;
        d.pair(x, src + t);
      }
      return BrauerElem::from(d);
    }
  }
  throw CatError(Err::IndexOutOfRange, "bad generator");
}

// All perfect matchings on (r, s), deterministic order.
inline std::vector<BrauerDiagram> enumerate_basis(int r, int s) {
  if ((r + s) % 2)
    throw CatError(Err::OddBoundary, "enumerate_basis: odd boundary");
  std::vector<BrauerDiagram> out;
  BrauerDiagram d(r, s);
  std::vector<int> mate(r + s, -1);
  auto rec = [&](auto&& self, int x) -> void {
    int n = r + s;
    while (x < n && mate[x] >= 0) ++x;
    if (x >= n) {
      d.mate = mate;
      out.push_back(d);
      return;
    }
    for (int y = x + 1; y < n; ++y) {
      if (mate[y] >= 0) continue;
      mate[x] = y;
      mate[y] = x;
      self(self, x + 1);
      mate[x] = mate[y] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

// Theta = X + I - (2/delta) E in B_2 (Frac coefficients).
inline BrauerElem theta() {
  Frac two_over_delta(Poly(2), Poly::delta());
  return generator(BrauerGen::S, 1, 2) + generator(BrauerGen::ID, 1, 2) -
         (two_over_delta * generator(BrauerGen::E, 1, 2));
}

}  // namespace polarcat
