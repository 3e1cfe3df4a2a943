#pragma once
// Polar Brauer category words: generator sequences on objects (m, v^r),
// Jucys-Murphy sums, conjugated connectors, and transpose words.
//
// A word stores its generators in application order (seq[0] acts first).
// "A * B" in the text grammar means A applied after B.

#include <map>
#include <vector>

#include "polarcat/brauer.hpp"
#include "polarcat/scalars.hpp"

namespace polarcat {

enum class PGen { S, E, CAP, CUP, D, Z };

struct PolarGen {
  PGen k;
  int i = 0;    // generator index (S/E/CAP/CUP); closure degree for Z
  int src = 0;  // source rank

  int tgt() const {
    switch (k) {
      case PGen::CAP: return src - 2;
      case PGen::CUP: return src + 2;
      default: return src;
    }
  }
  void validate() const {
    switch (k) {
      case PGen::S:
      case PGen::E:
      case PGen::CAP:
        if (i < 1 || i > src - 1)
          throw CatError(Err::IndexOutOfRange, "generator index out of range");
        break;
      case PGen::CUP:
        if (i < 1 || i > src + 1)
          throw CatError(Err::IndexOutOfRange, "CUP index out of range");
        break;
      case PGen::D:
        if (src < 1)
          throw CatError(Err::IndexOutOfRange, "D needs rank >= 1");
        break;
      case PGen::Z:
        if (i < 1) throw CatError(Err::IndexOutOfRange, "Z degree >= 1");
        break;
    }
  }
  auto operator<=>(const PolarGen& o) const = default;
};

struct PolarWord {
  int r = 0, s = 0;            // source and target rank
  std::vector<PolarGen> seq;   // application order

  static PolarWord id(int r) { return {r, r, {}}; }
  static PolarWord gen(PGen k, int i, int src) {
    PolarGen g{k, i, src};
    g.validate();
    return {src, g.tgt(), {g}};
  }
  // this ∘ other (other first)
  PolarWord after(const PolarWord& other) const {
    if (r != other.s)
      throw CatError(Err::RankMismatch, "word composition rank mismatch");
    PolarWord w{other.r, s, other.seq};
    w.seq.insert(w.seq.end(), seq.begin(), seq.end());
    return w;
  }
  PolarWord powed(int k) const {
    if (r != s) throw CatError(Err::RankMismatch, "power of non-endo word");
    PolarWord w = id(r);
    for (int j = 0; j < k; ++j) w = after(w);
    return w;
  }
  int dot_count() const {
    int c = 0;
    for (auto& g : seq) c += g.k == PGen::D ? 1 : 0;
    return c;
  }
  auto operator<=>(const PolarWord& o) const = default;
};

class PolarElem {
 public:
  int r = 0, s = 0;
  std::map<PolarWord, Frac> terms;

  PolarElem() = default;
  PolarElem(int r_, int s_) : r(r_), s(s_) {}
  static PolarElem from(const PolarWord& w, const Frac& c = Frac(1)) {
    PolarElem e(w.r, w.s);
    if (!c.is_zero()) e.terms[w] = c;
    return e;
  }
  static PolarElem id(int rank) { return from(PolarWord::id(rank)); }
  static PolarElem gen(PGen k, int i, int src) {
    return from(PolarWord::gen(k, i, src));
  }

  void add(const PolarWord& w, const Frac& c) {
    auto it = terms.find(w);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[w] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }

  friend PolarElem operator+(const PolarElem& a, const PolarElem& b) {
    PolarElem r = a;
    for (auto& [w, c] : b.terms) r.add(w, c);
    return r;
  }
  friend PolarElem operator-(const PolarElem& a, const PolarElem& b) {
    PolarElem r = a;
    for (auto& [w, c] : b.terms) r.add(w, -c);
    return r;
  }
  friend PolarElem operator*(const Frac& c, const PolarElem& a) {
    PolarElem r(a.r, a.s);
    for (auto& [w, v] : a.terms) r.add(w, c * v);
    return r;
  }
  // this ∘ other (free word concatenation; no simplification)
  PolarElem after(const PolarElem& other) const {
    if (r != other.s)
      throw CatError(Err::RankMismatch, "compose_polar rank mismatch");
    PolarElem out(other.r, s);
    for (auto& [wa, ca] : terms)
      for (auto& [wb, cb] : other.terms) out.add(wa.after(wb), ca * cb);
    return out;
  }
  PolarElem powed(int k) const {
    PolarElem out = id(r);
    for (int j = 0; j < k; ++j) out = after(out);
    return out;
  }
};

inline PolarElem compose_polar(const PolarElem& a, const PolarElem& b) {
  return a.after(b);
}

// H_{0j}(r): the connector to strand j, as the conjugated word
// (S_{j-1}...S_1) D (S_1...S_{j-1}).
inline PolarWord hh(int j, int r) {
  if (j < 1 || j > r) throw CatError(Err::IndexOutOfRange, "hh index");
  PolarWord w = PolarWord::id(r);
  for (int i = j - 1; i >= 1; --i) w = PolarWord::gen(PGen::S, i, r).after(w);
  w = PolarWord::gen(PGen::D, 0, r).after(w);
  for (int i = 1; i <= j - 1; ++i) w = PolarWord::gen(PGen::S, i, r).after(w);
  return w;
}

// Transposition / contraction of non-adjacent strands a<b as words.
inline PolarWord s_word(int a, int b, int r) {
  // conjugate S_a by the shift bringing position b next to a
  PolarWord p = PolarWord::id(r);
  for (int i = b - 1; i >= a + 1; --i)
    p = PolarWord::gen(PGen::S, i, r).after(p);  // ...S_{a+1}∘...∘S_{b-1}
  PolarWord pinv = PolarWord::id(r);
  for (int i = a + 1; i <= b - 1; ++i)
    pinv = PolarWord::gen(PGen::S, i, r).after(pinv);
  return pinv.after(PolarWord::gen(PGen::S, a, r).after(p));
}
inline PolarWord e_word(int a, int b, int r) {
  PolarWord p = PolarWord::id(r);
  for (int i = b - 1; i >= a + 1; --i)
    p = PolarWord::gen(PGen::S, i, r).after(p);
  PolarWord pinv = PolarWord::id(r);
  for (int i = a + 1; i <= b - 1; ++i)
    pinv = PolarWord::gen(PGen::S, i, r).after(pinv);
  return pinv.after(PolarWord::gen(PGen::E, a, r).after(p));
}

// vartheta_j(r) = sum_{0 <= a < j} H_{aj}(r); the a=0 term is the connector,
// the a >= 1 terms are s_{aj} - e_{aj} on the Brauer strands.
inline PolarElem vartheta(int j, int r) {
  if (j < 1 || j > r) throw CatError(Err::IndexOutOfRange, "vartheta index");
  PolarElem out = PolarElem::from(hh(j, r));
  for (int a = 1; a < j; ++a) {
    out = out + PolarElem::from(s_word(a, j, r)) -
          PolarElem::from(e_word(a, j, r));
  }
  return out;
}

// (H^l)^T as a rank-1 endomorphism word: bend strand 1 around the connector
// power on the middle strand of rank 3.
inline PolarWord transpose_word(int l) {
  PolarWord w = PolarWord::gen(PGen::CUP, 2, 1);  // 1 -> 3, arc at (2,3)
  PolarWord mid = hh(2, 3);
  for (int i = 0; i < l; ++i) w = mid.after(w);
  return PolarWord::gen(PGen::CAP, 1, 3).after(w);
}

// Z_l closure word: 0 -> 0 on the pole object.
inline PolarWord z_word(int l) {
  PolarWord w = PolarWord::gen(PGen::CUP, 1, 0);  // 0 -> 2
  for (int i = 0; i < l; ++i) w = PolarWord::gen(PGen::D, 0, 2).after(w);
  return PolarWord::gen(PGen::CAP, 1, 2).after(w);
}

// Decompose a Brauer diagram into a generator word (S/CAP/CUP), application
// order. Used for embeddings, functor evaluation and crossing elimination.
inline std::vector<PolarGen> decompose_to_word(const BrauerDiagram& d0) {
  auto diag_of = [](const BrauerElem& e) { return e.terms.begin()->first; };
  std::vector<PolarGen> pre;  // applied first: caps and bottom swaps
  BrauerDiagram d = d0;
  // Remove bottom arcs: always pick the arc with the closest endpoints and
  // shrink it with swaps until adjacent, then cap it.
  while (true) {
    int bp = -1, bq = -1, best = 1 << 30;
    for (int p = 0; p < d.bot; ++p) {
      int q = d.mate[p];
      if (!d.is_top(q) && q > p && q - p < best) {
        best = q - p;
        bp = p;
        bq = q;
      }
    }
    if (bp < 0) break;
    if (bq == bp + 1) {
      // d = d' ∘ CAP_{bp+1}; d' is d with the arc plugged by a cup (the
      // resulting closed loop is the cap/cup cancellation, discarded).
      pre.push_back({PGen::CAP, bp + 1, d.bot});
      d = compose_diagrams(d, diag_of(generator(BrauerGen::CUP, bp + 1, d.bot)))
              .first;
    } else {
      // d = (d ∘ s_bq) ∘ s_bq; the right factor goes into the word and the
      // left factor has the arc endpoints closer together.
      pre.push_back({PGen::S, bq, d.bot});
      d = compose_diagrams(d, diag_of(generator(BrauerGen::S, bq, d.bot)))
              .first;
    }
  }
  // Remove top arcs symmetrically; these generators are applied last, in
  // reverse order of discovery.
  std::vector<PolarGen> post_rev;
  while (true) {
    int tp = -1, tq = -1, best = 1 << 30;
    for (int x = d.bot; x < d.n(); ++x) {
      int y = d.mate[x];
      if (d.is_top(y) && y > x && y - x < best) {
        best = y - x;
        tp = d.top_pos(x);
        tq = d.top_pos(y);
      }
    }
    if (tp < 0) break;
    if (tq == tp + 1) {
      post_rev.push_back({PGen::CUP, tp + 1, d.top - 2});
      d = compose_diagrams(diag_of(generator(BrauerGen::CAP, tp + 1, d.top)),
                           d)
              .first;
    } else {
      post_rev.push_back({PGen::S, tq, d.top});
      d = compose_diagrams(diag_of(generator(BrauerGen::S, tq, d.top)), d)
              .first;
    }
  }
  // Now d is a permutation; peel adjacent transpositions off the top until
  // it is the identity. p = s_j ∘ p' means s_j is applied after word(p').
  std::vector<int> p(d.bot);
  for (int i = 0; i < d.bot; ++i) p[i] = d.top_pos(d.mate[i]);
  std::vector<PolarGen> mid_rev;
  while (true) {
    int j = -1;
    for (int t = 0; t + 1 < (int)p.size() && j < 0; ++t) {
      int bt = -1, bt1 = -1;
      for (int i = 0; i < (int)p.size(); ++i) {
        if (p[i] == t) bt = i;
        if (p[i] == t + 1) bt1 = i;
      }
      if (bt > bt1) j = t;
    }
    if (j < 0) break;
    for (int i = 0; i < (int)p.size(); ++i) {
      if (p[i] == j) p[i] = j + 1;
      else if (p[i] == j + 1) p[i] = j;
    }
    mid_rev.push_back({PGen::S, j + 1, (int)p.size()});
  }
  std::vector<PolarGen> word = pre;
  for (auto it = mid_rev.rbegin(); it != mid_rev.rend(); ++it)
    word.push_back(*it);
  for (auto it = post_rev.rbegin(); it != post_rev.rend(); ++it)
    word.push_back(*it);
  return word;
}

// A Brauer element at the bottom of the ambient polar object: every diagram
// expanded into its generator word. Rank bookkeeping: diagram (r -> s) gives
// words r -> s.
inline PolarElem embed_brauer(const BrauerElem& e) {
  PolarElem out(e.bot, e.top);
  for (auto& [d, c] : e.terms) {
    PolarWord w = PolarWord::id(d.bot);
    for (auto& g : decompose_to_word(d)) {
      w.seq.push_back(g);
      w.s = g.tgt();
    }
    out.add(w, c);
  }
  return out;
}

}  // namespace polarcat
