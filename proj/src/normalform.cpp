// Rewriting engine for polar Brauer morphisms.
//
// A state is a linear combination of canonical dotted diagrams (see
// normalform.hpp for the canonical shape).  Input words are consumed
// generator by generator in application order, each generator composed on
// top of the state.  The local rules used:
//
//   * structural absorption of S / E / CAP / CUP into the Brauer diagram,
//     sliding over dot attachments at unaffected positions (exact);
//   * dot exchange at distinct boundary positions x, y:
//       D_x ∘ D_y = D_y ∘ D_x + H_{xy} ∘ D_x − D_x ∘ H_{xy}
//     (the four-term relation; corrections carry strictly fewer dots);
//   * transport of the dot adjacent to the diagram along a through strand
//     from top to bottom (exact);
//   * flip of the dot adjacent to the diagram across an arc to the other
//     endpoint, with sign −1;
//   * closure of a fully dotted arc under a cap into the scalar z_closure(k).
//
// Every rule is validated against the representation oracle in the tests
// before anything downstream relies on the engine.

#include "polarcat/normalform.hpp"

#include <cstdlib>
#include <string>
#include <utility>

namespace polarcat {

namespace {

using State = std::map<DottedDiagram, Frac>;

void acc(State& st, const DottedDiagram& d, const Frac& c) {
  auto it = st.find(d);
  if (it == st.end()) {
    if (!c.is_zero()) st[d] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) st.erase(it);
  }
}

void accs(State& dst, const State& src, const Frac& c) {
  for (auto& [d, v] : src) acc(dst, d, c * v);
}

State one(const DottedDiagram& d) { return State{{d, Frac(1)}}; }

BrauerDiagram gdiag(BrauerGen k, int i, int r) {
  return generator(k, i, r).terms.begin()->first;
}

long default_budget() {
  if (const char* env = std::getenv("REWRITE_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 100000000L;
}

struct Engine {
  long budget;
  long steps = 0;
  // During the derivation of an odd closure scalar, closures of that degree
  // are evaluated at a probe value instead of recursing.
  int deriving = 0;
  Frac deriving_value;

  explicit Engine(long b) : budget(b) {}

  void tick() {
    if (++steps > budget)
      throw CatError(Err::NonTermination,
                     "rewrite budget exhausted after " +
                         std::to_string(steps) + " steps");
  }

  template <class F>
  State fold(const State& st, F f) {
    State out;
    for (auto& [d, c] : st) accs(out, f(d), c);
    return out;
  }

  State insert_top_each(const State& st, int q) {
    return fold(st, [&](const DottedDiagram& t) { return insert_top(t, q); });
  }
  State insert_bot_each(const State& st, int p) {
    return fold(st, [&](const DottedDiagram& t) { return insert_bot(t, p); });
  }
  State push_cap_each(const State& st, int i) {
    return fold(st, [&](const DottedDiagram& t) { return push_cap(t, i); });
  }
  State glue_below_each(const State& st, int i) {
    return fold(st, [&](const DottedDiagram& t) { return glue_below(t, i); });
  }

  Frac closure_scalar(int k);

  // ---- dot insertion -----------------------------------------------------

  // Compose the connector at top position q onto a canonical term; the dot
  // enters outermost and sinks to its canonical place.
  State insert_top(DottedDiagram t, int q) {
    tick();
    const BrauerDiagram& D = t.diagram;
    int rank = D.top;
    int mt = D.mate[D.top_label(q)];
    bool is_arc = D.is_top(mt);
    int other = is_arc ? D.top_pos(mt) : -1;
    bool to_diag = !is_arc || q > other;  // through strand or wrong arc end
    State out;
    int j = 0;
    while (true) {
      tick();
      if (!to_diag && (j == (int)t.tdots.size() || t.tdots[j] >= q)) {
        t.tdots.insert(t.tdots.begin() + j, q);
        acc(out, t, Frac(1));
        return out;
      }
      if (j == (int)t.tdots.size()) {
        if (!is_arc) {
          accs(out, arrive_bot_inner(t, mt), Frac(1));
        } else {
          accs(out, bubble_out_top(t, other), Frac(-1));
        }
        return out;
      }
      // exchange the sinking dot (position q, outer) with y = tdots[j]
      int y = t.tdots[j];
      DottedDiagram base = t;
      base.tdots.assign(t.tdots.begin() + j + 1, t.tdots.end());
      State c1 = conn_top(insert_top(base, q), q, y, rank);
      State c2 = insert_top_each(conn_top(one(base), q, y, rank), q);
      for (int k = j - 1; k >= 0; --k) {
        c1 = insert_top_each(c1, t.tdots[k]);
        c2 = insert_top_each(c2, t.tdots[k]);
      }
      accs(out, c1, Frac(1));
      accs(out, c2, Frac(-1));
      ++j;
    }
  }

  // Move the innermost top dot (position pos, an arc anchor) outward to its
  // sorted slot.  t.tdots does not contain the moving dot.
  State bubble_out_top(DottedDiagram t, int pos) {
    tick();
    int rank = t.diagram.top;
    State out;
    int j = (int)t.tdots.size();
    while (j > 0 && t.tdots[j - 1] > pos) {
      tick();
      int x = t.tdots[j - 1];
      DottedDiagram base = t;
      base.tdots.assign(t.tdots.begin() + j, t.tdots.end());
      State c1 = conn_top(insert_top(base, x), x, pos, rank);
      State c2 = insert_top_each(conn_top(one(base), x, pos, rank), x);
      for (int k = j - 2; k >= 0; --k) {
        c1 = insert_top_each(c1, t.tdots[k]);
        c2 = insert_top_each(c2, t.tdots[k]);
      }
      accs(out, c1, Frac(1));
      accs(out, c2, Frac(-1));
      --j;
    }
    t.tdots.insert(t.tdots.begin() + j, pos);
    acc(out, t, Frac(1));
    return out;
  }

  // A dot arrives adjacent to the diagram on the bottom at position p (from
  // a through-strand transport or a relocation); flip across a bottom arc if
  // p is not the anchor, then move outward to the sorted slot.
  State arrive_bot_inner(DottedDiagram t, int p) {
    tick();
    int rb = t.diagram.bot;
    Frac sign(1);
    int mt = t.diagram.mate[p];
    if (!t.diagram.is_top(mt) && p > mt) {
      sign = Frac(-1);
      p = mt;
    }
    State out;
    int j = (int)t.bdots.size();
    while (j > 0 && t.bdots[j - 1] > p) {
      tick();
      int x = t.bdots[j - 1];
      DottedDiagram U = t;
      U.bdots.assign(t.bdots.begin() + j, t.bdots.end());
      // + U ∘ H_{p,x} ∘ D_p ∘ (outer rest)   − U ∘ D_p ∘ H_{p,x} ∘ (rest)
      State c1 = insert_bot_each(conn_below(one(U), p, x, rb), p);
      State c2 = conn_below(insert_bot_each(one(U), p), p, x, rb);
      for (int k = j - 2; k >= 0; --k) {
        c1 = insert_bot_each(c1, t.bdots[k]);
        c2 = insert_bot_each(c2, t.bdots[k]);
      }
      accs(out, c1, sign);
      accs(out, c2, -sign);
      --j;
    }
    t.bdots.insert(t.bdots.begin() + j, p);
    acc(out, t, sign);
    return out;
  }

  // Compose the connector at bottom position p below a canonical term; the
  // dot enters outermost on the bottom.
  State insert_bot(DottedDiagram t, int p) {
    tick();
    int rb = t.diagram.bot;
    int mt = t.diagram.mate[p];
    bool arc = !t.diagram.is_top(mt);
    bool to_diag = arc && p > mt;
    State out;
    int j = 0;
    while (true) {
      tick();
      if (!to_diag && (j == (int)t.bdots.size() || t.bdots[j] >= p)) {
        t.bdots.insert(t.bdots.begin() + j, p);
        acc(out, t, Frac(1));
        return out;
      }
      if (j == (int)t.bdots.size()) {
        // adjacent to the diagram: flip and settle
        accs(out, arrive_bot_inner(t, p), Frac(1));
        return out;
      }
      // exchange with y = bdots[j] (y applied after the moving dot);
      // corrections keep y and drop the moving dot
      int y = t.bdots[j];
      DottedDiagram U = t;
      U.bdots.assign(t.bdots.begin() + j + 1, t.bdots.end());
      State c1 = insert_bot_each(conn_below(one(U), y, p, rb), y);
      State c2 = conn_below(insert_bot_each(one(U), y), y, p, rb);
      for (int k = j - 1; k >= 0; --k) {
        c1 = insert_bot_each(c1, t.bdots[k]);
        c2 = insert_bot_each(c2, t.bdots[k]);
      }
      accs(out, c1, Frac(1));
      accs(out, c2, Frac(-1));
      ++j;
    }
  }

  // ---- structural generators on top --------------------------------------

  State push_S(const DottedDiagram& t0, int i) {
    tick();
    int rank = t0.diagram.top;
    DottedDiagram t = t0;
    t.diagram = compose_diagrams(gdiag(BrauerGen::S, i, rank), t.diagram).first;
    std::vector<int> tw = t.tdots;
    for (auto& q : tw) {
      if (q == i - 1) q = i;
      else if (q == i) q = i - 1;
    }
    t.tdots.clear();
    State st = one(t);
    for (int k = (int)tw.size() - 1; k >= 0; --k) st = insert_top_each(st, tw[k]);
    return st;
  }

  State push_cup(DottedDiagram t, int i) {
    tick();
    int rank = t.diagram.top;
    t.diagram =
        compose_diagrams(gdiag(BrauerGen::CUP, i, rank + 2), t.diagram).first;
    for (auto& q : t.tdots)
      if (q >= i - 1) q += 2;
    return one(t);
  }

  State push_cap(DottedDiagram t, int i) {
    tick();
    int rank = t.diagram.top;
    int a0 = i - 1, a1 = i;
    int lblA = t.diagram.top_label(a0), lblB = t.diagram.top_label(a1);
    BrauerDiagram capd = gdiag(BrauerGen::CAP, i, rank);
    State out;
    if (t.diagram.mate[lblA] == lblB) {
      // the cap closes the arc (a0, a1).  Transient states may carry dots on
      // the non-anchor end a1: move each inward and flip it across the arc.
      int wrong = -1;
      for (int idx = 0; idx < (int)t.tdots.size(); ++idx)
        if (t.tdots[idx] == a1) wrong = idx;
      if (wrong >= 0) {
        if (wrong + 1 < (int)t.tdots.size()) {
          int y = t.tdots[wrong + 1];
          DottedDiagram base = t;
          base.tdots.assign(t.tdots.begin() + wrong + 2, t.tdots.end());
          State c1 = conn_top(insert_top(base, a1), a1, y, rank);
          State c2 = insert_top_each(conn_top(one(base), a1, y, rank), a1);
          for (int k = wrong - 1; k >= 0; --k) {
            c1 = insert_top_each(c1, t.tdots[k]);
            c2 = insert_top_each(c2, t.tdots[k]);
          }
          accs(out, push_cap_each(c1, i), Frac(1));
          accs(out, push_cap_each(c2, i), Frac(-1));
          std::swap(t.tdots[wrong], t.tdots[wrong + 1]);
          accs(out, push_cap(t, i), Frac(1));
        } else {
          t.tdots[wrong] = a0;  // adjacent to the diagram: flip, sign -1
          accs(out, push_cap(t, i), Frac(-1));
        }
        return out;
      }
      // all loop dots sit at a0
      int last = -1;
      for (int idx = 0; idx < (int)t.tdots.size(); ++idx)
        if (t.tdots[idx] == a0) last = idx;
      if (last >= 0 && last + 1 < (int)t.tdots.size()) {
        // bubble the innermost arc dot inward past y
        int y = t.tdots[last + 1];
        DottedDiagram base = t;
        base.tdots.assign(t.tdots.begin() + last + 2, t.tdots.end());
        State c1 = conn_top(insert_top(base, a0), a0, y, rank);
        State c2 = insert_top_each(conn_top(one(base), a0, y, rank), a0);
        for (int k = last - 1; k >= 0; --k) {
          c1 = insert_top_each(c1, t.tdots[k]);
          c2 = insert_top_each(c2, t.tdots[k]);
        }
        accs(out, push_cap_each(c1, i), Frac(1));
        accs(out, push_cap_each(c2, i), Frac(-1));
        std::swap(t.tdots[last], t.tdots[last + 1]);
        accs(out, push_cap(t, i), Frac(1));
        return out;
      }
      int cnt = 0;
      for (int q : t.tdots) cnt += q == a0 ? 1 : 0;
      Frac coeff = closure_scalar(cnt);
      std::vector<int> tw;
      for (int q : t.tdots)
        if (q != a0) tw.push_back(q > a1 ? q - 2 : q);
      t.tdots = tw;
      t.diagram = compose_diagrams(capd, t.diagram).first;  // drops one loop
      acc(out, t, coeff);
      return out;
    }
    // the cap merges two distinct strands: relocate dots at the capped
    // positions, innermost occurrence first
    int idx = -1;
    for (int k = 0; k < (int)t.tdots.size(); ++k)
      if (t.tdots[k] == a0 || t.tdots[k] == a1) idx = k;
    if (idx >= 0) {
      if (idx + 1 < (int)t.tdots.size()) {
        int v = t.tdots[idx], y = t.tdots[idx + 1];
        DottedDiagram base = t;
        base.tdots.assign(t.tdots.begin() + idx + 2, t.tdots.end());
        State c1 = conn_top(insert_top(base, v), v, y, rank);
        State c2 = insert_top_each(conn_top(one(base), v, y, rank), v);
        for (int k = idx - 1; k >= 0; --k) {
          c1 = insert_top_each(c1, t.tdots[k]);
          c2 = insert_top_each(c2, t.tdots[k]);
        }
        accs(out, push_cap_each(c1, i), Frac(1));
        accs(out, push_cap_each(c2, i), Frac(-1));
        std::swap(t.tdots[idx], t.tdots[idx + 1]);
        accs(out, push_cap(t, i), Frac(1));
        return out;
      }
      int v = t.tdots[idx];
      DottedDiagram t2 = t;
      t2.tdots.pop_back();
      int mt = t.diagram.mate[t.diagram.top_label(v)];
      if (!t.diagram.is_top(mt)) {
        accs(out, push_cap_each(arrive_bot_inner(t2, mt), i), Frac(1));
      } else {
        accs(out,
             push_cap_each(bubble_out_top(t2, t.diagram.top_pos(mt)), i),
             Frac(-1));
      }
      return out;
    }
    // structural merge; the cap slides over all remaining dot attachments
    auto [nd, loops] = compose_diagrams(capd, t.diagram);
    std::vector<int> tw;
    for (int q : t.tdots) tw.push_back(q > a1 ? q - 2 : q);
    State st = one(DottedDiagram{nd, {}, {}});
    for (int k = (int)t.bdots.size() - 1; k >= 0; --k)
      st = insert_bot_each(st, t.bdots[k]);
    for (int k = (int)tw.size() - 1; k >= 0; --k) st = insert_top_each(st, tw[k]);
    return st;
  }

  State push_E(const DottedDiagram& t, int i) {
    State st = push_cap(t, i);
    return fold(st, [&](const DottedDiagram& u) { return push_cup(u, i); });
  }

  // ---- structural generators from below (needed for bottom-side
  //      correction terms H_{xy} sandwiched between bottom dots) ------------

  State push_S_below(const DottedDiagram& t0, int i) {
    tick();
    int rb = t0.diagram.bot;
    DottedDiagram t = t0;
    t.diagram = compose_diagrams(t.diagram, gdiag(BrauerGen::S, i, rb)).first;
    std::vector<int> bw = t.bdots;
    for (auto& p : bw) {
      if (p == i - 1) p = i;
      else if (p == i) p = i - 1;
    }
    t.bdots.clear();
    State st = one(t);
    for (int k = (int)bw.size() - 1; k >= 0; --k) st = insert_bot_each(st, bw[k]);
    return st;
  }

  // t ∘ CUP_i: the cup glues the term's bottom positions (i-1, i)
  State glue_below(DottedDiagram t, int i) {
    tick();
    int rb = t.diagram.bot;
    int b0 = i - 1, b1 = i;
    BrauerDiagram cupd = gdiag(BrauerGen::CUP, i, rb);
    State out;
    if (t.diagram.mate[b0] == b1) {
      // eliminate dots on the non-anchor end b1 first (see push_cap)
      int wrong = -1;
      for (int idx = 0; idx < (int)t.bdots.size(); ++idx)
        if (t.bdots[idx] == b1) wrong = idx;
      if (wrong >= 0) {
        if (wrong + 1 < (int)t.bdots.size()) {
          int y = t.bdots[wrong + 1];
          DottedDiagram U = t;
          U.bdots.assign(t.bdots.begin() + wrong + 2, t.bdots.end());
          State c1 = insert_bot_each(conn_below(one(U), y, b1, rb), y);
          State c2 = conn_below(insert_bot_each(one(U), y), y, b1, rb);
          for (int k = wrong - 1; k >= 0; --k) {
            c1 = insert_bot_each(c1, t.bdots[k]);
            c2 = insert_bot_each(c2, t.bdots[k]);
          }
          accs(out, glue_below_each(c1, i), Frac(1));
          accs(out, glue_below_each(c2, i), Frac(-1));
          std::swap(t.bdots[wrong], t.bdots[wrong + 1]);
          accs(out, glue_below(t, i), Frac(1));
        } else {
          t.bdots[wrong] = b0;
          accs(out, glue_below(t, i), Frac(-1));
        }
        return out;
      }
      int last = -1;
      for (int idx = 0; idx < (int)t.bdots.size(); ++idx)
        if (t.bdots[idx] == b0) last = idx;
      if (last >= 0 && last + 1 < (int)t.bdots.size()) {
        int y = t.bdots[last + 1];
        DottedDiagram U = t;
        U.bdots.assign(t.bdots.begin() + last + 2, t.bdots.end());
        State c1 = insert_bot_each(conn_below(one(U), y, b0, rb), y);
        State c2 = conn_below(insert_bot_each(one(U), y), y, b0, rb);
        for (int k = last - 1; k >= 0; --k) {
          c1 = insert_bot_each(c1, t.bdots[k]);
          c2 = insert_bot_each(c2, t.bdots[k]);
        }
        accs(out, glue_below_each(c1, i), Frac(1));
        accs(out, glue_below_each(c2, i), Frac(-1));
        std::swap(t.bdots[last], t.bdots[last + 1]);
        accs(out, glue_below(t, i), Frac(1));
        return out;
      }
      int cnt = 0;
      for (int p : t.bdots) cnt += p == b0 ? 1 : 0;
      Frac coeff = closure_scalar(cnt);
      std::vector<int> bw;
      for (int p : t.bdots)
        if (p != b0) bw.push_back(p > b1 ? p - 2 : p);
      t.bdots = bw;
      t.diagram = compose_diagrams(t.diagram, cupd).first;  // drops one loop
      acc(out, t, coeff);
      return out;
    }
    int idx = -1;
    for (int k = 0; k < (int)t.bdots.size(); ++k)
      if (t.bdots[k] == b0 || t.bdots[k] == b1) idx = k;
    if (idx >= 0) {
      if (idx + 1 < (int)t.bdots.size()) {
        int v = t.bdots[idx], y = t.bdots[idx + 1];
        DottedDiagram U = t;
        U.bdots.assign(t.bdots.begin() + idx + 2, t.bdots.end());
        State c1 = insert_bot_each(conn_below(one(U), y, v, rb), y);
        State c2 = conn_below(insert_bot_each(one(U), y), y, v, rb);
        for (int k = idx - 1; k >= 0; --k) {
          c1 = insert_bot_each(c1, t.bdots[k]);
          c2 = insert_bot_each(c2, t.bdots[k]);
        }
        accs(out, glue_below_each(c1, i), Frac(1));
        accs(out, glue_below_each(c2, i), Frac(-1));
        std::swap(t.bdots[idx], t.bdots[idx + 1]);
        accs(out, glue_below(t, i), Frac(1));
        return out;
      }
      int v = t.bdots[idx];
      DottedDiagram t2 = t;
      t2.bdots.pop_back();
      int mt = t.diagram.mate[v];
      if (t.diagram.is_top(mt)) {
        // transport up along the through strand; the dot stays innermost on
        // top until the final reinsertion re-homes it
        t2.tdots.push_back(t.diagram.top_pos(mt));
        accs(out, glue_below(t2, i), Frac(1));
      } else {
        // flip across the bottom arc to its other endpoint
        t2.bdots.push_back(mt);
        accs(out, glue_below(t2, i), Frac(-1));
      }
      return out;
    }
    auto [nd, loops] = compose_diagrams(t.diagram, cupd);
    std::vector<int> bw;
    for (int p : t.bdots) bw.push_back(p > b1 ? p - 2 : p);
    State st = one(DottedDiagram{nd, {}, {}});
    for (int k = (int)bw.size() - 1; k >= 0; --k) st = insert_bot_each(st, bw[k]);
    for (int k = (int)t.tdots.size() - 1; k >= 0; --k)
      st = insert_top_each(st, t.tdots[k]);
    return st;
  }

  // t ∘ CAP_i: a new undotted bottom arc
  State add_bot_arc(DottedDiagram t, int i) {
    tick();
    int rb = t.diagram.bot;
    t.diagram =
        compose_diagrams(t.diagram, gdiag(BrauerGen::CAP, i, rb + 2)).first;
    for (auto& p : t.bdots)
      if (p >= i - 1) p += 2;
    return one(t);
  }

  State push_E_below(const DottedDiagram& t, int i) {
    State st = glue_below(t, i);
    return fold(st, [&](const DottedDiagram& u) { return add_bot_arc(u, i); });
  }

  // ---- connectors H_{xy} = s_{xy} - e_{xy} at boundary positions x != y ---

  State apply_struct_top(const State& st0, const std::vector<PolarGen>& seq) {
    State st = st0;
    for (auto& g : seq) {
      if (g.k == PGen::S)
        st = fold(st, [&](const DottedDiagram& t) { return push_S(t, g.i); });
      else
        st = fold(st, [&](const DottedDiagram& t) { return push_E(t, g.i); });
    }
    return st;
  }
  State apply_struct_below(const State& st0, const std::vector<PolarGen>& seq) {
    State st = st0;
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      if (it->k == PGen::S)
        st = fold(st,
                  [&](const DottedDiagram& t) { return push_S_below(t, it->i); });
      else
        st = fold(st,
                  [&](const DottedDiagram& t) { return push_E_below(t, it->i); });
    }
    return st;
  }

  State conn_top(const State& st, int x, int y, int rank) {
    int a = std::min(x, y) + 1, b = std::max(x, y) + 1;
    State sp = apply_struct_top(st, s_word(a, b, rank).seq);
    State ep = apply_struct_top(st, e_word(a, b, rank).seq);
    State out = sp;
    accs(out, ep, Frac(-1));
    return out;
  }
  State conn_below(const State& st, int x, int y, int rank) {
    int a = std::min(x, y) + 1, b = std::max(x, y) + 1;
    State sp = apply_struct_below(st, s_word(a, b, rank).seq);
    State ep = apply_struct_below(st, e_word(a, b, rank).seq);
    State out = sp;
    accs(out, ep, Frac(-1));
    return out;
  }

  // ---- top-level word consumption ----------------------------------------

  State apply_gen(const State& st, const PolarGen& g) {
    switch (g.k) {
      case PGen::S:
        return fold(st, [&](const DottedDiagram& t) { return push_S(t, g.i); });
      case PGen::E:
        return fold(st, [&](const DottedDiagram& t) { return push_E(t, g.i); });
      case PGen::CAP:
        return fold(st,
                    [&](const DottedDiagram& t) { return push_cap(t, g.i); });
      case PGen::CUP:
        return fold(st,
                    [&](const DottedDiagram& t) { return push_cup(t, g.i); });
      case PGen::D:
        return insert_top_each(st, 0);
      case PGen::Z: {
        Frac c = closure_scalar(g.i);
        State out;
        accs(out, st, c);
        return out;
      }
    }
    throw CatError(Err::SyntaxError, "unknown generator");
  }

  State run_word(const PolarWord& w) {
    State st = one(DottedDiagram::id(w.r));
    for (auto& g : w.seq) {
      g.validate();
      st = apply_gen(st, g);
    }
    return st;
  }
};

Frac Engine::closure_scalar(int k) {
  if (k == 0) return Frac(Poly::delta());
  if (k % 2 == 0) return Frac(Poly::z(k));
  if (k == deriving) return deriving_value;
  return z_closure(k);
}

}  // namespace

Frac z_closure(int l) {
  if (l < 0) throw CatError(Err::IndexOutOfRange, "z_closure degree");
  if (l == 0) return Frac(Poly::delta());
  if (l % 2 == 0) return Frac(Poly::z(l));
  static std::map<int, Frac> memo;
  auto it = memo.find(l);
  if (it != memo.end()) return it->second;
  // Close the transpose word of degree l.  The closure of the result is the
  // same scalar Z_l, giving the equation z_l = E(z_l).  A branch can close at
  // most one degree-l loop (each closure consumes l dots and the word only
  // carries l), so E is affine-linear in z_l; probe it at three values.
  auto eval_at = [l](const Frac& v) {
    Engine e(default_budget());
    e.deriving = l;
    e.deriving_value = v;
    State nf = e.run_word(transpose_word(l));
    Frac E(0);
    for (auto& [dd, c] : nf) {
      int k = dd.total_dots();
      Frac zeta = (k == l) ? v : z_closure(k);
      E += c * zeta;
    }
    return E;
  };
  Frac E0 = eval_at(Frac(0));
  Frac E1 = eval_at(Frac(1)) - E0;
  std::string name = "z" + std::to_string(l);
  if (!(eval_at(Frac(2)) - E0 - E1 - E1).is_zero())
    throw CatError(Err::SolveUnderdetermined,
                   "closure equation not linear in " + name);
  Frac den = Frac(1) - E1;
  if (den.is_zero())
    throw CatError(Err::SolveUnderdetermined,
                   "closure equation degenerate for " + name);
  Frac val = E0 / den;
  memo[l] = val;
  return val;
}

bool is_canonical(const DottedDiagram& t) {
  const BrauerDiagram& D = t.diagram;
  for (size_t k = 0; k + 1 < t.tdots.size(); ++k)
    if (t.tdots[k] > t.tdots[k + 1]) return false;
  for (size_t k = 0; k + 1 < t.bdots.size(); ++k)
    if (t.bdots[k] > t.bdots[k + 1]) return false;
  for (int q : t.tdots) {
    if (q < 0 || q >= D.top) return false;
    int mt = D.mate[D.top_label(q)];
    if (!D.is_top(mt) || D.top_pos(mt) < q) return false;
  }
  for (int p : t.bdots) {
    if (p < 0 || p >= D.bot) return false;
    int mt = D.mate[p];
    if (!D.is_top(mt) && mt < p) return false;
  }
  return true;
}

PolarWord word_of(const DottedDiagram& d) {
  int r = d.diagram.bot, s = d.diagram.top;
  PolarWord w = PolarWord::id(r);
  for (int p : d.bdots) w = hh(p + 1, r).after(w);
  for (auto& g : decompose_to_word(d.diagram)) {
    w.seq.push_back(g);
    w.s = g.tgt();
  }
  for (int k = (int)d.tdots.size() - 1; k >= 0; --k)
    w = hh(d.tdots[k] + 1, s).after(w);
  return w;
}

PolarElem NormalForm::to_elem() const {
  PolarElem out(r, s);
  for (auto& [d, c] : terms) out.add(word_of(d), c);
  return out;
}

NormalForm normalize(const PolarElem& a, long budget) {
  Engine e(budget < 0 ? default_budget() : budget);
  NormalForm nf(a.r, a.s);
  for (auto& [w, c] : a.terms) {
    State st = e.run_word(w);
    for (auto& [d, v] : st) nf.add(d, c * v);
  }
  return nf;
}

namespace {

PolarElem subst_connector(const PolarElem& a, const Frac& shift) {
  PolarElem out(a.r, a.s);
  for (auto& [w, c] : a.terms) {
    PolarElem acc = PolarElem::id(w.r);
    for (auto& g : w.seq) {
      PolarElem step;
      if (g.k == PGen::D) {
        step = PolarElem::gen(PGen::D, 0, g.src) +
               shift * PolarElem::id(g.src);
      } else {
        step = PolarElem::from(PolarWord{g.src, g.tgt(), {g}});
      }
      acc = step.after(acc);
    }
    out = out + c * acc;
  }
  return out;
}

}  // namespace

PolarElem from_affine(const PolarElem& a) {
  Frac shift(Poly(1) - Poly::delta(), Poly(2));
  return subst_connector(a, shift);
}

PolarElem to_affine(const PolarElem& a) {
  Frac shift(Poly::delta() - Poly(1), Poly(2));
  return subst_connector(a, shift);
}

}  // namespace polarcat
