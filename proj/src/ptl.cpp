#include "polarcat/ptl.hpp"

#include <algorithm>
#include <cstdlib>

namespace polarcat {

namespace {

// Boundary line index: top position q -> q, bottom position p -> top + (bot-1-p)
// (top read left to right, then bottom right to left).  The pole side sits at
// both ends of the line, so a strand is exposed iff its arc is not covered.
int line_index(const BrauerDiagram& d, int label) {
  if (d.is_top(label)) return d.top_pos(label);
  return d.top + (d.bot - 1 - label);
}

std::pair<int, int> line_arc(const BrauerDiagram& d, int label) {
  int a = line_index(d, label), b = line_index(d, d.mate[label]);
  if (a > b) std::swap(a, b);
  return {a, b};
}

int anchor_of(const BrauerDiagram& d, int label) {
  return std::min(label, d.mate[label]);
}

Frac two_over_delta() { return Frac(Poly(2), Poly::delta()); }

long default_budget() {
  if (const char* env = std::getenv("REWRITE_BUDGET")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 100000000L;
}

// Kinds of rewriting applied to a queued dotted diagram.
enum class Pick { Standard, DoubleDot, Diagram, BotDot, TopDot };

struct Choice {
  Pick pick = Pick::Standard;
  int index = 0;  // dot index for DoubleDot/BotDot/TopDot
  bool top = false;
};

Choice classify(const DottedDiagram& t) {
  for (size_t k = 0; k + 1 < t.tdots.size(); ++k)
    if (t.tdots[k] == t.tdots[k + 1]) return {Pick::DoubleDot, (int)k, true};
  for (size_t k = 0; k + 1 < t.bdots.size(); ++k)
    if (t.bdots[k] == t.bdots[k + 1]) return {Pick::DoubleDot, (int)k, false};
  if (!is_planar(t.diagram)) return {Pick::Diagram, 0, false};
  for (size_t k = 0; k < t.bdots.size(); ++k)
    if (!pole_exposed(t.diagram, t.bdots[k]))
      return {Pick::BotDot, (int)k, false};
  for (size_t k = 0; k < t.tdots.size(); ++k)
    if (!pole_exposed(t.diagram, t.diagram.top_label(t.tdots[k])))
      return {Pick::TopDot, (int)k, true};
  return {};
}

// Rebuild the canonical word of t, expanding S -> (2/delta) E - ID inside the
// selected segment (the diagram part, or one connector word).
PolarElem expand_term(const DottedDiagram& t, const Choice& ch) {
  int r = t.diagram.bot, s = t.diagram.top;
  PolarElem acc = PolarElem::id(r);
  auto step = [&](const PolarGen& g, bool sub) {
    PolarElem e;
    if (sub && g.k == PGen::S) {
      e = two_over_delta() * PolarElem::gen(PGen::E, g.i, g.src) -
          PolarElem::id(g.src);
    } else {
      e = PolarElem::from(PolarWord{g.src, g.tgt(), {g}});
    }
    acc = e.after(acc);
  };
  for (size_t k = 0; k < t.bdots.size(); ++k) {
    bool sub = ch.pick == Pick::BotDot && (int)k == ch.index;
    for (auto& g : hh(t.bdots[k] + 1, r).seq) step(g, sub);
  }
  for (auto& g : decompose_to_word(t.diagram))
    step(g, ch.pick == Pick::Diagram);
  for (int k = (int)t.tdots.size() - 1; k >= 0; --k) {
    bool sub = ch.pick == Pick::TopDot && k == ch.index;
    for (auto& g : hh(t.tdots[k] + 1, s).seq) step(g, sub);
  }
  return acc;
}

// Substitute higher closure variables z4, z6, ... by their Q(delta)[z2]
// values in the quotient.
Frac reduce_poly(const Poly& p) {
  Frac out(0);
  for (auto& [m, c] : p.terms) {
    Frac t = Frac(Rational(c));
    for (auto& [name, exp] : m.e) {
      Frac base;
      if (name == "delta" || name == "z2" || name == "lambda")
        base = Frac(Poly::var(name));
      else
        base = ptl_z((int)std::strtol(name.c_str() + 1, nullptr, 10));
      for (int i = 0; i < exp; ++i) t *= base;
    }
    out += t;
  }
  return out;
}

Frac reduce_coeff(const Frac& f) {
  return reduce_poly(f.num) / reduce_poly(f.den);
}

PlanarPolarDiagram planar_of(const DottedDiagram& t) {
  PlanarPolarDiagram p{t.diagram, {}};
  for (int q : t.tdots) p.marks[anchor_of(t.diagram, t.diagram.top_label(q))]++;
  for (int b : t.bdots) p.marks[anchor_of(t.diagram, b)]++;
  return p;
}

DottedDiagram dotted_of(const PlanarPolarDiagram& p) {
  DottedDiagram t{p.diagram, {}, {}};
  for (auto& [label, count] : p.marks) {
    for (int i = 0; i < count; ++i) {
      if (p.diagram.is_top(label))
        t.tdots.push_back(p.diagram.top_pos(label));
      else
        t.bdots.push_back(label);
    }
  }
  std::sort(t.tdots.begin(), t.tdots.end());
  std::sort(t.bdots.begin(), t.bdots.end());
  return t;
}

// Noncrossing matchings of the boundary line, as mate arrays on line indices.
std::vector<std::vector<int>> noncrossing_matchings(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> mate(n, -1);
  struct Rec {
    std::vector<std::vector<int>>* sink;
    void go(std::vector<int> m, std::vector<std::pair<int, int>> blocks) {
      while (!blocks.empty() && blocks.back().first >= blocks.back().second)
        blocks.pop_back();
      if (blocks.empty()) {
        sink->push_back(m);
        return;
      }
      auto [a, b] = blocks.back();
      blocks.pop_back();
      for (int j = a + 1; j < b; j += 2) {
        auto m2 = m;
        m2[a] = j;
        m2[j] = a;
        auto bl = blocks;
        bl.push_back({a + 1, j});
        bl.push_back({j + 1, b});
        go(m2, bl);
      }
    }
  };
  Rec rec{&out};
  rec.go(mate, {{0, n}});
  return out;
}

}  // namespace

bool is_planar(const BrauerDiagram& d) {
  std::vector<std::pair<int, int>> arcs;
  for (int x = 0; x < d.n(); ++x) {
    int y = d.mate[x];
    if (y < x) continue;
    arcs.push_back(line_arc(d, x));
  }
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      auto [a1, b1] = arcs[i];
      auto [a2, b2] = arcs[j];
      if (a1 > a2) {
        std::swap(a1, a2);
        std::swap(b1, b2);
      }
      if (a2 < b1 && b1 < b2) return false;
    }
  return true;
}

bool pole_exposed(const BrauerDiagram& d, int label) {
  auto [a, b] = line_arc(d, label);
  for (int x = 0; x < d.n(); ++x) {
    int y = d.mate[x];
    if (y < x) continue;
    if (x == label || x == d.mate[label]) continue;
    auto [c, e] = line_arc(d, x);
    if (c < a && b < e) return false;
  }
  return true;
}

Frac ptl_z(int k) {
  static std::map<int, Frac> memo;
  if (k < 0) throw CatError(Err::IndexOutOfRange, "closure degree");
  if (k == 0) return Frac(Poly::delta());
  if (k == 1) return Frac(0);
  if (k == 2) return Frac(Poly::z(2));
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  Frac v = Frac(Poly(2) - Poly::delta(), Poly(2)) * ptl_z(k - 1) +
           Frac(Poly::z(2), Poly::delta()) * ptl_z(k - 2);
  memo[k] = v;
  return v;
}

PolarElem PtlElem::to_elem() const {
  PolarElem out(r, s);
  for (auto& [d, c] : terms) out = out + c * PolarElem::from(word_of(dotted_of(d)));
  return out;
}

PtlElem project_ptl(const PolarElem& a, long budget) {
  long limit = budget < 0 ? default_budget() : budget;
  NormalForm nf = normalize(a, limit);
  std::map<DottedDiagram, Frac> queue = nf.terms, done;
  auto acc = [](std::map<DottedDiagram, Frac>& m, const DottedDiagram& d,
                const Frac& c) {
    auto it = m.find(d);
    if (it == m.end()) {
      if (!c.is_zero()) m[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  long steps = 0;
  while (!queue.empty()) {
    if (++steps > limit)
      throw CatError(Err::NonTermination, "quotient reduction budget exhausted");
    auto it = queue.begin();
    DottedDiagram t = it->first;
    Frac c = it->second;
    queue.erase(it);
    Choice ch = classify(t);
    if (ch.pick == Pick::Standard) {
      acc(done, t, c);
      continue;
    }
    if (ch.pick == Pick::DoubleDot) {
      // H^2 = -((delta-2)/2) H + (z2/delta) ID on the marked strand
      DottedDiagram one = t, two = t;
      auto& lone = ch.top ? one.tdots : one.bdots;
      auto& ltwo = ch.top ? two.tdots : two.bdots;
      lone.erase(lone.begin() + ch.index);
      ltwo.erase(ltwo.begin() + ch.index, ltwo.begin() + ch.index + 2);
      acc(queue, one, c * Frac(Poly(2) - Poly::delta(), Poly(2)));
      acc(queue, two, c * Frac(Poly::z(2), Poly::delta()));
      continue;
    }
    // crossing elimination (in the diagram or in one connector word)
    PolarElem sub = expand_term(t, ch);
    NormalForm nf2 = normalize(sub, limit);
    for (auto& [d, v] : nf2.terms) acc(queue, d, c * v);
  }
  PtlElem out(a.r, a.s);
  for (auto& [d, c] : done) out.add(planar_of(d), reduce_coeff(c));
  return out;
}

PtlElem ptl_compose(const PtlElem& a, const PtlElem& b) {
  return project_ptl(compose_polar(a.to_elem(), b.to_elem()));
}

std::vector<PlanarPolarDiagram> standard_basis(int r, int s) {
  if ((r + s) % 2 != 0)
    throw CatError(Err::OddBoundary, "standard_basis needs r+s even");
  int n = r + s;
  std::vector<PlanarPolarDiagram> out;
  for (auto& lm : noncrossing_matchings(n)) {
    // line index -> label
    auto label_of = [&](int li) { return li < s ? r + li : r - 1 - (li - s); };
    BrauerDiagram d;
    d.bot = r;
    d.top = s;
    d.mate.assign(n, -1);
    for (int li = 0; li < n; ++li) {
      int a = label_of(li), b = label_of(lm[li]);
      d.mate[a] = b;
    }
    // strands exposed to the pole, by anchor label
    std::vector<int> exposed;
    for (int x = 0; x < n; ++x) {
      if (d.mate[x] < x) continue;
      if (pole_exposed(d, x)) exposed.push_back(anchor_of(d, x));
    }
    std::sort(exposed.begin(), exposed.end());
    for (int mask = 0; mask < (1 << exposed.size()); ++mask) {
      PlanarPolarDiagram p{d, {}};
      for (size_t k = 0; k < exposed.size(); ++k)
        if (mask & (1 << k)) p.marks[exposed[k]] = 1;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long ptl_rank(int r, int s) {
  if ((r + s) % 2 != 0)
    throw CatError(Err::OddBoundary, "ptl_rank needs r+s even");
  return (long)standard_basis(r, s).size();
}

PtlElem tlb_specialize(const PolarElem& a, const Rational& delta0,
                       const Rational& lambda) {
  if (delta0 == 0)
    throw CatError(Err::DivisionByZero, "type-B specialization needs delta != 0");
  if (delta0 == 2)
    throw CatError(Err::UnsupportedParameter,
                   "type-B specialization degenerates at delta = 2");
  Rational z2v = -delta0 * lambda * ((delta0 - 2) / 2 - lambda);
  PtlElem p = project_ptl(a);
  PtlElem out(p.r, p.s);
  std::map<std::string, Rational> bind = {
      {"delta", delta0}, {"z2", z2v}, {"lambda", lambda}};
  for (auto& [d, c] : p.terms) out.add(d, c.specialize(bind));
  return out;
}

}  // namespace polarcat
