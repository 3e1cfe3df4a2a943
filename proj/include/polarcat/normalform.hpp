#pragma once
// Normal forms for polar Brauer morphisms: dotted diagrams with canonical dot
// placement, the rewriting engine (normalize), symbolic closure scalars
// z_closure, and the affine-generator translation.
//
// Canonical shape of a term:
//   D_top[t0] ∘ D_top[t1] ∘ ... ∘ diagram ∘ D_bot[b_last] ∘ ... ∘ D_bot[b0]
// where D_top[q] / D_bot[p] is the pole connector attached at top position q /
// bottom position p (0-based).  Both position lists are stored outermost-first
// and sorted non-decreasing, so dots with larger anchors sit closer to the
// diagram.  Every dot is anchored at its strand's minimal endpoint: dots on
// top arcs live in the top list, dots on through strands and bottom arcs in
// the bottom list.

#include <map>
#include <vector>

#include "polarcat/brauer.hpp"
#include "polarcat/polar.hpp"
#include "polarcat/scalars.hpp"

namespace polarcat {

struct DottedDiagram {
  BrauerDiagram diagram;    // r -> s
  std::vector<int> tdots;   // top dot positions, outermost-first, sorted
  std::vector<int> bdots;   // bottom dot positions, outermost-first, sorted

  static DottedDiagram id(int r) { return {BrauerDiagram::id(r), {}, {}}; }
  int total_dots() const { return (int)(tdots.size() + bdots.size()); }
  auto operator<=>(const DottedDiagram& o) const = default;
};

// True iff the dot lists obey the canonical invariants for this diagram.
bool is_canonical(const DottedDiagram& t);

struct NormalForm {
  int r = 0, s = 0;
  std::map<DottedDiagram, Frac> terms;

  NormalForm() = default;
  NormalForm(int r_, int s_) : r(r_), s(s_) {}

  void add(const DottedDiagram& d, const Frac& c) {
    auto it = terms.find(d);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }

  friend NormalForm operator+(const NormalForm& a, const NormalForm& b) {
    NormalForm r = a;
    for (auto& [d, c] : b.terms) r.add(d, c);
    return r;
  }
  friend NormalForm operator-(const NormalForm& a, const NormalForm& b) {
    NormalForm r = a;
    for (auto& [d, c] : b.terms) r.add(d, -c);
    return r;
  }
  friend NormalForm operator*(const Frac& c, const NormalForm& a) {
    NormalForm r(a.r, a.s);
    for (auto& [d, v] : a.terms) r.add(d, c * v);
    return r;
  }
  bool operator==(const NormalForm& o) const { return (*this - o).is_zero(); }

  // Embed back into word form (canonical word of every dotted diagram).
  PolarElem to_elem() const;
};

// Canonical word of a single dotted diagram.
PolarWord word_of(const DottedDiagram& d);

// Rewrite a polar element to its dotted-diagram normal form.  The step budget
// guards non-termination; budget < 0 reads REWRITE_BUDGET from the
// environment (default 100000000).  Throws CatError(NonTermination) when the
// budget is exhausted.
NormalForm normalize(const PolarElem& a, long budget = -1);

// The closure scalar Z_l: delta for l = 0, the indeterminate z_l for even l,
// and for odd l the polynomial in lower even z's obtained by closing the
// transpose word (memoized process-wide; not thread-safe).
Frac z_closure(int l);

// Translation between the polar connector D and the affine generator Y_1 =
// D + ((1-delta)/2) ID.  from_affine reads every D in the input as Y and
// expands it; to_affine is the inverse substitution, so that reading the
// output's D as Y reproduces the input.  Brauer generators map identically.
PolarElem to_affine(const PolarElem& a);
PolarElem from_affine(const PolarElem& a);

}  // namespace polarcat
