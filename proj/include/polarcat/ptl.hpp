#pragma once
// Polar Temperley-Lieb quotient: crossings are eliminated through the ideal
// relation S = (2/delta) E - ID, repeated connectors on a strand reduce via
// the quadratic rule H^2 = -((delta-2)/2) H + (z2/delta) ID, and connectors
// end up on pole-exposed strands only.  The resulting standard diagrams
// (planar matching + at most one connector mark per exposed strand) span the
// quotient, with rank C(2N, N), N = (r+s)/2.
//
// The reduction keeps delta symbolic and is deterministic, but the quotient
// is only a free module on the standard diagrams when delta = -2: the
// substitution S -> (2/delta)E - ID respects the braid relation exactly for
// delta = ±2, and for other delta the Theta-ideal identifies some planar
// diagrams (e.g. E_2 = E_1 E_2 up to a (delta+2)/delta multiple).  All
// functorial statements (projection commutes with composition, Verma
// factorization) therefore hold after specializing delta = -2.

#include <map>
#include <vector>

#include "polarcat/normalform.hpp"

namespace polarcat {

struct PlanarPolarDiagram {
  BrauerDiagram diagram;     // crossingless matching
  std::map<int, int> marks;  // connector count per strand, keyed by the
                             // strand's minimal endpoint label

  auto operator<=>(const PlanarPolarDiagram& o) const = default;
};

// Planarity of a Brauer diagram: boundary points on the rectangle read as a
// line (top left-to-right, then bottom right-to-left); no two arcs may cross.
bool is_planar(const BrauerDiagram& d);

// True iff the strand through `label` can reach the pole side without
// crossing another strand (its arc is outermost in the boundary line).
bool pole_exposed(const BrauerDiagram& d, int label);

struct PtlElem {
  int r = 0, s = 0;
  std::map<PlanarPolarDiagram, Frac> terms;

  PtlElem() = default;
  PtlElem(int r_, int s_) : r(r_), s(s_) {}

  void add(const PlanarPolarDiagram& d, const Frac& c) {
    auto it = terms.find(d);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }

  friend PtlElem operator+(const PtlElem& a, const PtlElem& b) {
    PtlElem r = a;
    for (auto& [d, c] : b.terms) r.add(d, c);
    return r;
  }
  friend PtlElem operator-(const PtlElem& a, const PtlElem& b) {
    PtlElem r = a;
    for (auto& [d, c] : b.terms) r.add(d, -c);
    return r;
  }
  friend PtlElem operator*(const Frac& c, const PtlElem& a) {
    PtlElem r(a.r, a.s);
    for (auto& [d, v] : a.terms) r.add(d, c * v);
    return r;
  }
  bool operator==(const PtlElem& o) const { return (*this - o).is_zero(); }

  // Lift back into the polar category (marks become connector words).
  PolarElem to_elem() const;
};

// Image of a polar element in the Temperley-Lieb quotient, written in the
// standard-diagram span.  Coefficients live in Q(delta)[z2].
PtlElem project_ptl(const PolarElem& a, long budget = -1);

// Composition inside the planar calculus.
PtlElem ptl_compose(const PtlElem& a, const PtlElem& b);

// The closure scalar of a k-connector loop in the quotient, as an element of
// Q(delta)[z2]:  Z_0 = delta, Z_1 = 0, Z_k = -((delta-2)/2) Z_{k-1}
// + (z2/delta) Z_{k-2}.
Frac ptl_z(int k);

// Deterministic enumeration of the standard diagrams r -> s.
std::vector<PlanarPolarDiagram> standard_basis(int r, int s);

// |standard_basis(r, s)| = C(r+s, (r+s)/2).  Throws OddBoundary for odd r+s.
long ptl_rank(int r, int s);

// Type-B specialization: delta -> delta0, z2 -> -delta0 lambda
// ((delta0-2)/2 - lambda), lambda bound.  delta0 = 0 is DivisionByZero,
// delta0 = 2 is UnsupportedParameter (quotient degenerates).
PtlElem tlb_specialize(const PolarElem& a, const Rational& delta0,
                       const Rational& lambda);

}  // namespace polarcat
