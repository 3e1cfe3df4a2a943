#pragma once
// Graded linear algebra and orthosymplectic representation data:
//   - GradedSpace / SuperMatrix with Koszul-signed tensor products,
//   - osp(m|2n) defining data (form, basis, tau, cap/cup, Casimir element),
//   - truncated Verma modules for osp(0|2),
//   - exact evaluation of polar category words on m ⊗ v^{⊗r}.
//
// The evaluator is used both as the target of the diagram functor and as the
// independent oracle the symbolic normalizer is tested against.

#include <tuple>
#include <vector>

#include "polarcat/linalg.hpp"
#include "polarcat/polar.hpp"
#include "polarcat/scalars.hpp"

namespace polarcat {

struct GradedSpace {
  std::vector<int> par;  // 0 even, 1 odd, per basis vector

  int dim() const { return (int)par.size(); }
  int sdim() const {
    int s = 0;
    for (int p : par) s += p ? -1 : 1;
    return s;
  }
  static GradedSpace mn(int m, int n) {
    GradedSpace g;
    g.par.assign(m, 0);
    g.par.insert(g.par.end(), 2 * n, 1);
    return g;
  }
  GradedSpace tensor(const GradedSpace& o) const {
    GradedSpace r;
    for (int a : par)
      for (int b : o.par) r.par.push_back((a + b) % 2);
    return r;
  }
};

// Homogeneous linear map with a parity.
struct SuperMatrix {
  QMat mat;
  int parity = 0;
};

// Koszul-signed Kronecker product: (A ⊗ B)(v ⊗ w) = (-1)^{|B||v|} Av ⊗ Bw.
// `col_par_a` holds the parities of A's column space basis.
inline QMat super_kron(const QMat& A, const QMat& B,
                       const std::vector<int>& col_par_a, int par_b) {
  QMat r(A.rows * B.rows, A.cols * B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Rational& av = A(i, k);
      if (av == 0) continue;
      Rational signed_av = (par_b && col_par_a[k]) ? -av : av;
      for (int j = 0; j < B.rows; ++j)
        for (int l = 0; l < B.cols; ++l) {
          const Rational& bv = B(j, l);
          if (bv != 0) r(i * B.rows + j, k * B.cols + l) = signed_av * bv;
        }
    }
  return r;
}

inline Rational supertrace(const QMat& A, const std::vector<int>& par) {
  Rational t(0);
  for (int i = 0; i < A.rows; ++i) t += par[i] ? -A(i, i) : A(i, i);
  return t;
}

struct OspData {
  int m = 0, n = 0;
  GradedSpace V;
  QMat g, ginv;               // supersymmetric form and its inverse
  std::vector<QMat> basis;    // Lie superalgebra basis J_{ab}
  std::vector<int> basis_par;
  // tempered Casimir element: t = sum coeff * J_k ⊗ J_l
  struct TPair {
    int k, l;
    Rational coeff;
  };
  std::vector<TPair> tpairs;
  QMat casimir_v;             // action of the Casimir on V

  int dim() const { return V.dim(); }
  int sdim() const { return V.sdim(); }
};

OspData osp_build(int m, int n);

// tau on V ⊗ V: v ⊗ w -> (-1)^{|v||w|} w ⊗ v.
QMat tau(const OspData& o);
// evaluation (1 x d^2) and coevaluation (d^2 x 1) of the form.
std::pair<QMat, QMat> cap_cup(const OspData& o);

// Action of the tempered Casimir t on M ⊗ M' given the actions of the basis
// on each factor; `par_m` are the basis parities of the left factor.
QMat tempered_casimir(const OspData& o, const std::vector<QMat>& mu_left,
                      const std::vector<int>& par_left,
                      const std::vector<QMat>& mu_right);

// Truncated Verma module for osp(0|2) ≅ sp_2 with highest weight lambda and
// window m_0..m_K:  T m_k = (lambda-2k) m_k,  X m_k = k(lambda-k+1) m_{k-1},
// Y m_k = m_{k+1}.  Applying Y to m_K leaves the window (CutoffExceeded at
// evaluation time).
struct TruncVerma {
  Rational lambda;
  int cutoff = 0;  // K
  QMat T, X, Y;    // (K+1) x (K+1)
};
TruncVerma trunc_verma(const Rational& lambda, int cutoff);

// Evaluation context: the pole object M together with V-strand data.
struct RepCtx {
  OspData osp;
  int dim_m = 1;
  std::vector<int> par_m;  // parities of M's basis
  // connector t = sum pairs (A on M, B on V), sparse triplets
  struct Triplet {
    int r, c;
    Rational v;
  };
  struct HPair {
    std::vector<Triplet> A, B;
    std::vector<char> bad_a;  // columns of A where the true action leaves M
    int par_b = 0;
  };
  std::vector<HPair> hpairs;
  std::map<std::string, Rational> bind;  // delta (and lambda for Vermas)
  std::map<int, Rational> zcache;        // closure values, computed on demand
  bool is_verma = false;
  Rational lambda;
  int cutoff = -1;
};

// M = V (defining representation of osp(m|2n)).
RepCtx osp_rep_ctx(int m, int n);
// M = trivial module (pure Brauer evaluation; words must not contain D).
RepCtx trivial_rep_ctx(int m, int n);
// M = truncated Verma of osp(0|2).
RepCtx verma_rep_ctx(const Rational& lambda, int cutoff);

// Closure value z_l for this context (scalar of the degree-l closed connector
// loop). Cached. For Vermas this is computed on a wide enough internal window
// regardless of ctx.cutoff.
Rational z_value(RepCtx& ctx, int l);

// Apply a word to a dense vector on M ⊗ V^{⊗ w.r}; returns a vector on
// M ⊗ V^{⊗ w.s}. Exact; throws CutoffExceeded on Verma window overflow.
std::vector<Rational> apply_word(RepCtx& ctx, const PolarWord& w,
                                 const std::vector<Rational>& vec);

// Full matrix of an element (dim_m d^s x dim_m d^r). `parallel` toggles the
// OpenMP column loop; the serial path is the reference implementation.
QMat functor_eval(RepCtx& ctx, const PolarElem& elem, bool parallel = true);

// Selected columns only (probe evaluation for large spaces). Result has
// one column per entry of `cols`.
QMat functor_eval_columns(RepCtx& ctx, const PolarElem& elem,
                          const std::vector<int>& cols, bool parallel = true);

// Brauer elements evaluated on V-strands only.
QMat functor_eval_brauer(RepCtx& ctx, const BrauerElem& elem,
                         bool parallel = true);

// Dimension of the weight-zero subspace of v^{⊗2N} for osp(0|2)-weights:
// binomial(2N, N).
Rational hom_dim_weightzero(int N);

}  // namespace polarcat
