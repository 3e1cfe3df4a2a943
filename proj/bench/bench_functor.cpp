// Compares the OpenMP column-parallel functor evaluation against the serial
// reference on a batch of medium-sized words and checks the results agree.

#include <chrono>
#include <iostream>
#include <vector>

#include "polarcat/superlin.hpp"

using namespace polarcat;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main() {
  std::vector<std::pair<int, int>> reps = {{3, 0}, {5, 0}, {2, 1}};
  std::vector<PolarElem> cases = {
      vartheta(2, 2).powed(2),
      vartheta(3, 3),
      vartheta(3, 3).powed(2),
      PolarElem::from(hh(2, 3).after(hh(3, 3)).after(hh(1, 3))),
  };
  for (auto [m, n] : reps) {
    for (size_t i = 0; i < cases.size(); ++i) {
      RepCtx c1 = osp_rep_ctx(m, n), c2 = osp_rep_ctx(m, n);
      auto t0 = Clock::now();
      QMat a = functor_eval(c1, cases[i], false);
      auto t1 = Clock::now();
      QMat b = functor_eval(c2, cases[i], true);
      auto t2 = Clock::now();
      double ts = secs(t0, t1), tp = secs(t1, t2);
      std::cout << "osp(" << m << "|" << 2 * n << ") case " << i
                << ": serial " << ts << "s, parallel " << tp << "s, speedup "
                << (tp > 0 ? ts / tp : 0.0)
                << (a == b ? "" : "  MISMATCH") << "\n";
      if (!(a == b)) return 1;
    }
  }
  return 0;
}
