#pragma once
// Verification suites behind the command-line front end: each suite is a list
// of named relation checks (the name is the mathematical statement being
// verified) evaluated exactly.  Checks inside a suite run in parallel; the
// caller serializes the report lines.

#include <string>
#include <vector>

#include "polarcat/scalars.hpp"

namespace polarcat {

struct CheckResult {
  std::string suite;
  std::string check;  // the relation, stated as text
  bool pass = false;
};

// name in {brauer, polar, ptl, osp, uea, g2, all}; throws
// CatError(UnsupportedParameter) otherwise.
std::vector<CheckResult> run_suite(const std::string& name);

// Brauer hom-space count (r+s-1)!!; throws OddBoundary for odd r+s.
long brauer_rank(int r, int s);

}  // namespace polarcat
