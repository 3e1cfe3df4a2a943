#pragma once
// Text form of polar morphisms:
//   expr := term ('+' term)*
//   term := [coeff '*'] factor ('*' factor)*
//   factor := gen ['^' int] | '(' expr ')' ['^' int]
//   gen  := ('S'|'E'|'CAP'|'CUP') i '@' r | ('D'|'ID') '@' r | 'Z' l
// 'A * B' is composition with B applied first; '@r' annotates the source
// rank of the generator.  Coefficients are scalar expressions over the
// indeterminates delta, z2, z3, ..., lambda with + - * / ^ and parentheses.
//
// parse_morphism produces a rank-checked AST; errors carry line/column
// diagnostics (SyntaxError) or the two offending ranks (RankMismatch).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polarcat/polar.hpp"

namespace polarcat {

struct MorphismAst;

struct AstGen {
  PGen k = PGen::D;
  int i = 0;     // generator index; closure degree for Z
  int rank = 0;  // source rank annotation; unresolved (-1) for Z
  bool operator==(const AstGen&) const = default;
};

struct AstFactor {
  std::optional<AstGen> gen;           // leaf
  std::shared_ptr<MorphismAst> group;  // parenthesized subexpression
  int power = 1;
};

struct AstTerm {
  bool has_coeff = false;
  Frac coeff = Frac(1);
  std::vector<AstFactor> factors;
};

struct MorphismAst {
  int r = 0, s = 0;  // checked ranks of the whole expression
  std::vector<AstTerm> terms;
};

MorphismAst parse_morphism(const std::string& text);

// Canonical text of an AST; parse_morphism(print_morphism(a)) denotes the
// same element.
std::string print_morphism(const MorphismAst& a);

// Expand the AST into the free word algebra (ranks re-checked on the way).
PolarElem ast_to_elem(const MorphismAst& a);

}  // namespace polarcat
