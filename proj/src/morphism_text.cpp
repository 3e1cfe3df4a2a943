#include "polarcat/morphism_text.hpp"

#include <cctype>

namespace polarcat {

namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg, size_t at) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < at && i < src.size(); ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw CatError(Err::SyntaxError, "line " + std::to_string(line) + ", col " +
                                         std::to_string(col) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos); }

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  bool peek_digit() { return std::isdigit((unsigned char)peek()); }
  bool peek_alpha() { return std::isalpha((unsigned char)peek()); }

  long parse_int() {
    skip_ws();
    if (pos >= src.size() || !std::isdigit((unsigned char)src[pos]))
      fail("expected an integer");
    long v = 0;
    while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
      v = v * 10 + (src[pos] - '0');
      ++pos;
    }
    return v;
  }

  std::string parse_word() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isalpha((unsigned char)src[pos])) ++pos;
    if (pos == start) fail("expected a name");
    return src.substr(start, pos - start);
  }

  // ---- scalar expressions ------------------------------------------------
  // sexpr := sterm (('+'|'-') sterm)*
  // sterm := sfactor (('*'|'/') sfactor)*
  // sfactor := ['-'] satom ['^' int]
  // satom := int | 'delta' | 'lambda' | 'z' int | '(' sexpr ')'
  // Scalar atom names are lowercase; generators are uppercase, so an
  // uppercase letter aborts the speculative coefficient parse.

  bool try_satom(Frac& out) {
    if (peek_digit()) {
      out = Frac(Rational(parse_int()));
      return true;
    }
    if (eat('(')) {
      Frac inner;
      if (!try_sexpr(inner)) return false;
      if (!eat(')')) return false;
      out = inner;
      return true;
    }
    if (!peek_alpha() || std::isupper((unsigned char)peek())) return false;
    size_t save = pos;
    std::string w = parse_word();
    if (w == "delta") {
      out = Frac(Poly::delta());
      return true;
    }
    if (w == "lambda") {
      out = Frac(Poly::lambda_());
      return true;
    }
    if (w == "z" && peek_digit()) {
      out = Frac(Poly::z((int)parse_int()));
      return true;
    }
    pos = save;
    return false;
  }

  bool try_sfactor(Frac& out) {
    bool neg = false;
    while (eat('-')) neg = !neg;
    Frac a;
    if (!try_satom(a)) return false;
    if (eat('^')) {
      if (!peek_digit()) return false;
      long k = parse_int();
      Frac p(Rational(1));
      for (long j = 0; j < k; ++j) p *= a;
      a = p;
    }
    if (neg) a = -a;
    out = a;
    return true;
  }

  bool try_sterm(Frac& out) {
    Frac a;
    if (!try_sfactor(a)) return false;
    while (true) {
      skip_ws();
      size_t save = pos;
      if (eat('*')) {
        Frac b;
        if (!try_sfactor(b)) {
          pos = save;  // '*' belongs to the morphism product
          break;
        }
        a *= b;
      } else if (eat('/')) {
        Frac b;
        if (!try_sfactor(b)) return false;
        if (b.is_zero()) fail("division by zero in coefficient", save);
        a = a / b;
      } else {
        break;
      }
    }
    out = a;
    return true;
  }

  bool try_sexpr(Frac& out) {
    Frac a;
    if (!try_sterm(a)) return false;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos;
      Frac b;
      if (!try_sterm(b)) return false;
      a = c == '+' ? a + b : a - b;
    }
    out = a;
    return true;
  }

  // ---- morphisms ---------------------------------------------------------

  AstGen parse_gen() {
    size_t at = pos;
    std::string name = parse_word();
    AstGen g;
    bool indexed = true, ranked = true;
    if (name == "S") g.k = PGen::S;
    else if (name == "E") g.k = PGen::E;
    else if (name == "CAP") g.k = PGen::CAP;
    else if (name == "CUP") g.k = PGen::CUP;
    else if (name == "D") { g.k = PGen::D; indexed = false; }
    else if (name == "ID") { g.k = PGen::S; indexed = false; }  // marker, below
    else if (name == "Z") { g.k = PGen::Z; ranked = false; }
    else fail("unknown generator '" + name + "'", at);
    bool is_id = name == "ID";
    if (indexed || g.k == PGen::Z) {
      if (!peek_digit()) fail("generator '" + name + "' needs an index");
      g.i = (int)parse_int();
    }
    if (ranked) {
      expect('@', "(rank annotation)");
      g.rank = (int)parse_int();
    } else {
      g.rank = -1;  // resolved against the neighbours later
    }
    if (is_id) {
      // represent identity as an empty group so ranks still check
      g.k = PGen::D;
      g.i = -1;  // flag; consumed by caller
    }
    return g;
  }

  AstFactor parse_factor(MorphismAst (*parse_expr)(Parser&)) {
    AstFactor f;
    if (eat('(')) {
      f.group = std::make_shared<MorphismAst>(parse_expr(*this));
      expect(')', "to close the group");
    } else {
      f.gen = parse_gen();
    }
    if (eat('^')) {
      if (!peek_digit()) fail("expected an integer power");
      f.power = (int)parse_int();
    }
    return f;
  }

  AstTerm parse_term(MorphismAst (*parse_expr)(Parser&)) {
    AstTerm t;
    // speculative coefficient: scalar expression followed by '*'
    size_t save = pos;
    Frac c;
    if (try_sexpr(c)) {
      size_t after = pos;
      if (eat('*')) {
        t.has_coeff = true;
        t.coeff = c;
      } else {
        pos = save;
        (void)after;
      }
    } else {
      pos = save;
    }
    t.factors.push_back(parse_factor(parse_expr));
    while (true) {
      skip_ws();
      size_t mark = pos;
      if (!eat('*')) break;
      if (at_end()) fail("dangling '*'", mark);
      t.factors.push_back(parse_factor(parse_expr));
    }
    return t;
  }
};

MorphismAst parse_expr_impl(Parser& p);

MorphismAst parse_expr_entry(Parser& p) { return parse_expr_impl(p); }

// Rank of a factor as (src, tgt); Z factors report (-1, -1).
std::pair<int, int> factor_rank(const AstFactor& f);

std::pair<int, int> ast_rank(const MorphismAst& a) { return {a.r, a.s}; }

[[noreturn]] void rank_fail(int a, int b, const std::string& what) {
  throw CatError(Err::RankMismatch, what + ": rank " + std::to_string(a) +
                                        " vs rank " + std::to_string(b));
}

std::pair<int, int> term_rank(const AstTerm& t);

std::pair<int, int> factor_rank(const AstFactor& f) {
  int r, s;
  if (f.gen) {
    const AstGen& g = *f.gen;
    if (g.k == PGen::Z && g.rank < 0) return {-1, -1};
    if (g.i == -1) {  // identity marker
      r = s = g.rank;
    } else {
      PolarGen pg{g.k, g.i, g.rank};
      pg.validate();
      r = g.rank;
      s = pg.tgt();
    }
  } else {
    std::tie(r, s) = ast_rank(*f.group);
  }
  if (f.power != 1 && r != s) rank_fail(r, s, "power of a non-endomorphism");
  return {r, s};
}

// Composition ranks of a term, with Z factors (rank-flexible) resolved from
// their neighbours; the term source/target falls out of the chain.
std::pair<int, int> term_rank(const AstTerm& t) {
  int n = (int)t.factors.size();
  std::vector<std::pair<int, int>> rs(n);
  for (int i = 0; i < n; ++i) rs[i] = factor_rank(t.factors[i]);
  // Z resolution: the interface rank where the Z sits is the target of the
  // nearest concrete factor to its right (applied earlier), else the source
  // of the nearest concrete one to its left, else 0.
  for (int i = 0; i < n; ++i) {
    if (rs[i].first >= 0) continue;
    int v = 0;
    bool found = false;
    for (int j = i + 1; j < n && !found; ++j)
      if (rs[j].first >= 0) {
        v = rs[j].second;
        found = true;
      }
    for (int j = i - 1; j >= 0 && !found; --j)
      if (rs[j].first >= 0) {
        v = rs[j].first;
        found = true;
      }
    rs[i] = {v, v};
  }
  for (int i = 0; i + 1 < n; ++i)
    if (rs[i].first != rs[i + 1].second)
      rank_fail(rs[i].first, rs[i + 1].second, "composition mismatch");
  return {rs[n - 1].first, rs[0].second};
}

MorphismAst parse_expr_impl(Parser& p) {
  MorphismAst a;
  a.terms.push_back(p.parse_term(parse_expr_entry));
  while (p.eat('+')) a.terms.push_back(p.parse_term(parse_expr_entry));
  bool first = true;
  for (auto& t : a.terms) {
    auto [r, s] = term_rank(t);
    if (first) {
      a.r = r;
      a.s = s;
      first = false;
    } else if (r != a.r || s != a.s) {
      rank_fail(a.r != r ? a.r : a.s, a.r != r ? r : s, "sum of mixed ranks");
    }
  }
  return a;
}

PolarElem factor_elem(const AstFactor& f, int zrank);

PolarElem term_elem(const AstTerm& t) {
  int n = (int)t.factors.size();
  std::vector<std::pair<int, int>> rs(n);
  for (int i = 0; i < n; ++i) rs[i] = factor_rank(t.factors[i]);
  for (int i = 0; i < n; ++i) {
    if (rs[i].first >= 0) continue;
    int v = 0;
    bool found = false;
    for (int j = i + 1; j < n && !found; ++j)
      if (rs[j].first >= 0) {
        v = rs[j].second;
        found = true;
      }
    for (int j = i - 1; j >= 0 && !found; --j)
      if (rs[j].first >= 0) {
        v = rs[j].first;
        found = true;
      }
    rs[i] = {v, v};
  }
  PolarElem acc = factor_elem(t.factors[n - 1], rs[n - 1].first);
  for (int i = n - 2; i >= 0; --i) {
    PolarElem next = factor_elem(t.factors[i], rs[i].first);
    if (next.r != acc.s)
      rank_fail(next.r, acc.s, "composition mismatch");
    acc = next.after(acc);
  }
  return t.coeff * acc;
}

PolarElem factor_elem(const AstFactor& f, int zrank) {
  PolarElem base;
  if (f.gen) {
    const AstGen& g = *f.gen;
    if (g.i == -1) {
      base = PolarElem::id(g.rank);
    } else if (g.k == PGen::Z) {
      base = PolarElem::gen(PGen::Z, g.i, zrank);
    } else {
      base = PolarElem::gen(g.k, g.i, g.rank);
    }
  } else {
    base = ast_to_elem(*f.group);
  }
  if (f.power == 1) return base;
  if (base.r != base.s)
    rank_fail(base.r, base.s, "power of a non-endomorphism");
  return base.powed(f.power);
}

std::string gen_text(const AstGen& g) {
  if (g.i == -1) return "ID@" + std::to_string(g.rank);
  switch (g.k) {
    case PGen::S: return "S" + std::to_string(g.i) + "@" + std::to_string(g.rank);
    case PGen::E: return "E" + std::to_string(g.i) + "@" + std::to_string(g.rank);
    case PGen::CAP:
      return "CAP" + std::to_string(g.i) + "@" + std::to_string(g.rank);
    case PGen::CUP:
      return "CUP" + std::to_string(g.i) + "@" + std::to_string(g.rank);
    case PGen::D: return "D@" + std::to_string(g.rank);
    case PGen::Z: return "Z" + std::to_string(g.i);
  }
  return "?";
}

}  // namespace

MorphismAst parse_morphism(const std::string& text) {
  Parser p(text);
  if (p.at_end()) p.fail("empty expression");
  MorphismAst a = parse_expr_impl(p);
  if (!p.at_end()) p.fail("unexpected trailing input");
  return a;
}

std::string print_morphism(const MorphismAst& a) {
  std::string out;
  bool first_term = true;
  for (auto& t : a.terms) {
    if (!first_term) out += " + ";
    first_term = false;
    if (t.has_coeff) out += "(" + t.coeff.to_string() + ") * ";
    bool first_f = true;
    for (auto& f : t.factors) {
      if (!first_f) out += " * ";
      first_f = false;
      if (f.gen) out += gen_text(*f.gen);
      else out += "(" + print_morphism(*f.group) + ")";
      if (f.power != 1) out += "^" + std::to_string(f.power);
    }
  }
  return out;
}

PolarElem ast_to_elem(const MorphismAst& a) {
  PolarElem out(a.r, a.s);
  for (auto& t : a.terms) out = out + term_elem(t);
  return out;
}

}  // namespace polarcat
