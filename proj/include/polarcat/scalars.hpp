#pragma once
// Exact coefficient arithmetic: arbitrary-precision rationals, sparse
// multivariate polynomials over Q, and reduced fractions of polynomials.
//
// Indeterminate universe: delta, z2, z3, z4, ..., lambda.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarcat {

using Rational = mpq_class;

enum class Err {
  RankMismatch,
  IndexOutOfRange,
  DivisionByZero,
  NonTermination,
  CutoffExceeded,
  OddBoundary,
  UnsupportedParameter,
  SolveUnderdetermined,
  SyntaxError,
  EmptySpace,
  SingularForm,
  DimensionMismatch,
  SpecializationMissing,
};

class CatError : public std::runtime_error {
 public:
  CatError(Err kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

inline std::string rat_str(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

// Total order on indeterminate names: delta < z2 < z3 < ... < lambda.
// Unknown names are rejected at construction time.
inline long var_rank(const std::string& name) {
  if (name == "delta") return 0;
  if (name == "lambda") return 1000000000L;
  if (name.size() >= 2 && name[0] == 'z') {
    long k = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      k = k * 10 + (name[i] - '0');
    }
    if (k >= 2) return k;
  }
  return -1;
}

// Monomial: sparse exponent vector, kept sorted by var_rank, no zeros.
struct Mono {
  std::vector<std::pair<std::string, int>> e;  // (name, exp>0), sorted

  static Mono one() { return {}; }
  static Mono var(const std::string& name, int exp = 1) {
    if (var_rank(name) < 0)
      throw CatError(Err::SyntaxError, "unknown indeterminate: " + name);
    Mono m;
    if (exp != 0) m.e.push_back({name, exp});
    return m;
  }
  int degree() const {
    int d = 0;
    for (auto& p : e) d += p.second;
    return d;
  }
  int exp_of(const std::string& name) const {
    for (auto& p : e)
      if (p.first == name) return p.second;
    return 0;
  }
  friend Mono operator*(const Mono& a, const Mono& b) {
    Mono r;
    size_t i = 0, j = 0;
    while (i < a.e.size() || j < b.e.size()) {
      if (j == b.e.size() ||
          (i < a.e.size() &&
           var_rank(a.e[i].first) < var_rank(b.e[j].first))) {
        r.e.push_back(a.e[i++]);
      } else if (i == a.e.size() ||
                 var_rank(b.e[j].first) < var_rank(a.e[i].first)) {
        r.e.push_back(b.e[j++]);
      } else {
        int s = a.e[i].second + b.e[j].second;
        if (s != 0) r.e.push_back({a.e[i].first, s});
        ++i, ++j;
      }
    }
    return r;
  }
  // graded-lex: higher total degree first; ties broken lexicographically by
  // exponent vector in variable order (larger exponent on earlier var first).
  bool gl_before(const Mono& b) const {
    int da = degree(), db = b.degree();
    if (da != db) return da > db;
    size_t i = 0, j = 0;
    while (i < e.size() && j < b.e.size()) {
      long ra = var_rank(e[i].first), rb = var_rank(b.e[j].first);
      if (ra != rb) return ra < rb;  // earlier variable present => first
      if (e[i].second != b.e[j].second) return e[i].second > b.e[j].second;
      ++i, ++j;
    }
    return i < e.size();
  }
  auto operator<=>(const Mono& o) const = default;
  bool operator==(const Mono& o) const = default;
};

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return a.gl_before(b); }
};

class Poly {
 public:
  // terms sorted in canonical graded-lex order
  std::map<Mono, Rational, MonoLess> terms;

  Poly() = default;
  /*implicit*/ Poly(const Rational& c) {
    if (c != 0) terms[Mono::one()] = c;
  }
  /*implicit*/ Poly(long c) : Poly(Rational(c)) {}
  static Poly var(const std::string& name, int exp = 1) {
    Poly p;
    p.terms[Mono::var(name, exp)] = 1;
    return p;
  }
  static Poly delta() { return var("delta"); }
  static Poly lambda_() { return var("lambda"); }
  static Poly z(int k) { return var("z" + std::to_string(k)); }

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    return terms.empty() ||
           (terms.size() == 1 && terms.begin()->first.e.empty());
  }
  Rational constant_value() const {
    if (terms.empty()) return Rational(0);
    if (!is_constant())
      throw CatError(Err::SpecializationMissing,
                     "polynomial is not constant: " + to_string());
    return terms.begin()->second;
  }
  int total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Mono& m, const Rational& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (c != 0) terms[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b.terms) r.add_term(m, -c);
    return r;
  }
  friend Poly operator-(const Poly& a) { return Poly(0) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms == o.terms; }

  Poly pow(int k) const {
    Poly r(1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // Exact substitution; unbound names remain symbolic.
  Poly specialize(const std::map<std::string, Rational>& bind) const {
    Poly r;
    for (auto& [m, c] : terms) {
      Rational coef = c;
      Mono rest;
      for (auto& [name, exp] : m.e) {
        auto it = bind.find(name);
        if (it == bind.end()) {
          rest.e.push_back({name, exp});
        } else {
          Rational v = it->second;
          for (int i = 0; i < exp; ++i) coef *= v;
        }
      }
      Poly t;
      if (coef != 0) t.terms[rest] = coef;
      r += t;
    }
    return r;
  }

  // Leading coefficient in graded-lex order.
  Rational lead_coeff() const {
    return terms.empty() ? Rational(0) : terms.begin()->second;
  }

  // Attempt exact multivariate division: returns quotient iff *this = q*d.
  std::optional<Poly> divide_exact(const Poly& d) const {
    if (d.is_zero()) return std::nullopt;
    Poly rem = *this, q;
    const Mono& dm = d.terms.begin()->first;
    const Rational& dc = d.terms.begin()->second;
    while (!rem.is_zero()) {
      const Mono& rm = rem.terms.begin()->first;
      // try rm / dm
      Mono t;
      {
        size_t i = 0, j = 0;
        bool ok = true;
        while (j < dm.e.size()) {
          if (i >= rem.terms.begin()->first.e.size()) { ok = false; break; }
          auto& re = rm.e[i];
          auto& de = dm.e[j];
          long rr = var_rank(re.first), rd = var_rank(de.first);
          if (rr < rd) { t.e.push_back(re); ++i; }
          else if (rr > rd) { ok = false; break; }
          else {
            if (re.second < de.second) { ok = false; break; }
            if (re.second > de.second)
              t.e.push_back({re.first, re.second - de.second});
            ++i; ++j;
          }
        }
        if (!ok) return std::nullopt;
        while (i < rm.e.size()) t.e.push_back(rm.e[i++]);
      }
      Rational tc = rem.terms.begin()->second / dc;
      Poly mono;
      mono.terms[t] = tc;
      q += mono;
      rem -= mono * d;
    }
    return q;
  }

  // Content: gcd of numerators / lcm of denominators (sign of lead coeff).
  Rational content() const {
    if (terms.empty()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (auto& [m, c] : terms) {
      Rational cc(c);
      cc.canonicalize();
      mpz_class num = cc.get_num(), den = cc.get_den();
      mpz_class ab = abs(num);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ab.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    Rational c(g, l);
    c.canonicalize();
    if (lead_coeff() < 0) c = -c;
    return c;
  }

  bool is_univariate_in(const std::string& name) const {
    for (auto& [m, c] : terms)
      for (auto& p : m.e)
        if (p.first != name) return false;
    return true;
  }

  std::string to_string() const;
};

inline std::string mono_str(const Mono& m) {
  std::string s;
  for (auto& [name, exp] : m.e) {
    if (!s.empty()) s += "*";
    s += name;
    if (exp != 1) s += "^" + std::to_string(exp);
  }
  return s;
}

inline std::string Poly::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : terms) {
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string ms = mono_str(m);
    if (ms.empty()) {
      s += rat_str(a);
    } else if (a == 1) {
      s += ms;
    } else {
      s += rat_str(a) + "*" + ms;
    }
  }
  return s;
}

// Univariate gcd in the named variable, monic-normalized; requires both
// inputs univariate in `name`.
Poly gcd_univariate(const Poly& a, const Poly& b, const std::string& name);

// Reduced fraction of polynomials. Reduction: content extraction, trial
// exact division, and univariate-in-delta gcd (every denominator that
// arises is a rational multiple of powers of delta and delta-2).
class Frac {
 public:
  Poly num, den;

  Frac() : num(0), den(1) {}
  /*implicit*/ Frac(const Poly& p) : num(p), den(1) {}
  /*implicit*/ Frac(const Rational& c) : num(c), den(1) {}
  /*implicit*/ Frac(long c) : num(c), den(1) {}
  Frac(const Poly& n, const Poly& d) : num(n), den(d) { reduce(); }

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const {
    return den.is_constant() && den.constant_value() == 1;
  }
  const Poly& as_poly() const {
    if (!is_poly())
      throw CatError(Err::SpecializationMissing,
                     "fraction is not polynomial: " + to_string());
    return num;
  }

  void reduce();

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a) { return Frac(-a.num, a.den); }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num * b.num, a.den * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num.is_zero())
      throw CatError(Err::DivisionByZero, "division by zero fraction");
    return Frac(a.num * b.den, a.den * b.num);
  }
  Frac& operator+=(const Frac& o) { return *this = *this + o; }
  Frac& operator-=(const Frac& o) { return *this = *this - o; }
  Frac& operator*=(const Frac& o) { return *this = *this * o; }
  bool operator==(const Frac& o) const {
    return (num * o.den - o.num * den).is_zero();
  }

  // Exact substitution. Errors with DivisionByZero if the denominator
  // vanishes under the binding.
  Frac specialize(const std::map<std::string, Rational>& bind) const {
    Poly n = num.specialize(bind), d = den.specialize(bind);
    if (d.is_zero())
      throw CatError(Err::DivisionByZero,
                     "denominator vanishes under specialization: " +
                         den.to_string());
    return Frac(n, d);
  }
  Rational rational_value() const {
    return num.constant_value() / den.constant_value();
  }

  std::string to_string() const {
    if (is_poly()) return num.to_string();
    std::string ns = num.terms.size() > 1 ? "(" + num.to_string() + ")"
                                          : num.to_string();
    std::string ds = den.terms.size() > 1 ? "(" + den.to_string() + ")"
                                          : den.to_string();
    return ns + " / " + ds;
  }
};

}  // namespace polarcat
