#include "polarcat/scalars.hpp"

namespace polarcat {

namespace {

// dense coefficient vector of a univariate polynomial (ascending degree)
std::vector<Rational> to_dense(const Poly& p, const std::string& name) {
  std::vector<Rational> c;
  for (auto& [m, a] : p.terms) {
    int d = m.exp_of(name);
    if ((size_t)d >= c.size()) c.resize(d + 1, Rational(0));
    c[d] += a;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

Poly from_dense(const std::vector<Rational>& c, const std::string& name) {
  Poly p;
  for (size_t d = 0; d < c.size(); ++d)
    if (c[d] != 0) p.add_term(Mono::var(name, (int)d), c[d]);
  return p;
}

std::vector<Rational> poly_mod(std::vector<Rational> a,
                               const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

Poly gcd_univariate(const Poly& a, const Poly& b, const std::string& name) {
  std::vector<Rational> x = to_dense(a, name), y = to_dense(b, name);
  while (!y.empty()) {
    auto r = poly_mod(x, y);
    x = y;
    y = r;
  }
  if (x.empty()) return Poly(0);
  Rational lead = x.back();
  for (auto& c : x) c /= lead;  // monic
  return from_dense(x, name);
}

void Frac::reduce() {
  if (den.is_zero())
    throw CatError(Err::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den = Poly(1);
    return;
  }
  // trial exact division
  if (auto q = num.divide_exact(den)) {
    num = *q;
    den = Poly(1);
  } else if (num.is_univariate_in("delta") && den.is_univariate_in("delta")) {
    Poly g = gcd_univariate(num, den, "delta");
    if (g.total_degree() > 0) {
      num = *num.divide_exact(g);
      den = *den.divide_exact(g);
    }
  }
  // normalize by content of denominator (makes den's leading coeff +1-ish)
  Rational cd = den.content();
  if (cd != 0 && cd != 1) {
    Poly inv(Rational(1) / cd);
    num = num * inv;
    den = den * inv;
  }
}

}  // namespace polarcat
