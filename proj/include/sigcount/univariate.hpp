#pragma once

// Dense univariate polynomials over the rationals plus conversions to and
// from the sparse multivariate representation.

#include "sigcount/polynomial.hpp"
#include "sigcount/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sigcount {

class UPoly {
 public:
  UPoly() = default;
  /// coeffs[i] is the coefficient of x^i.
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// x - root
  static UPoly linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  int sign_at(const Rational& x) const { return eval(x).sign(); }

  UPoly operator-() const { return *this * Rational(-1); }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const Rational& s) {
    if (s.is_zero()) return {};
    std::vector<Rational> r = a.c_;
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    if (degree() < d.degree()) return {UPoly{}, *this};
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(c_.size() - d.c_.size() + 1);
    const Rational inv = d.lead().inverse();
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
      const Rational& top = rem[k + d.c_.size() - 1];
      if (top.is_zero()) continue;
      Rational f = top * inv;
      quot[k] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    rem.resize(d.c_.size() - 1);
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
  }
  UPoly rem(const UPoly& d) const { return divmod(d).second; }

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// g / gcd(g, g'), monic. Requires g != 0.
inline UPoly squarefree_part(const UPoly& g) {
  if (g.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
  if (g.is_constant()) return UPoly::constant(Rational(1));
  UPoly d = gcd(g, g.derivative());
  return g.divmod(d).first.monic();
}

inline UPoly upoly_from_roots(const std::vector<Rational>& roots) {
  UPoly p = UPoly::constant(Rational(1));
  for (const auto& r : roots) p = p * UPoly::linear(r);
  return p;
}

/// Reads p as a polynomial in variable `var` alone.
inline UPoly to_upoly(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c(p.degree_in(var) + 1);
  for (const auto& [m, coef] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (i != var && m[i] != 0) throw std::invalid_argument("polynomial is not univariate in the requested variable");
    c[m[var]] = coef;
  }
  return UPoly(std::move(c));
}

inline Polynomial from_upoly(const VarContext& ctx, std::size_t var, const UPoly& u) {
  Polynomial p(ctx);
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    Monomial m(ctx.size(), 0);
    m[var] = static_cast<Exponent>(i);
    p.add_term(m, u.coeffs()[i]);
  }
  return p;
}

/// The single variable a univariate polynomial lives in; 0 for constants.
inline std::size_t univariate_variable(const Polynomial& p) {
  auto s = p.support();
  if (s.size() > 1) throw std::invalid_argument("polynomial is not univariate: " + p.str());
  return s.empty() ? 0 : s.front();
}

inline Polynomial univariate_squarefree_part(const Polynomial& g) {
  std::size_t v = univariate_variable(g);
  return from_upoly(g.context(), v, squarefree_part(to_upoly(g, v)));
}

inline std::string UPoly::str(const std::string& var) const {
  return from_upoly(VarContext({var}), 0, *this).str();
}

}  // namespace sigcount
