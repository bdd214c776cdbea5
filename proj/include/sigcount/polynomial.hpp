#pragma once

// Sparse multivariate polynomials over the rationals.
//
// A Polynomial carries its variable context; binary operations require both
// operands to share the same context. Terms are stored in a map keyed by the
// exponent vector, so zero coefficients never appear.

#include "sigcount/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigcount {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline Exponent total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), Exponent{0});
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Requires divides(b, a).
inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

/// Ordered list of distinct variable names shared by every polynomial of a system.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names)
      : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    if (names_->empty()) throw std::invalid_argument("variable context must be nonempty");
    for (std::size_t i = 0; i < names_->size(); ++i)
      for (std::size_t j = i + 1; j < names_->size(); ++j)
        if ((*names_)[i] == (*names_)[j])
          throw std::invalid_argument("duplicate variable '" + (*names_)[i] + "'");
  }

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Lex or degrevlex, with a variable priority permutation (priority[0] is the
/// most significant variable).
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex };

  MonomialOrder(Kind kind, std::vector<std::size_t> priority)
      : kind_(kind), priority_(std::move(priority)) {
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i) throw std::invalid_argument("monomial order: priority is not a permutation");
  }

  static MonomialOrder lex(std::size_t n) { return {Kind::lex, identity(n)}; }
  static MonomialOrder degrevlex(std::size_t n) { return {Kind::degrevlex, identity(n)}; }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t arity() const { return priority_.size(); }

  /// Three-way comparison: negative if a < b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind_ == Kind::lex) {
      for (std::size_t v : priority_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    }
    Exponent da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (auto it = priority_.rbegin(); it != priority_.rend(); ++it)
      if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
  }

  Kind kind_;
  std::vector<std::size_t> priority_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

  static Polynomial constant(const VarContext& ctx, const Rational& c) {
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(Monomial(ctx.size(), 0), c);
    return p;
  }
  static Polynomial variable(const VarContext& ctx, std::size_t i) {
    Monomial m(ctx.size(), 0);
    m.at(i) = 1;
    return term(ctx, std::move(m), Rational(1));
  }
  static Polynomial term(const VarContext& ctx, Monomial m, const Rational& c) {
    if (m.size() != ctx.size()) throw std::invalid_argument("monomial arity mismatch");
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
  }

  const VarContext& context() const { return ctx_; }
  std::size_t arity() const { return ctx_.size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && sigcount::total_degree(terms_.begin()->first) == 0);
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial(arity(), 0)); }

  /// Adds c·m in place.
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.size() != arity()) throw std::invalid_argument("monomial arity mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Exponent total_degree() const {
    Exponent d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, sigcount::total_degree(m));
    return d;
  }
  Exponent degree_in(std::size_t var) const {
    Exponent d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const {
    std::vector<bool> used(arity(), false);
    for (const auto& [m, c] : terms_)
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0) used[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < used.size(); ++i)
      if (used[i]) out.push_back(i);
    return out;
  }

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
    if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return *best;
  }

  Polynomial operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_context(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_context(b);
    Polynomial r(a.ctx_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ctx_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Multiplies by a monomial and a scalar.
  Polynomial mul_term(const Monomial& m, const Rational& s) const {
    Polynomial r(ctx_);
    if (s.is_zero()) return r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(monomial_mul(mm, m), c * s);
    return r;
  }

  Rational eval(std::span<const Rational> point) const {
    if (point.size() != arity()) throw std::invalid_argument("eval: point has wrong arity");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) t *= point[i].pow(m[i]);
      sum += t;
    }
    return sum;
  }

  /// Replaces variable `var` by `value` (same context).
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    check_context(value);
    std::vector<Polynomial> powers{constant(ctx_, Rational(1))};
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) {
      while (powers.size() <= m[var]) powers.push_back(powers.back() * value);
      Monomial rest = m;
      rest[var] = 0;
      r += powers[m[var]].mul_term(rest, c);
    }
    return r;
  }

  /// Simultaneous substitution of every variable; the images may live in another context.
  Polynomial compose(const std::vector<Polynomial>& images) const {
    if (images.size() != arity()) throw std::invalid_argument("compose: wrong number of images");
    if (images.empty()) return *this;
    const VarContext& target = images.front().context();
    std::vector<std::vector<Polynomial>> powers(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
      if (!(images[i].context() == target)) throw std::invalid_argument("compose: context mismatch");
      powers[i].push_back(constant(target, Rational(1)));
    }
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(target, c);
      for (std::size_t i = 0; i < m.size(); ++i) {
        while (powers[i].size() <= m[i]) powers[i].push_back(powers[i].back() * images[i]);
        if (m[i] > 0) t *= powers[i][m[i]];
      }
      r += t;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// Canonical infix form, terms in descending degrevlex order.
  std::string str() const {
    if (is_zero()) return "0";
    MonomialOrder ord = MonomialOrder::degrevlex(arity());
    std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto& a, const auto& b) { return ord.less(b.first, a.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ctx_.name(i);
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

 private:
  void check_context(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomial context mismatch");
  }

  VarContext ctx_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

/// Divides by the leading coefficient under `ord`; zero stays zero.
inline Polynomial make_monic(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  return p * p.leading_term(ord).second.inverse();
}

/// Coordinate change X_n -> X_n - sum_{i<n} X_i t^i. A solution a maps to a
/// solution whose last coordinate is a_n + sum_{i<n} a_i t^i.
inline Polynomial general_position_transform(const Polynomial& p, const Rational& t) {
  if (t.is_zero()) throw std::invalid_argument("general position parameter must be nonzero");
  const VarContext& ctx = p.context();
  const std::size_t n = ctx.size();
  if (n == 1) return p;
  Polynomial image = Polynomial::variable(ctx, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    image -= Polynomial::variable(ctx, i) * t.pow(static_cast<unsigned>(i + 1));
  return p.substitute(n - 1, image);
}

inline std::vector<Polynomial> general_position_transform(const std::vector<Polynomial>& system,
                                                          const Rational& t) {
  std::vector<Polynomial> out;
  out.reserve(system.size());
  for (const auto& p : system) out.push_back(general_position_transform(p, t));
  return out;
}

/// Inverse of general_position_transform: X_n -> X_n + sum_{i<n} X_i t^i.
inline Polynomial inverse_general_position_transform(const Polynomial& p, const Rational& t) {
  if (t.is_zero()) throw std::invalid_argument("general position parameter must be nonzero");
  const VarContext& ctx = p.context();
  const std::size_t n = ctx.size();
  if (n == 1) return p;
  Polynomial image = Polynomial::variable(ctx, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    image += Polynomial::variable(ctx, i) * t.pow(static_cast<unsigned>(i + 1));
  return p.substitute(n - 1, image);
}

}  // namespace sigcount
