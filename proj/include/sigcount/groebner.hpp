#pragma once

// Buchberger's algorithm over the rationals, normal forms, and the finite
// quotient algebra A = Q[X]/I of a zero-dimensional ideal together with its
// multiplication matrices.

#include "sigcount/matrix.hpp"
#include "sigcount/polynomial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigcount {

/// Raised when an operation needs a zero-dimensional ideal and did not get one.
class NotZeroDimensional : public std::runtime_error {
 public:
  NotZeroDimensional(const std::string& variable)
      : std::runtime_error("ideal is not zero-dimensional: no leading monomial is a pure power of '" +
                           variable + "'"),
        variable_(variable) {}
  const std::string& variable() const { return variable_; }

 private:
  std::string variable_;
};

namespace detail {

using Term = std::pair<Monomial, Rational>;

/// Polynomial as a term list sorted by a monomial order, largest first.
struct SortedPoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
};

inline SortedPoly to_sorted(const Polynomial& p, const MonomialOrder& ord) {
  SortedPoly s;
  s.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(s.terms.begin(), s.terms.end(),
            [&](const Term& a, const Term& b) { return ord.less(b.first, a.first); });
  return s;
}

inline Polynomial from_sorted(const VarContext& ctx, const SortedPoly& s) {
  Polynomial p(ctx);
  for (const auto& [m, c] : s.terms) p.add_term(m, c);
  return p;
}

inline void make_monic(SortedPoly& s) {
  if (s.is_zero() || s.lc().is_one()) return;
  Rational inv = s.lc().inverse();
  for (auto& t : s.terms) t.second *= inv;
}

/// a - c * m * b, with a and b sorted by ord.
inline SortedPoly sub_scaled(const SortedPoly& a, const Rational& c, const Monomial& m,
                             const SortedPoly& b, const MonomialOrder& ord) {
  SortedPoly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = monomial_mul(b.terms[j].first, m);
    int cmp = i == a.terms.size() ? -1 : ord.compare(a.terms[i].first, bm);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.emplace_back(std::move(bm), -(c * b.terms[j].second));
      ++j;
    } else {
      Rational v = a.terms[i].second - c * b.terms[j].second;
      if (!v.is_zero()) r.terms.emplace_back(std::move(bm), std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

/// Full reduction of p by `basis`, always using the first divisor in list order.
/// Entries of `skip` (if any) are not used as reducers.
inline SortedPoly reduce(SortedPoly p, const std::vector<SortedPoly>& basis, const MonomialOrder& ord,
                         std::optional<std::size_t> skip = std::nullopt) {
  SortedPoly rem;
  while (!p.is_zero()) {
    const Monomial& lm = p.lm();
    const SortedPoly* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (skip && *skip == k) continue;
      if (!basis[k].is_zero() && divides(basis[k].lm(), lm)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor == nullptr) {
      rem.terms.push_back(std::move(p.terms.front()));
      p.terms.erase(p.terms.begin());
      continue;
    }
    Rational c = p.lc() / divisor->lc();
    Monomial shift = monomial_div(lm, divisor->lm());
    p = sub_scaled(p, c, shift, *divisor, ord);
  }
  return rem;
}

inline SortedPoly s_polynomial(const SortedPoly& f, const SortedPoly& g, const MonomialOrder& ord) {
  Monomial l = monomial_lcm(f.lm(), g.lm());
  SortedPoly a;
  Monomial mf = monomial_div(l, f.lm());
  Rational inv_f = f.lc().inverse();
  for (const auto& [m, c] : f.terms) a.terms.emplace_back(monomial_mul(m, mf), c * inv_f);
  return sub_scaled(a, g.lc().inverse(), monomial_div(l, g.lm()), g, ord);
}

}  // namespace detail

/// A Groebner basis with respect to a fixed monomial order.
class GroebnerBasis {
 public:
  GroebnerBasis(VarContext ctx, MonomialOrder order, std::vector<Polynomial> generators, bool reduced)
      : ctx_(std::move(ctx)), order_(std::move(order)), gens_(std::move(generators)), reduced_(reduced) {
    for (const auto& g : gens_) sorted_.push_back(detail::to_sorted(g, order_));
  }

  const VarContext& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_constant() && !gens_.front().is_zero(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& s : sorted_) out.push_back(s.lm());
    return out;
  }

  const std::vector<detail::SortedPoly>& sorted() const { return sorted_; }

 private:
  VarContext ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<detail::SortedPoly> sorted_;
  bool reduced_;
};

/// Reduced Groebner basis of <gens> by Buchberger's algorithm with the product
/// and chain criteria, normal pair selection.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  using detail::SortedPoly;
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const VarContext ctx = gens.front().context();
  if (ord.arity() != ctx.size()) throw std::invalid_argument("buchberger: order arity mismatch");

  std::vector<SortedPoly> basis;
  for (const auto& g : gens) {
    if (!(g.context() == ctx)) throw std::invalid_argument("buchberger: context mismatch");
    if (g.is_zero()) continue;
    SortedPoly s = detail::to_sorted(g, ord);
    detail::make_monic(s);
    basis.push_back(std::move(s));
  }
  if (basis.empty()) throw std::invalid_argument("buchberger: all generators are zero");

  auto finish_unit = [&] {
    return GroebnerBasis(ctx, ord, {Polynomial::constant(ctx, Rational(1))}, true);
  };

  // Pending pairs keyed (i, j) with i < j.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    // Normal strategy: smallest lcm first, ties by index.
    auto best = pending.begin();
    Monomial best_lcm = monomial_lcm(basis[best->first].lm(), basis[best->second].lm());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = monomial_lcm(basis[it->first].lm(), basis[it->second].lm());
      if (ord.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    if (coprime(basis[i].lm(), basis[j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(basis[k].lm(), best_lcm) && !is_pending(i, k) && !is_pending(j, k)) chain = true;
    }
    if (chain) continue;

    SortedPoly r = detail::reduce(detail::s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (r.is_zero()) continue;
    detail::make_monic(r);
    if (total_degree(r.lm()) == 0) return finish_unit();
    basis.push_back(std::move(r));
    const std::size_t n = basis.size() - 1;
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Minimalize: drop generators whose leading monomial is divisible by another's.
  std::vector<SortedPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lm(), basis[i].lm())) continue;
      // Equal leading monomials: keep the earliest.
      redundant = basis[j].lm() != basis[i].lm() || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (const auto& g : minimal)
    if (total_degree(g.lm()) == 0) return finish_unit();

  std::sort(minimal.begin(), minimal.end(),
            [&](const SortedPoly& a, const SortedPoly& b) { return ord.less(b.lm(), a.lm()); });

  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    SortedPoly head;
    head.terms.push_back(minimal[i].terms.front());
    SortedPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    SortedPoly reduced_tail = detail::reduce(std::move(tail), minimal, ord, i);
    head.terms.insert(head.terms.end(), reduced_tail.terms.begin(), reduced_tail.terms.end());
    minimal[i] = std::move(head);
  }

  std::vector<Polynomial> out;
  for (const auto& s : minimal) out.push_back(detail::from_sorted(ctx, s));
  return GroebnerBasis(ctx, ord, std::move(out), true);
}

/// The remainder of p on division by gb: no term is divisible by a leading monomial.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!(p.context() == gb.context())) throw std::invalid_argument("normal_form: context mismatch");
  return detail::from_sorted(p.context(), detail::reduce(detail::to_sorted(p, gb.order()), gb.sorted(), gb.order()));
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

/// All S-polynomials of generator pairs reduce to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto& s = gb.sorted();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!detail::reduce(detail::s_polynomial(s[i], s[j], gb.order()), s, gb.order()).is_zero()) return false;
  return true;
}

/// Index of the first variable with no pure-power leading monomial, if any.
inline std::optional<std::size_t> staircase_violation(const GroebnerBasis& gb) {
  if (gb.is_unit()) return std::nullopt;
  const auto lms = gb.leading_monomials();
  for (std::size_t v = 0; v < gb.context().size(); ++v) {
    bool found = false;
    for (const auto& m : lms) {
      bool pure = m[v] > 0;
      for (std::size_t k = 0; k < m.size() && pure; ++k)
        if (k != v && m[k] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return v;
  }
  return std::nullopt;
}

inline bool is_zero_dimensional(const GroebnerBasis& gb) { return !staircase_violation(gb).has_value(); }

/// The finite algebra A = Q[X]/I: standard-monomial basis and one
/// multiplication matrix per variable. Column j of the matrix for X_i holds
/// the coordinates of NF(X_i * basis[j]).
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis gb) : gb_(std::move(gb)) {
    if (auto v = staircase_violation(gb_)) throw NotZeroDimensional(gb_.context().name(*v));
    enumerate_basis();
    build_matrices();
  }

  const GroebnerBasis& source() const { return gb_; }
  const VarContext& context() const { return gb_.context(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<Matrix>& variable_matrices() const { return var_mats_; }

  Polynomial basis_element(std::size_t k) const {
    return Polynomial::term(context(), basis_.at(k), Rational(1));
  }

  /// Coordinates of a polynomial already in normal form.
  std::vector<Rational> coordinates(const Polynomial& nf) const {
    std::vector<Rational> v(dim());
    for (const auto& [m, c] : nf.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) throw std::logic_error("coordinates: polynomial is not in normal form");
      v[it->second] = c;
    }
    return v;
  }

  /// Matrix of multiplication by a basis monomial (or any monomial), as a product of variable matrices.
  Matrix monomial_matrix(const Monomial& m) const {
    Matrix r = Matrix::identity(dim());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Exponent e = 0; e < m[i]; ++e) r = var_mats_[i] * r;
    return r;
  }

  /// Matrix of f -> h f, evaluating h at the variable matrices.
  Matrix mult_matrix(const Polynomial& h) const {
    if (!(h.context() == context())) throw std::invalid_argument("mult_matrix: context mismatch");
    const std::size_t n = context().size();
    std::vector<std::vector<Matrix>> powers(n, std::vector<Matrix>{Matrix::identity(dim())});
    Matrix r(dim(), dim());
    for (const auto& [m, c] : h.terms()) {
      Matrix t = Matrix::identity(dim());
      for (std::size_t i = 0; i < n; ++i) {
        while (powers[i].size() <= m[i]) powers[i].push_back(var_mats_[i] * powers[i].back());
        if (m[i] > 0) t = powers[i][m[i]] * t;
      }
      r = r + t * c;
    }
    return r;
  }

  /// Same matrix, built column by column from normal forms of h * basis[j].
  Matrix mult_matrix_by_normal_forms(const Polynomial& h) const {
    if (!(h.context() == context())) throw std::invalid_argument("mult_matrix: context mismatch");
    Matrix r(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      auto col = coordinates(normal_form(h * basis_element(j), gb_));
      for (std::size_t i = 0; i < dim(); ++i) r(i, j) = col[i];
    }
    return r;
  }

 private:
  void enumerate_basis() {
    if (gb_.is_unit()) return;
    const auto lms = gb_.leading_monomials();
    auto standard = [&](const Monomial& m) {
      return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return divides(l, m); });
    };
    const std::size_t n = context().size();
    std::set<Monomial> seen{Monomial(n, 0)};
    std::deque<Monomial> queue{Monomial(n, 0)};
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < n; ++i) {
        Monomial next = m;
        ++next[i];
        if (standard(next) && seen.insert(next).second) queue.push_back(next);
      }
    }
    basis_.assign(seen.begin(), seen.end());
    const MonomialOrder& ord = gb_.order();
    std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    for (std::size_t k = 0; k < basis_.size(); ++k) index_.emplace(basis_[k], k);
  }

  void build_matrices() {
    const std::size_t n = context().size();
    var_mats_.assign(n, Matrix(dim(), dim()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        Monomial m = basis_[j];
        ++m[i];
        std::vector<Rational> col;
        if (auto it = index_.find(m); it != index_.end()) {
          var_mats_[i](it->second, j) = Rational(1);
          continue;
        }
        col = coordinates(normal_form(Polynomial::term(context(), m, Rational(1)), gb_));
        for (std::size_t r = 0; r < dim(); ++r) var_mats_[i](r, j) = col[r];
      }
    }
  }

  GroebnerBasis gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<Matrix> var_mats_;
};

inline QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) { return QuotientAlgebra(gb); }

inline Matrix mult_matrix(const QuotientAlgebra& alg, const Polynomial& h) { return alg.mult_matrix(h); }

}  // namespace sigcount
