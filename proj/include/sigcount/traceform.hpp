#pragma once

// Trace forms (f, g) -> tr(h f g) on a finite quotient algebra.
//
// Gram entries are assembled from a trace vector t[i] = tr(h * b_i) over the
// standard-monomial basis and the structure constants of b_k * b_l, which are
// the columns of the basis multiplication matrices.

#include "sigcount/groebner.hpp"
#include "sigcount/matrix.hpp"
#include "sigcount/univariate.hpp"

#include <stdexcept>
#include <vector>

namespace sigcount {

/// Multiplication matrices of every basis monomial of the algebra.
inline std::vector<Matrix> basis_matrices(const QuotientAlgebra& alg) {
  std::vector<Matrix> out;
  out.reserve(alg.dim());
  for (const auto& b : alg.basis()) out.push_back(alg.monomial_matrix(b));
  return out;
}

/// values[i] = tr(lambda_{h * b_i}).
struct TraceVector {
  std::vector<Rational> values;
};

inline TraceVector trace_vector(const QuotientAlgebra& alg, const Matrix& mult_h,
                                const std::vector<Matrix>& basis_mats) {
  TraceVector tv;
  tv.values.reserve(alg.dim());
  for (const auto& mb : basis_mats) tv.values.push_back(trace_of_product(mult_h, mb));
  return tv;
}

inline Rational trace_of(const QuotientAlgebra& alg, const Polynomial& h) { return alg.mult_matrix(h).trace(); }

/// Gram matrix of (f, g) -> tr(h f g) on the standard-monomial basis.
inline SymMatrix generalized_trace_form(const QuotientAlgebra& alg, const Polynomial& h,
                                        const std::vector<Matrix>& basis_mats) {
  const std::size_t m = alg.dim();
  TraceVector tv = trace_vector(alg, alg.mult_matrix(h), basis_mats);
  Matrix g(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = k; l < m; ++l) {
      // b_k * b_l = sum_i M_{b_k}(i, l) b_i
      Rational v(0);
      for (std::size_t i = 0; i < m; ++i)
        if (!basis_mats[k](i, l).is_zero()) v += basis_mats[k](i, l) * tv.values[i];
      g(k, l) = v;
      g(l, k) = v;
    }
  return SymMatrix(std::move(g));
}

inline SymMatrix generalized_trace_form(const QuotientAlgebra& alg, const Polynomial& h) {
  return generalized_trace_form(alg, h, basis_matrices(alg));
}

inline SymMatrix trace_form(const QuotientAlgebra& alg) {
  return generalized_trace_form(alg, Polynomial::constant(alg.context(), Rational(1)));
}

/// Entry-by-entry tr(M_h M_{b_k} M_{b_l}); slow reference path.
inline SymMatrix generalized_trace_form_direct(const QuotientAlgebra& alg, const Polynomial& h) {
  const std::size_t m = alg.dim();
  const Matrix mh = alg.mult_matrix(h);
  const auto bm = basis_matrices(alg);
  Matrix g(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) g(k, l) = (mh * bm[k] * bm[l]).trace();
  return SymMatrix(std::move(g));
}

/// Power sums p_0..p_count of the roots of g (with multiplicity) by Newton's identities.
inline std::vector<Rational> power_sums(const UPoly& g, std::size_t count) {
  if (g.degree() < 0) throw std::invalid_argument("power_sums: zero polynomial");
  const UPoly f = g.monic();
  const std::size_t m = static_cast<std::size_t>(f.degree());
  // f = x^m + a_{m-1} x^{m-1} + ... + a_0; e(j) = coefficient of x^{m-j}
  auto e = [&](std::size_t j) { return f.coeff(m - j); };
  std::vector<Rational> p(count + 1);
  p[0] = Rational(static_cast<long>(m));
  for (std::size_t k = 1; k <= count; ++k) {
    Rational acc(0);
    for (std::size_t j = 1; j < k && j <= m; ++j) acc += e(j) * p[k - j];
    if (k <= m) acc += e(k) * Rational(static_cast<long>(k));
    p[k] = -acc;
  }
  return p;
}

/// Hankel matrix of power sums, which is the trace form of Q[x]/(g) on {1, x, ..., x^{m-1}}.
inline SymMatrix power_sum_trace_form(const UPoly& g) {
  const std::size_t m = static_cast<std::size_t>(std::max(g.degree(), 0));
  const auto p = power_sums(g, m == 0 ? 0 : 2 * m - 2);
  Matrix h(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) h(k, l) = p[k + l];
  return SymMatrix(std::move(h));
}

}  // namespace sigcount
