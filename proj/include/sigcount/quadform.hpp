#pragma once

// Symmetric bilinear forms over the rationals.
//
// The type (p, q) of a form is computed two independent ways:
//   * congruence diagonalization (symmetric Gaussian elimination), and
//   * the characteristic polynomial plus Descartes' rule of signs, which is
//     exact here because a real symmetric matrix has only real eigenvalues.
// The characteristic polynomial uses Berkowitz's algorithm, which needs no
// division at all, so it is exact over any commutative ring.
// A third route, the leading principal minors, applies whenever none vanish.

#include "sigcount/matrix.hpp"
#include "sigcount/rational.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigcount {

/// Sylvester type of a form: p positive and q negative squares in dimension n.
struct FormType {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t n = 0;

  std::size_t rank() const { return p + q; }
  long signature() const { return static_cast<long>(p) - static_cast<long>(q); }

  friend bool operator==(const FormType&, const FormType&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FormType& t) {
    return os << "(" << t.p << ", " << t.q << ")";
  }
};

struct Diagonalization {
  Matrix transform;  // T, invertible
  Matrix diagonal;   // D = transpose(T) S T
};

/// Symmetric elimination. A zero pivot with a nonzero entry in its row is
/// repaired by adding row/column j to row/column k (valid in characteristic
/// != 2); if that would still give a zero pivot, A(j,j) is nonzero and k, j are
/// swapped instead.
inline Diagonalization congruence_diagonalize(const SymMatrix& s) {
  const std::size_t n = s.size();
  Matrix a = s.matrix();
  Matrix t = Matrix::identity(n);

  auto add_index = [&](std::size_t k, std::size_t j) {
    // a <- E^T a E with E adding column j to column k.
    for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
    for (std::size_t r = 0; r < n; ++r) t(r, k) += t(r, j);
  };
  auto swap_index = [&](std::size_t k, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, k), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(t(r, k), t(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::optional<std::size_t> polar, fallback;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j).is_zero()) continue;
        if (!(a(k, j) * Rational(2) + a(j, j)).is_zero()) {
          polar = j;
          break;
        }
        if (!fallback) fallback = j;
      }
      if (polar) {
        add_index(k, *polar);
      } else if (fallback) {
        swap_index(k, *fallback);
      } else {
        continue;  // row k is already zero off the diagonal
      }
    }
    const Rational inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
      for (std::size_t r = 0; r < n; ++r) t(r, i) -= f * t(r, k);
    }
  }
  return {std::move(t), std::move(a)};
}

inline FormType type_of_diagonal(const Matrix& d) {
  FormType ft{0, 0, d.rows()};
  for (std::size_t i = 0; i < d.rows(); ++i) {
    int sg = d(i, i).sign();
    if (sg > 0) ++ft.p;
    if (sg < 0) ++ft.q;
  }
  return ft;
}

inline FormType type_of(const SymMatrix& s) { return type_of_diagonal(congruence_diagonalize(s).diagonal); }

/// Coefficients c_0..c_n of det(X I - M), c_n = 1 (Berkowitz).
inline std::vector<Rational> char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  // Coefficient vector from the highest degree down, built from the trailing
  // principal submatrix outward.
  std::vector<Rational> vec{Rational(1)};
  for (std::size_t start = n; start-- > 0;) {
    const std::size_t size = n - start;  // current block is rows/cols [start, n)
    const std::size_t sub = size - 1;
    // diags = [1, -a, -R C, -R A C, ..., -R A^{sub-1} C]
    std::vector<Rational> diags{Rational(1), -m(start, start)};
    std::vector<Rational> col(sub);
    for (std::size_t i = 0; i < sub; ++i) col[i] = m(start + 1 + i, start);
    for (std::size_t step = 0; step < sub; ++step) {
      Rational acc(0);
      for (std::size_t i = 0; i < sub; ++i) acc += m(start, start + 1 + i) * col[i];
      diags.push_back(-acc);
      if (step + 1 < sub) {
        std::vector<Rational> next(sub);
        for (std::size_t i = 0; i < sub; ++i)
          for (std::size_t j = 0; j < sub; ++j) next[i] += m(start + 1 + i, start + 1 + j) * col[j];
        col = std::move(next);
      }
    }
    // Lower-triangular Toeplitz (size+1) x size times vec (length size).
    std::vector<Rational> out(size + 1);
    for (std::size_t i = 0; i <= size; ++i)
      for (std::size_t j = 0; j < size && j <= i; ++j) out[i] += diags[i - j] * vec[j];
    vec = std::move(out);
  }
  return {vec.rbegin(), vec.rend()};
}

/// Sign changes of a sequence, zeros removed.
inline std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct DescartesCounts {
  std::size_t positive;  // V+
  std::size_t negative;  // V-
  friend bool operator==(const DescartesCounts&, const DescartesCounts&) = default;
};

/// Sign variations of (a_0..a_n) and of (a_0, -a_1, ..., (-1)^n a_n).
inline DescartesCounts descartes_counts(const std::vector<Rational>& coeffs) {
  std::vector<int> plus, minus;
  bool nonzero = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    int sg = coeffs[i].sign();
    nonzero = nonzero || sg != 0;
    plus.push_back(sg);
    minus.push_back(i % 2 == 0 ? sg : -sg);
  }
  if (!nonzero) throw std::invalid_argument("descartes_counts: zero polynomial");
  return {sign_changes(plus), sign_changes(minus)};
}

inline FormType type_via_descartes(const SymMatrix& s) {
  auto [pos, neg] = descartes_counts(char_poly(s.matrix()));
  return {pos, neg, s.size()};
}

/// D_1..D_n, the determinants of the leading principal blocks.
inline std::vector<Rational> leading_principal_minors(const Matrix& m) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k <= m.rows(); ++k) d.push_back(determinant(m.leading_block(k)));
  return d;
}

/// Hurwitz: when every leading minor is nonzero the type is (n - q, q) with q
/// the sign changes of 1, D_1, ..., D_n. Otherwise nullopt.
inline std::optional<FormType> hurwitz_type(const SymMatrix& s) {
  std::vector<int> signs{1};
  for (const auto& d : leading_principal_minors(s.matrix())) {
    if (d.is_zero()) return std::nullopt;
    signs.push_back(d.sign());
  }
  std::size_t q = sign_changes(signs);
  return FormType{s.size() - q, q, s.size()};
}

enum class Definiteness { positive_definite, negative_definite, positive_semi, negative_semi, indefinite, zero };

inline Definiteness definiteness(const FormType& t) {
  if (t.p == 0 && t.q == 0) return Definiteness::zero;
  if (t.p > 0 && t.q > 0) return Definiteness::indefinite;
  if (t.q == 0) return t.p == t.n ? Definiteness::positive_definite : Definiteness::positive_semi;
  return t.q == t.n ? Definiteness::negative_definite : Definiteness::negative_semi;
}

inline Definiteness definiteness(const SymMatrix& s) { return definiteness(type_of(s)); }

inline std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive-definite";
    case Definiteness::negative_definite: return "negative-definite";
    case Definiteness::positive_semi: return "positive-semidefinite";
    case Definiteness::negative_semi: return "negative-semidefinite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::zero: return "zero";
  }
  return "unknown";
}

}  // namespace sigcount
