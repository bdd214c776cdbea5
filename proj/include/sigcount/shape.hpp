#pragma once

// Shape-form lex bases: {X_1 - g_1(X_n), ..., X_{n-1} - g_{n-1}(X_n), g_n(X_n)}
// with g_n monic and squarefree. Exists for radical zero-dimensional ideals
// whose solutions have pairwise distinct last coordinates.

#include "sigcount/groebner.hpp"
#include "sigcount/univariate.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigcount {

class ShapeError : public std::runtime_error {
 public:
  enum class Reason { not_shape_position, not_squarefree, not_zero_dimensional };

  ShapeError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

struct ShapeBasis {
  VarContext context;
  std::vector<UPoly> coordinates;  // g_1..g_{n-1}, each of degree < deg g_n
  UPoly eliminant;                 // g_n, monic squarefree

  std::size_t degree() const { return static_cast<std::size_t>(eliminant.degree()); }

  /// The generators X_i - g_i(X_n) and g_n(X_n) as polynomials.
  std::vector<Polynomial> generators() const {
    const std::size_t n = context.size();
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i + 1 < n; ++i)
      out.push_back(Polynomial::variable(context, i) - from_upoly(context, n - 1, coordinates[i]));
    out.push_back(from_upoly(context, n - 1, eliminant));
    return out;
  }
};

/// Reads a reduced lex basis (X_1 > ... > X_n) as a shape basis.
inline ShapeBasis shape_from_lex_basis(const GroebnerBasis& gb) {
  using R = ShapeError::Reason;
  const VarContext& ctx = gb.context();
  const std::size_t n = ctx.size();
  if (gb.order().kind() != MonomialOrder::Kind::lex || gb.order().priority() != MonomialOrder::lex(n).priority())
    throw std::invalid_argument("shape extraction needs the lex order with the last variable smallest");
  if (gb.is_unit()) throw ShapeError(R::not_shape_position, "ideal is the unit ideal; there are no solutions");
  if (auto v = staircase_violation(gb))
    throw ShapeError(R::not_zero_dimensional, "ideal is not zero-dimensional in '" + ctx.name(*v) + "'");

  const auto& gens = gb.generators();
  const std::string advice =
      "lex basis is not in shape form; apply a general-position coordinate change "
      "or check that the ideal is radical";
  if (gens.size() != n) throw ShapeError(R::not_shape_position, advice);

  // Reduced lex basis is sorted with the largest leading monomial first:
  // X_1, X_2, ..., X_{n-1}, X_n^m.
  ShapeBasis sb{ctx, {}, {}};
  const auto lms = gb.leading_monomials();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Monomial xi(n, 0);
    xi[i] = 1;
    if (lms[i] != xi) throw ShapeError(R::not_shape_position, advice);
    Polynomial tail = Polynomial::variable(ctx, i) - gens[i];
    if (!tail.support().empty() && (tail.support().size() > 1 || tail.support().front() != n - 1))
      throw ShapeError(R::not_shape_position, advice);
    sb.coordinates.push_back(to_upoly(tail, n - 1));
  }
  const Polynomial& last = gens[n - 1];
  auto support = last.support();
  if (support.size() != 1 || support.front() != n - 1) throw ShapeError(R::not_shape_position, advice);
  sb.eliminant = to_upoly(last, n - 1).monic();
  if (gcd(sb.eliminant, sb.eliminant.derivative()).degree() > 0)
    throw ShapeError(R::not_squarefree, "eliminant " + from_upoly(ctx, n - 1, sb.eliminant).str() +
                                            " is not squarefree; the ideal is not radical");
  for (const auto& g : sb.coordinates)
    if (g.degree() >= sb.eliminant.degree()) throw ShapeError(R::not_shape_position, advice);
  return sb;
}

inline ShapeBasis shape_basis(const std::vector<Polynomial>& system) {
  if (system.empty()) throw std::invalid_argument("shape_basis: empty system");
  return shape_from_lex_basis(buchberger(system, MonomialOrder::lex(system.front().arity())));
}

}  // namespace sigcount
