#pragma once

// Independent ground truth for the signature counts: Sturm chains, real-root
// isolation by bisection, and sign determination of H on the real solutions
// of a system via its shape basis. All counts are of distinct roots.

#include "sigcount/polynomial.hpp"
#include "sigcount/shape.hpp"
#include "sigcount/univariate.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigcount {

class EndpointIsRoot : public std::domain_error {
 public:
  explicit EndpointIsRoot(const Rational& x)
      : std::domain_error("interval endpoint " + x.str() + " is a root; widen the interval") {}
};

class OracleInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s_0 = squarefree part of g, s_1 = s_0', s_{k+1} = -rem(s_{k-1}, s_k).
inline std::vector<UPoly> sturm_sequence(const UPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
  if (g.is_constant()) return {g};
  std::vector<UPoly> chain{squarefree_part(g)};
  chain.push_back(chain.front().derivative());
  while (true) {
    UPoly r = -chain[chain.size() - 2].rem(chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline std::size_t sign_variations(const std::vector<UPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    int sg = s.sign_at(x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

/// Distinct roots in (lo, hi] using a precomputed chain.
inline std::size_t sturm_count(const std::vector<UPoly>& chain, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: need lo < hi");
  if (chain.front().sign_at(lo) == 0) throw EndpointIsRoot(lo);
  if (chain.front().sign_at(hi) == 0) throw EndpointIsRoot(hi);
  const std::size_t vl = sign_variations(chain, lo), vh = sign_variations(chain, hi);
  if (vh > vl) throw std::logic_error("sturm_count: sign variations increased");
  return vl - vh;
}

inline std::size_t sturm_count(const UPoly& g, const Rational& lo, const Rational& hi) {
  return sturm_count(sturm_sequence(g), lo, hi);
}

/// 1 + max |a_i| / |a_n|; every complex root lies strictly inside.
inline Rational cauchy_bound(const UPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  Rational m(0);
  for (int i = 0; i < g.degree(); ++i) m = std::max(m, g.coeff(static_cast<std::size_t>(i)).abs());
  return Rational(1) + m / g.lead().abs();
}

inline std::size_t count_all_real(const UPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("count_all_real: zero polynomial");
  if (g.is_constant()) return 0;
  const Rational b = cauchy_bound(g);
  return sturm_count(g, -b, b);
}

struct Isolation {
  std::vector<std::pair<Rational, Rational>> intervals;  // (lo, hi], sorted, disjoint
};

namespace detail {

/// A point of (lo, hi) that avoids the roots of every polynomial in `avoid`,
/// preferring lo + frac * (hi - lo).
inline Rational pick_point(const Rational& lo, const Rational& hi, const Rational& frac,
                           const std::vector<const UPoly*>& avoid) {
  auto ok = [&](const Rational& x) {
    return std::all_of(avoid.begin(), avoid.end(), [&](const UPoly* p) { return p->sign_at(x) != 0; });
  };
  Rational x = lo + (hi - lo) * frac;
  if (ok(x)) return x;
  // The polynomials have finitely many roots, so some j/k works.
  for (long k = 3;; ++k)
    for (long j = 1; j < k; ++j) {
      x = lo + (hi - lo) * Rational(j, k);
      if (ok(x)) return x;
    }
}

}  // namespace detail

/// Bisection from the Cauchy interval; each interval is then narrowed to width <= max_width.
inline Isolation isolate_real_roots(const UPoly& g, const Rational& max_width = Rational(1, 2)) {
  if (g.is_zero() || g.is_constant()) throw std::invalid_argument("isolate_real_roots: need a non-constant polynomial");
  if (max_width.sign() <= 0) throw std::invalid_argument("isolate_real_roots: max_width must be positive");
  const auto chain = sturm_sequence(g);
  const Rational b = cauchy_bound(g);
  Isolation iso;
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const std::size_t c = sturm_count(chain, lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      while (hi - lo > max_width) {
        Rational mid = detail::pick_point(lo, hi, Rational(1, 2), {&chain.front()});
        if (sturm_count(chain, lo, mid) == 1) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      iso.intervals.emplace_back(lo, hi);
      continue;
    }
    Rational mid = detail::pick_point(lo, hi, Rational(1, 2), {&chain.front()});
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(iso.intervals.begin(), iso.intervals.end());
  return iso;
}

/// Sign of f at the unique root of `squarefree_g` in (lo, hi]; 0 when they share it.
inline int sign_at_isolated_root(const UPoly& squarefree_g, const std::vector<UPoly>& g_chain, Rational lo,
                                 Rational hi, const UPoly& f, std::size_t budget = 100000) {
  if (f.is_zero()) return 0;
  if (f.is_constant()) return f.lead().sign();
  const UPoly common = gcd(squarefree_g, f);
  if (common.degree() > 0 && sturm_count(common, lo, hi) == 1) return 0;

  const auto f_chain = sturm_sequence(f);
  const UPoly& fs = f_chain.front();
  for (std::size_t step = 0; step < budget; ++step) {
    const bool lo_clean = fs.sign_at(lo) != 0, hi_clean = fs.sign_at(hi) != 0;
    if (lo_clean && hi_clean && sturm_count(f_chain, lo, hi) == 0) return f.sign_at(hi);
    Rational frac = !hi_clean ? Rational(2, 3) : (!lo_clean ? Rational(1, 3) : Rational(1, 2));
    Rational c = detail::pick_point(lo, hi, frac, {&squarefree_g, &fs});
    if (sturm_count(g_chain, lo, c) == 1) {
      hi = c;
    } else {
      lo = c;
    }
  }
  throw std::logic_error("oracle: sign refinement budget exhausted");
}

struct OracleCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  std::size_t total_real = 0;
  std::optional<Rational> general_position_t;
};

/// Reduces the system to its shape basis (changing coordinates with
/// t = 1..max_trials if needed), then evaluates the sign of H at every
/// isolated real root of the eliminant.
inline OracleCounts oracle_count_system(const std::vector<Polynomial>& system, const Polynomial& h,
                                        unsigned max_trials = 8) {
  if (system.empty()) throw std::invalid_argument("oracle: empty system");
  const std::size_t n = system.front().arity();

  std::optional<ShapeBasis> sb;
  std::optional<Rational> used_t;
  std::string last_error;
  for (unsigned k = 0; k <= max_trials && !sb; ++k) {
    std::vector<Polynomial> sys = system;
    if (k > 0) {
      if (n == 1) break;
      sys = general_position_transform(system, Rational(static_cast<long>(k)));
    }
    GroebnerBasis gb = buchberger(sys, MonomialOrder::lex(n));
    if (gb.is_unit()) return {};
    try {
      sb = shape_from_lex_basis(gb);
      if (k > 0) used_t = Rational(static_cast<long>(k));
    } catch (const ShapeError& e) {
      last_error = e.what();
      if (e.reason() != ShapeError::Reason::not_shape_position) throw OracleInapplicable(e.what());
    }
  }
  if (!sb) throw OracleInapplicable("oracle: " + last_error);

  const Polynomial h_moved = used_t ? general_position_transform(h, *used_t) : h;
  const VarContext uctx({system.front().context().name(n - 1)});
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i + 1 < n; ++i) images.push_back(from_upoly(uctx, 0, sb->coordinates[i]));
  images.push_back(Polynomial::variable(uctx, 0));
  const UPoly h_star = to_upoly(h_moved.compose(images), 0).rem(sb->eliminant);

  OracleCounts out;
  out.general_position_t = used_t;
  if (sb->eliminant.degree() == 0) return out;
  const auto chain = sturm_sequence(sb->eliminant);
  for (const auto& [lo, hi] : isolate_real_roots(sb->eliminant).intervals) {
    ++out.total_real;
    int sg = sign_at_isolated_root(sb->eliminant, chain, lo, hi, h_star);
    if (sg > 0) ++out.positive;
    if (sg < 0) ++out.negative;
    if (sg == 0) ++out.zero;
  }
  return out;
}

}  // namespace sigcount
