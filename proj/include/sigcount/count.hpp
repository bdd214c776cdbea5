#pragma once

// Counting real solutions of zero-dimensional systems from signatures of
// trace forms.
//
//   sign tr              = #real points
//   rank tr              = #distinct complex points
//   sign Phi_h           = #{H > 0} - #{H < 0}
//   sign Phi_{h^2}       = #{H > 0} + #{H < 0}
//   sign tr on A/(h)     = #{H = 0}
//
// None of these need a radical ideal or general position; only the shape
// basis does.

#include "sigcount/groebner.hpp"
#include "sigcount/quadform.hpp"
#include "sigcount/shape.hpp"
#include "sigcount/traceform.hpp"
#include "sigcount/univariate.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigcount {

/// A signature identity failed; this indicates a bug, not bad input.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct HermiteCount {
  std::size_t real_roots = 0;     // r: distinct real roots
  std::size_t complex_pairs = 0;  // s: pairs of distinct non-real roots
  FormType type;                  // always (r + s, s)
  std::size_t dim = 0;            // deg g
  std::size_t rank() const { return type.rank(); }
};

/// Hermite's method on Q[X]/(g).
inline HermiteCount hermite_count(const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("hermite_count: zero polynomial");
  if (g.is_constant()) return {};
  const std::size_t var = univariate_variable(g);
  const VarContext uctx({g.context().name(var)});
  const Polynomial ug = from_upoly(uctx, 0, to_upoly(g, var));
  QuotientAlgebra alg(buchberger({ug}, MonomialOrder::lex(1)));
  const FormType t = type_of(trace_form(alg));
  if (t.q > t.p) throw InternalConsistencyError("hermite_count: negative trace-form signature");
  return {t.p - t.q, t.q, t, alg.dim()};
}

struct RealPointCount {
  std::size_t total_real = 0;
  std::size_t total_complex = 0;     // dim A, solutions counted with multiplicity
  std::size_t distinct_complex = 0;  // rank of the trace form
};

struct SignCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long sigma_h = 0;             // sign Phi_h
  long sigma_h2 = 0;            // sign Phi_{h^2}
  long sigma_zero = 0;          // sign of the trace form of A/(h)
  std::size_t rank_h = 0;       // #complex solutions with H != 0
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

/// One zero-dimensional system with its algebra built once and reused for
/// every sign query.
class SystemCounter {
 public:
  explicit SystemCounter(const std::vector<Polynomial>& system)
      : SystemCounter(system, system.empty() ? MonomialOrder::degrevlex(1)
                                             : MonomialOrder::degrevlex(system.front().arity())) {}

  SystemCounter(const std::vector<Polynomial>& system, const MonomialOrder& order)
      : system_(system), algebra_(buchberger(checked(system), order)), basis_mats_(basis_matrices(algebra_)) {
    trace_type_ = type_of(generalized_trace_form(algebra_, one(), basis_mats_));
    if (trace_type_.q > trace_type_.p) throw InternalConsistencyError("trace form has negative signature");
  }

  const QuotientAlgebra& algebra() const { return algebra_; }
  const FormType& trace_type() const { return trace_type_; }

  RealPointCount real_points() const {
    return {trace_type_.p - trace_type_.q, algebra_.dim(), trace_type_.rank()};
  }

  SymMatrix gram(const Polynomial& h) const { return generalized_trace_form(algebra_, h, basis_mats_); }

  SignCounts sign_counts(const Polynomial& h) const {
    if (h.is_zero()) throw std::invalid_argument("sign conditions need a nonzero polynomial H");
    if (!(h.context() == algebra_.context())) throw std::invalid_argument("H uses a different variable context");
    const FormType t1 = type_of(gram(h));
    const FormType t2 = type_of(gram(h * h));

    std::vector<Polynomial> with_h = algebra_.source().generators();
    with_h.push_back(h);
    GroebnerBasis gb_b = buchberger(with_h, algebra_.source().order());
    long sigma_zero = 0;
    if (!gb_b.is_unit()) {
      QuotientAlgebra b(std::move(gb_b));
      sigma_zero = type_of(trace_form(b)).signature();
    }

    SignCounts sc;
    sc.sigma_h = t1.signature();
    sc.sigma_h2 = t2.signature();
    sc.sigma_zero = sigma_zero;
    sc.rank_h = t1.rank();
    if ((sc.sigma_h2 + sc.sigma_h) % 2 != 0)
      throw InternalConsistencyError("signature parity violated: sign Phi_h and sign Phi_h^2 differ by an odd number");
    if (sc.sigma_h2 < 0 || std::abs(sc.sigma_h) > sc.sigma_h2 || sigma_zero < 0)
      throw InternalConsistencyError("signatures out of range");
    sc.positive = static_cast<std::size_t>((sc.sigma_h2 + sc.sigma_h) / 2);
    sc.negative = static_cast<std::size_t>((sc.sigma_h2 - sc.sigma_h) / 2);
    sc.zero = static_cast<std::size_t>(sigma_zero);
    if (sc.positive + sc.negative + sc.zero != real_points().total_real)
      throw InternalConsistencyError("partition identity p + q + z = #real points violated");
    return sc;
  }

 private:
  static const std::vector<Polynomial>& checked(const std::vector<Polynomial>& system) {
    if (system.empty()) throw std::invalid_argument("empty polynomial system");
    return system;
  }
  Polynomial one() const { return Polynomial::constant(algebra_.context(), Rational(1)); }

  std::vector<Polynomial> system_;
  QuotientAlgebra algebra_;
  std::vector<Matrix> basis_mats_;
  FormType trace_type_;
};

inline RealPointCount count_real_points(const std::vector<Polynomial>& system) {
  return SystemCounter(system).real_points();
}

inline SignCounts prs_sign_counts(const std::vector<Polynomial>& system, const Polynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("sign conditions need a nonzero polynomial H");
  return SystemCounter(system).sign_counts(h);
}

struct HCount {
  Polynomial h;
  SignCounts counts;
};

struct CountReport {
  std::size_t total_real = 0;
  std::size_t total_complex = 0;
  std::size_t distinct_complex = 0;
  std::vector<HCount> h_counts;
  std::optional<Rational> general_position_t;  // set when a transform produced the shape basis
  std::optional<ShapeBasis> shape;
  std::string shape_note;  // why shape extraction failed, if it did
};

struct GeneralPositionOptions {
  unsigned max_trials = 8;
  std::optional<Rational> forced_t;  // use only this t
};

struct ShapeAttempt {
  std::optional<ShapeBasis> shape;
  std::optional<Rational> t;
  std::string note;
};

/// Tries the untransformed lex basis, then t = 1, 2, ..., max_trials (or only forced_t).
inline ShapeAttempt find_shape_basis(const std::vector<Polynomial>& system, const GeneralPositionOptions& opts) {
  ShapeAttempt out;
  auto attempt = [&](const std::vector<Polynomial>& sys, std::optional<Rational> t) -> bool {
    try {
      out.shape = shape_basis(sys);
      out.t = std::move(t);
      out.note.clear();
      return true;
    } catch (const ShapeError& e) {
      out.note = e.what();
      if (e.reason() != ShapeError::Reason::not_shape_position) throw;
      return false;
    }
  };
  try {
    if (opts.forced_t) {
      attempt(general_position_transform(system, *opts.forced_t), opts.forced_t);
      return out;
    }
    if (attempt(system, std::nullopt)) return out;
    if (system.front().arity() == 1) return out;
    for (unsigned k = 1; k <= opts.max_trials; ++k) {
      Rational t(static_cast<long>(k));
      if (attempt(general_position_transform(system, t), t)) return out;
    }
    out.note = "no shape basis after " + std::to_string(opts.max_trials) + " general-position trials";
  } catch (const ShapeError& e) {
    out.note = e.what();
  }
  return out;
}

inline CountReport count_with_general_position(const std::vector<Polynomial>& system,
                                               const std::vector<Polynomial>& hs,
                                               const GeneralPositionOptions& opts = {}) {
  SystemCounter counter(system);
  CountReport report;
  const auto rp = counter.real_points();
  report.total_real = rp.total_real;
  report.total_complex = rp.total_complex;
  report.distinct_complex = rp.distinct_complex;
  for (const auto& h : hs) report.h_counts.push_back({h, counter.sign_counts(h)});
  if (counter.algebra().dim() == 0) {
    report.shape_note = "unit ideal: no solutions";
    return report;
  }
  ShapeAttempt sa = find_shape_basis(system, opts);
  report.shape = std::move(sa.shape);
  report.general_position_t = std::move(sa.t);
  report.shape_note = std::move(sa.note);
  return report;
}

}  // namespace sigcount
