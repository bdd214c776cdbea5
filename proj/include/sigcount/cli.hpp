#pragma once

// Command-line driver. `run_cli` is the whole program minus process setup so
// tests can call it in-process.
//
// Exit codes:
//   0  success
//   1  parse error, bad usage, asymmetric matrix, unreadable file
//   2  ideal is not zero-dimensional
//   3  internal consistency failure (signature identity violated)
//   4  oracle inapplicable (non-radical or no shape basis)
//   5  verify found a disagreement
//   6  shape basis not obtainable (shape command)

#include "sigcount/count.hpp"
#include "sigcount/oracle.hpp"
#include "sigcount/parse.hpp"
#include "sigcount/quadform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace sigcount::cli {

enum ExitCode : int {
  ok = 0,
  usage_error = 1,
  not_zero_dimensional = 2,
  internal_error = 3,
  oracle_inapplicable = 4,
  disagreement = 5,
  shape_unavailable = 6,
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline MonomialOrder parse_order(const std::string& name, std::size_t n) {
  if (name == "lex") return MonomialOrder::lex(n);
  if (name == "degrevlex") return MonomialOrder::degrevlex(n);
  throw std::invalid_argument("unknown order '" + name + "' (expected lex or degrevlex)");
}

/// Stable JSON object for a count report; key order is fixed.
inline nlohmann::ordered_json report_json(const CountReport& r) {
  nlohmann::ordered_json j;
  j["total_real"] = r.total_real;
  j["dim_algebra"] = r.total_complex;
  j["distinct_complex"] = r.distinct_complex;
  j["h_counts"] = nlohmann::ordered_json::array();
  for (const auto& hc : r.h_counts) {
    nlohmann::ordered_json e;
    e["h"] = hc.h.str();
    e["pos"] = hc.counts.positive;
    e["neg"] = hc.counts.negative;
    e["zero"] = hc.counts.zero;
    j["h_counts"].push_back(e);
  }
  if (r.general_position_t) {
    j["general_position_t"] = r.general_position_t->str();
  } else {
    j["general_position_t"] = nullptr;
  }
  return j;
}

struct SystemOptions {
  std::string file;
  std::string order = "degrevlex";
  std::string t;
  unsigned max_trials = 8;
  bool json = false;
};

inline GeneralPositionOptions position_options(const SystemOptions& o) {
  GeneralPositionOptions g;
  g.max_trials = o.max_trials;
  if (!o.t.empty()) {
    g.forced_t = Rational::parse(o.t);
    if (g.forced_t->is_zero()) throw std::invalid_argument("--t must be nonzero");
  }
  return g;
}

inline std::string shape_text(const ShapeBasis& sb) {
  std::ostringstream os;
  for (const auto& g : sb.generators()) os << "  " << g.str() << "\n";
  return os.str();
}

inline int cmd_count(const SystemOptions& o, Io io) {
  const SystemFile sys = parse_system(read_input(o.file, io.in));
  const MonomialOrder ord = parse_order(o.order, sys.context.size());
  const GeneralPositionOptions gp = position_options(o);

  // The algebra is built in the requested order; shape extraction always uses lex.
  SystemCounter counter(sys.polynomials, ord);
  CountReport r;
  const auto rp = counter.real_points();
  r.total_real = rp.total_real;
  r.total_complex = rp.total_complex;
  r.distinct_complex = rp.distinct_complex;
  for (const auto& h : sys.sign_conditions) r.h_counts.push_back({h, counter.sign_counts(h)});
  if (counter.algebra().dim() > 0) {
    ShapeAttempt sa = find_shape_basis(sys.polynomials, gp);
    r.shape = std::move(sa.shape);
    r.general_position_t = std::move(sa.t);
    r.shape_note = std::move(sa.note);
  } else {
    r.shape_note = "unit ideal: the system has no solutions";
  }

  if (o.json) {
    io.out << report_json(r).dump() << "\n";
    return ok;
  }
  io.out << "variables: ";
  for (std::size_t i = 0; i < sys.context.size(); ++i) io.out << (i ? ", " : "") << sys.context.name(i);
  io.out << "\norder: " << o.order << "\n";
  io.out << "dim_algebra: " << r.total_complex << "\n";
  io.out << "distinct_complex: " << r.distinct_complex << "\n";
  io.out << "total_real: " << r.total_real << "\n";
  io.out << "trace_form_type: " << counter.trace_type() << "\n";
  for (const auto& hc : r.h_counts) {
    const auto& c = hc.counts;
    io.out << "H = " << hc.h.str() << ": pos " << c.positive << ", neg " << c.negative << ", zero " << c.zero
           << "  (sign Phi_h " << c.sigma_h << ", sign Phi_h^2 " << c.sigma_h2 << ", sign tr_B " << c.sigma_zero
           << ", rank Phi_h " << c.rank_h << ")\n";
  }
  io.out << "general_position_t: " << (r.general_position_t ? r.general_position_t->str() : "none") << "\n";
  if (r.shape) {
    io.out << "shape basis:\n" << shape_text(*r.shape);
  } else if (!r.shape_note.empty()) {
    io.out << "shape basis: unavailable (" << r.shape_note << ")\n";
  }
  return ok;
}

inline int cmd_hermite(const std::string& literal, bool json, Io io) {
  const Polynomial g = parse_polynomial_infer(literal);
  if (g.support().size() > 1) throw std::invalid_argument("hermite needs a univariate polynomial");
  const HermiteCount h = hermite_count(g);
  if (json) {
    nlohmann::ordered_json j;
    j["polynomial"] = g.str();
    j["r"] = h.real_roots;
    j["s"] = h.complex_pairs;
    j["type"] = {h.type.p, h.type.q};
    j["rank"] = h.rank();
    j["dim"] = h.dim;
    io.out << j.dump() << "\n";
    return ok;
  }
  io.out << "polynomial: " << g.str() << "\n";
  io.out << "r: " << h.real_roots << "\n";
  io.out << "s: " << h.complex_pairs << "\n";
  io.out << "type: " << h.type << "\n";
  io.out << "rank: " << h.rank() << "\n";
  io.out << "dim: " << h.dim << "\n";
  return ok;
}

inline int cmd_signature(const std::string& file, bool json, Io io) {
  const SymMatrix s = parse_matrix(read_input(file, io.in));
  const FormType t = type_of(s);
  const FormType td = type_via_descartes(s);
  const auto hw = hurwitz_type(s);
  if (!(t == td)) throw InternalConsistencyError("diagonalization and Descartes disagree on the type");
  if (hw && !(*hw == t)) throw InternalConsistencyError("diagonalization and Hurwitz disagree on the type");
  if (json) {
    nlohmann::ordered_json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["rank"] = t.rank();
    j["signature"] = t.signature();
    j["definiteness"] = to_string(definiteness(t));
    if (hw) {
      j["hurwitz"] = {hw->p, hw->q};
    } else {
      j["hurwitz"] = nullptr;
    }
    j["descartes_agrees"] = true;
    io.out << j.dump() << "\n";
    return ok;
  }
  io.out << "type: " << t << "\n";
  io.out << "rank: " << t.rank() << "\n";
  io.out << "signature: " << t.signature() << "\n";
  io.out << "definiteness: " << to_string(definiteness(t)) << "\n";
  io.out << "hurwitz: ";
  if (hw) {
    io.out << *hw << "\n";
  } else {
    io.out << "not applicable (a leading principal minor vanishes)\n";
  }
  io.out << "descartes: " << td << " [agrees]\n";
  return ok;
}

inline int cmd_shape(const SystemOptions& o, Io io) {
  const SystemFile sys = parse_system(read_input(o.file, io.in));
  SystemCounter counter(sys.polynomials);  // rejects non-zero-dimensional input
  if (counter.algebra().dim() == 0) {
    io.err << "error: unit ideal; the system has no solutions and no shape basis\n";
    return shape_unavailable;
  }
  ShapeAttempt sa = find_shape_basis(sys.polynomials, position_options(o));
  if (!sa.shape) {
    io.err << "error: " << sa.note << "\n";
    return shape_unavailable;
  }
  io.out << "general_position_t: " << (sa.t ? sa.t->str() : "none") << "\n";
  io.out << "degree: " << sa.shape->degree() << "\n";
  io.out << "shape basis:\n" << shape_text(*sa.shape);
  return ok;
}

inline int cmd_groebner(const SystemOptions& o, Io io) {
  const SystemFile sys = parse_system(read_input(o.file, io.in));
  const GroebnerBasis gb = buchberger(sys.polynomials, parse_order(o.order, sys.context.size()));
  io.out << "order: " << o.order << "\n";
  for (const auto& g : gb.generators()) io.out << "  " << g.str() << "\n";
  io.out << "zero_dimensional: " << (is_zero_dimensional(gb) ? "yes" : "no") << "\n";
  if (is_zero_dimensional(gb)) io.out << "dim_algebra: " << QuotientAlgebra(gb).dim() << "\n";
  return ok;
}

inline int cmd_verify(const SystemOptions& o, Io io) {
  const SystemFile sys = parse_system(read_input(o.file, io.in));
  SystemCounter counter(sys.polynomials);
  const std::size_t n = sys.context.size();
  std::vector<Polynomial> hs = sys.sign_conditions;
  const Polynomial one = Polynomial::constant(sys.context, Rational(1));

  struct Row {
    std::string name;
    std::size_t ours, theirs;
  };
  std::vector<Row> rows;
  OracleCounts base;
  try {
    base = oracle_count_system(sys.polynomials, one, o.max_trials);
  } catch (const OracleInapplicable& e) {
    io.err << "error: oracle inapplicable: " << e.what() << "\n";
    return oracle_inapplicable;
  }
  rows.push_back({"total_real", counter.real_points().total_real, base.total_real});
  if (n == 1 && sys.polynomials.size() == 1) {
    const UPoly g = to_upoly(sys.polynomials.front(), 0);
    rows.push_back({"hermite_r vs sturm", hermite_count(sys.polynomials.front()).real_roots, count_all_real(g)});
  }
  for (const auto& h : hs) {
    const SignCounts sc = counter.sign_counts(h);
    const OracleCounts oc = oracle_count_system(sys.polynomials, h, o.max_trials);
    const std::string tag = "H=" + h.str();
    rows.push_back({tag + " pos", sc.positive, oc.positive});
    rows.push_back({tag + " neg", sc.negative, oc.negative});
    rows.push_back({tag + " zero", sc.zero, oc.zero});
    rows.push_back({tag + " total", sc.positive + sc.negative + sc.zero, oc.total_real});
  }

  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  bool all = true;
  io.out << std::left << std::setw(static_cast<int>(width + 2)) << "quantity" << std::setw(11) << "signature"
         << std::setw(8) << "oracle"
         << "verdict\n";
  for (const auto& r : rows) {
    const bool agree = r.ours == r.theirs;
    all = all && agree;
    io.out << std::left << std::setw(static_cast<int>(width + 2)) << r.name << std::setw(11) << r.ours
           << std::setw(8) << r.theirs << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  io.out << "general_position_t: " << (base.general_position_t ? base.general_position_t->str() : "none") << "\n";
  io.out << (all ? "all counts agree\n" : "counts disagree\n");
  return all ? ok : disagreement;
}

inline int run_cli(const std::vector<std::string>& args, Io io) {
  CLI::App app{"Exact real-solution counting for zero-dimensional polynomial systems", "sigcount"};
  app.require_subcommand(1);

  SystemOptions count_opts, shape_opts, verify_opts, gb_opts;
  auto add_system_flags = [](CLI::App* sub, SystemOptions& o, bool with_position) {
    sub->add_option("file", o.file, "system file, or - for stdin")->required();
    if (with_position) {
      sub->add_option("--t", o.t, "use only this general-position parameter (rational)");
      sub->add_option("--max-trials", o.max_trials, "general-position retries t = 1..N");
    }
  };

  auto* count = app.add_subcommand("count", "count real and complex solutions, and sign conditions of H: lines");
  add_system_flags(count, count_opts, true);
  count->add_flag("--json", count_opts.json, "machine-readable report");
  count->add_option("--order", count_opts.order, "lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));

  std::string hermite_literal;
  bool hermite_json = false;
  auto* hermite = app.add_subcommand("hermite", "Hermite count of distinct real roots of a univariate polynomial");
  hermite->add_option("polynomial", hermite_literal, "e.g. \"x^3 - x\"")->required();
  hermite->add_flag("--json", hermite_json);

  std::string matrix_file;
  bool sig_json = false;
  auto* signature = app.add_subcommand("signature", "type, rank and signature of a symmetric matrix file");
  signature->add_option("file", matrix_file, "matrix file, or - for stdin")->required();
  signature->add_flag("--json", sig_json);

  auto* shape = app.add_subcommand("shape", "shape-form lex basis, changing coordinates if needed");
  add_system_flags(shape, shape_opts, true);

  auto* verify = app.add_subcommand("verify", "compare signature counts against the Sturm oracle");
  add_system_flags(verify, verify_opts, true);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis");
  add_system_flags(groebner, gb_opts, false);
  groebner->add_option("--order", gb_opts.order, "lex or degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (*count) return cmd_count(count_opts, io);
    if (*hermite) return cmd_hermite(hermite_literal, hermite_json, io);
    if (*signature) return cmd_signature(matrix_file, sig_json, io);
    if (*shape) return cmd_shape(shape_opts, io);
    if (*verify) return cmd_verify(verify_opts, io);
    if (*groebner) return cmd_groebner(gb_opts, io);
  } catch (const ParseError& e) {
    io.err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const NotZeroDimensional& e) {
    io.err << "error: " << e.what() << "\n";
    return not_zero_dimensional;
  } catch (const InternalConsistencyError& e) {
    io.err << "internal consistency failure: " << e.what() << "\n";
    return internal_error;
  } catch (const OracleInapplicable& e) {
    io.err << "error: oracle inapplicable: " << e.what() << "\n";
    return oracle_inapplicable;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace sigcount::cli
