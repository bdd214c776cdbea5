#pragma once

// Text front end: polynomial expressions, system files and matrix files.
//
// System file:
//   # comment
//   vars x, y
//   x^2 + y^2 - 1
//   y - x
//   H: x
//
// Expressions use + - * ^ and parentheses over integer or a/b literals and
// declared variables. `^` takes a nonnegative integer exponent. Juxtaposition
// (implicit multiplication) is rejected.

#include "sigcount/matrix.hpp"
#include "sigcount/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigcount {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, const VarContext& ctx, std::size_t line, std::size_t col_offset)
      : s_(text), ctx_(ctx), line_(line), col0_(col_offset) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) {
      if (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '(' ||
          std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("implicit multiplication is not allowed; use '*'");
      fail(std::string("unexpected '") + s_[pos_] + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + pos_ + 1, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent after '^'");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ == s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected a denominator after '/'");
        if (mpz_class(den) == 0) fail("zero denominator");
      }
      return Polynomial::constant(ctx_, Rational(mpz_class(num), mpz_class(den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ctx_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      return Polynomial::variable(ctx_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const VarContext& ctx_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

inline std::size_t first_nonspace(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

}  // namespace detail

/// Parses one expression over `ctx`; `line` is only used in error messages.
inline Polynomial parse_polynomial(std::string_view text, const VarContext& ctx, std::size_t line = 1) {
  return detail::ExprParser(text, ctx, line, 0).parse();
}

/// Parses an expression whose variables are the identifiers it mentions, in order
/// of first appearance ("x" if there are none).
inline Polynomial parse_polynomial_infer(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isdigit(c)) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      continue;
    }
    ++i;
  }
  if (names.empty()) names.push_back("x");
  return parse_polynomial(text, VarContext(names));
}

struct SystemFile {
  VarContext context;
  std::vector<Polynomial> polynomials;
  std::vector<Polynomial> sign_conditions;  // the H: lines
};

inline SystemFile parse_system(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::optional<VarContext> ctx;
  std::vector<Polynomial> polys, hs;
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::string& raw = lines[ln];
    const std::size_t lineno = ln + 1;
    const std::size_t start = detail::first_nonspace(raw);
    if (start == raw.size() || raw[start] == '#') continue;
    std::string_view body(raw);
    body.remove_prefix(start);
    if (!ctx) {
      if (body.substr(0, 4) != "vars" || (body.size() > 4 && !std::isspace(static_cast<unsigned char>(body[4]))))
        throw ParseError(lineno, start + 1, "expected a 'vars' declaration before any polynomial");
      std::vector<std::string> names;
      std::string cur;
      std::size_t col = start + 5;
      auto flush = [&](std::size_t at) {
        std::size_t b = detail::first_nonspace(cur);
        std::size_t e = cur.size();
        while (e > b && std::isspace(static_cast<unsigned char>(cur[e - 1]))) --e;
        std::string name = cur.substr(b, e - b);
        if (name.empty()) throw ParseError(lineno, at, "empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
          throw ParseError(lineno, at, "invalid variable name '" + name + "'");
        for (char ch : name)
          if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            throw ParseError(lineno, at, "invalid variable name '" + name + "'");
        names.push_back(name);
        cur.clear();
      };
      for (std::size_t i = 4; i < body.size(); ++i, ++col) {
        if (body[i] == ',') {
          flush(col);
        } else {
          cur += body[i];
        }
      }
      flush(col);
      try {
        ctx.emplace(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, start + 1, e.what());
      }
      continue;
    }
    if (body.substr(0, 2) == "H:") {
      hs.push_back(detail::ExprParser(body.substr(2), *ctx, lineno, start + 2).parse());
      if (hs.back().is_zero()) throw ParseError(lineno, start + 1, "sign-condition polynomial H must be nonzero");
      continue;
    }
    polys.push_back(detail::ExprParser(body, *ctx, lineno, start).parse());
  }
  if (!ctx) throw ParseError(lines.size(), 1, "missing 'vars' declaration");
  if (polys.empty()) throw ParseError(lines.size(), 1, "system has no polynomials");
  return {*ctx, std::move(polys), std::move(hs)};
}

/// First line n, then n rows of n rationals; '#' lines are ignored.
inline SymMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::vector<std::pair<std::size_t, std::string>> content;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::size_t s = detail::first_nonspace(lines[i]);
    if (s == lines[i].size() || lines[i][s] == '#') continue;
    content.emplace_back(i + 1, lines[i]);
  }
  if (content.empty()) throw ParseError(1, 1, "empty matrix file");
  std::size_t n = 0;
  {
    std::istringstream is(content[0].second);
    long v = -1;
    std::string extra;
    if (!(is >> v) || v < 0 || (is >> extra)) throw ParseError(content[0].first, 1, "expected the matrix size");
    n = static_cast<std::size_t>(v);
  }
  if (content.size() != n + 1)
    throw ParseError(content.back().first, 1,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(content.size() - 1));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream is(content[i + 1].second);
    std::string tok;
    std::size_t j = 0;
    while (is >> tok) {
      if (j == n) throw ParseError(content[i + 1].first, 1, "too many entries in row");
      try {
        m(i, j++) = Rational::parse(tok);
      } catch (const std::exception& e) {
        throw ParseError(content[i + 1].first, 1, e.what());
      }
    }
    if (j != n) throw ParseError(content[i + 1].first, 1, "too few entries in row");
  }
  if (!m.is_symmetric()) throw ParseError(content[0].first, 1, "matrix is not symmetric");
  return SymMatrix(std::move(m));
}

}  // namespace sigcount
