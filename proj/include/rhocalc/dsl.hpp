#pragma once

/**
 * @file dsl.hpp
 * @brief Text front end: expressions, point literals and domains.
 *
 * Expression grammar:
 *
 *   expr     := term (('+' | '-') term)*
 *   term     := unary (('*' | '/') unary)*
 *   unary    := '-' unary | factor
 *   factor   := base ('^' exponent)?
 *   exponent := '-'? INT | '(' '-'? INT ('/' INT)? ')'
 *   base     := NUMBER | 's' | 'rho' | 'i' | 'x' | 'y' | 'z'
 *             | FUNC '(' expr ')' | '(' expr ')'
 *   FUNC     := exp | log | sin | cos | sqrt | delta | heaviside | gauss | gausscdf
 *
 * `s^1/2` is rejected as ambiguous; rational exponents are written `s^(1/2)`.
 * `delta` and `heaviside` expand to their Gaussian kernels at parse time, and
 * `gauss`/`gausscdf` name the kernels directly so that every tree prints back
 * to parseable text.
 *
 * Point literals: `x=0.5+1*s^2, y=0`. Domains: `R`, `R^d`, `box(lo,hi,...)`,
 * `ball(c_1,...,c_d,r)`, `annulus(cx,cy,r_in,r_out)`, `union(a,b,c,d)`.
 */

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rhocalc/asymfunc.hpp"
#include "rhocalc/series_io.hpp"

namespace rhocalc {

namespace dsl_detail {

enum class TokenKind { Number, Ident, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < src.size() &&
                                                        std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      t.kind = TokenKind::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = TokenKind::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("+-*/^(),=").find(c) != std::string_view::npos) {
      t.kind = TokenKind::Symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

inline bool is_integer_literal(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline std::optional<std::size_t> variable_index(const std::string& name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  Expr parse() {
    Expr e = expression();
    if (peek().kind != TokenKind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_symbol(char c) const { return peek().kind == TokenKind::Symbol && peek().text[0] == c; }
  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, peek().line, peek().column);
  }
  void expect(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Expr expression() {
    Expr lhs = term();
    while (at_symbol('+') || at_symbol('-')) {
      const char op = next().text[0];
      Expr rhs = term();
      lhs = op == '+' ? expr::add(lhs, rhs) : expr::sub(lhs, rhs);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at_symbol('*') || at_symbol('/')) {
      const char op = next().text[0];
      Expr rhs = unary();
      lhs = op == '*' ? expr::mul(lhs, rhs) : expr::div(lhs, rhs);
    }
    return lhs;
  }

  Expr unary() {
    if (at_symbol('-')) {
      ++pos_;
      Expr operand = unary();
      if (const auto* c = expr::as_const(operand)) return expr::constant(-c->value);
      return expr::neg(operand);
    }
    return factor();
  }

  Expr factor() {
    const bool bare_scale = peek().kind == TokenKind::Ident && (peek().text == "s" || peek().text == "rho");
    Expr base = primary();
    if (!at_symbol('^')) return base;
    ++pos_;
    const Exponent q = exponent();
    if (bare_scale) return expr::rho_pow(q);
    return expr::rat_pow(base, q);
  }

  std::int64_t integer() {
    const Token& t = peek();
    if (t.kind != TokenKind::Number || !is_integer_literal(t.text)) fail("expected an integer exponent");
    ++pos_;
    return std::stoll(t.text);
  }

  Exponent exponent() {
    if (at_symbol('(')) {
      ++pos_;
      const bool negative = at_symbol('-');
      if (negative) ++pos_;
      std::int64_t num = integer();
      std::int64_t den = 1;
      if (at_symbol('/')) {
        ++pos_;
        den = integer();
        if (den == 0) fail("zero denominator in exponent");
      }
      expect(')');
      return Exponent(negative ? -num : num, den);
    }
    const bool negative = at_symbol('-');
    if (negative) ++pos_;
    const std::int64_t k = integer();
    if (at_symbol('/') && tokens_[pos_ + 1].kind == TokenKind::Number &&
        is_integer_literal(tokens_[pos_ + 1].text)) {
      fail("ambiguous exponent '" + std::to_string(k) + "/" + tokens_[pos_ + 1].text +
           "'; write a rational exponent as ^(p/q)");
    }
    return Exponent(negative ? -k : k);
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      ++pos_;
      char* end = nullptr;
      const double v = std::strtod(t.text.c_str(), &end);
      return expr::constant(v);
    }
    if (at_symbol('(')) {
      ++pos_;
      Expr inner = expression();
      expect(')');
      return inner;
    }
    if (t.kind != TokenKind::Ident) fail(t.kind == TokenKind::End ? "unexpected end of input"
                                                                  : "unexpected '" + t.text + "'");
    const std::string id = t.text;
    ++pos_;
    if (id == "s" || id == "rho") return expr::rho_pow(1);
    if (id == "i") return expr::constant({0.0, 1.0});
    if (auto idx = variable_index(id)) return expr::var(*idx);
    if (id == "exp" || id == "log" || id == "sin" || id == "cos" || id == "sqrt" || id == "delta" ||
        id == "heaviside" || id == "gauss" || id == "gausscdf") {
      expect('(');
      Expr arg = expression();
      expect(')');
      if (id == "exp") return expr::compose(Primitive::Exp, arg);
      if (id == "log") return expr::compose(Primitive::Log, arg);
      if (id == "sin") return expr::compose(Primitive::Sin, arg);
      if (id == "cos") return expr::compose(Primitive::Cos, arg);
      if (id == "gauss") return expr::compose(Primitive::Gauss, arg);
      if (id == "gausscdf") return expr::compose(Primitive::GaussCdf, arg);
      if (id == "sqrt") return expr::rat_pow(arg, Exponent(1, 2));
      if (id == "delta") return expr::delta_kernel(arg);
      return expr::heaviside_kernel(arg);
    }
    throw UnboundVariable(std::to_string(t.line) + ":" + std::to_string(t.column) +
                          ": unknown identifier '" + id + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

enum Precedence { kSum = 1, kProduct = 2, kPower = 3, kAtom = 4 };

inline int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Add>) return kSum;
        else if constexpr (std::is_same_v<T, Mul>) return kProduct;
        else if constexpr (std::is_same_v<T, IntPow> || std::is_same_v<T, RhoPow>) return kPower;
        else if constexpr (std::is_same_v<T, RatPow>) return n.power == Exponent(1, 2) ? kAtom : kPower;
        else return kAtom;
      },
      e.node().value);
}

std::string print(const Expr& e);

inline std::string print_at(const Expr& e, int min_precedence) {
  const std::string s = print(e);
  return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

inline std::string print(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          if (n.index > 2) throw Error("variable index beyond z has no text form");
          return std::string(1, "xyz"[n.index]);
        } else if constexpr (std::is_same_v<T, Const>) {
          const double re = n.value.real();
          const double im = n.value.imag();
          if (im == 0.0) return re < 0.0 || std::signbit(re) ? "(" + format_number(re) + ")" : format_number(re);
          if (re == 0.0 && im == 1.0) return "i";
          const std::string imag = im < 0.0 ? "(" + format_number(im) + ")" : format_number(im);
          return "(" + format_number(re) + " + " + imag + "*i)";
        } else if constexpr (std::is_same_v<T, RhoPow>) {
          return "s^" + format_exponent(n.exp);
        } else if constexpr (std::is_same_v<T, Add>) {
          return print_at(n.lhs, kSum) + " + " + print_at(n.rhs, kProduct);
        } else if constexpr (std::is_same_v<T, Mul>) {
          return print_at(n.lhs, kProduct) + "*" + print_at(n.rhs, kPower);
        } else if constexpr (std::is_same_v<T, IntPow>) {
          return print_at(n.base, kAtom) + "^" + std::to_string(n.power);
        } else if constexpr (std::is_same_v<T, RatPow>) {
          if (n.power == Exponent(1, 2)) return "sqrt(" + print(n.base) + ")";
          return print_at(n.base, kAtom) + "^(" + n.power.to_string() + ")";
        } else {
          return std::string(name(n.fn)) + "(" + print(n.arg) + ")";
        }
      },
      e.node().value);
}

inline std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

inline std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline double parse_bound(const std::string& text) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) throw Error("bad number '" + t + "' in domain");
  return v;
}

}  // namespace dsl_detail

/// Parses an expression in the grammar above.
inline Expr parse_expression(std::string_view source) { return dsl_detail::Parser(source).parse(); }

/// Prints a tree back into the grammar; parsing the output gives a tree with
/// the same shape and constants.
inline std::string to_dsl(const Expr& e) { return dsl_detail::print(e); }

/// Parses `x=<series>, y=<series>, ...`. The constant term of each coordinate
/// is its standard part; the remaining terms must have positive exponents.
inline AsymptoticPoint parse_point(std::string_view text, Exponent order = kDefaultOrder) {
  std::vector<std::optional<std::pair<double, AsymptoticScalar>>> coords;
  for (const auto& raw : dsl_detail::split_top_level(text)) {
    const auto part = dsl_detail::trim(raw);
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw SyntaxError("point coordinate needs 'name=value'", 1, 1);
    const auto name = dsl_detail::trim(part.substr(0, eq));
    const auto idx = dsl_detail::variable_index(name);
    if (!idx) throw UnboundVariable("unknown coordinate '" + name + "'");
    const Expr value = parse_expression(part.substr(eq + 1));
    if (arity(value) != 0) throw Error("coordinate '" + name + "' must not depend on variables");
    Config exact;
    exact.order = order;
    exact.tau = 0.0;  // keep every literal term, however small
    const auto series = evaluate(value, AsymptoticPoint{}, exact);
    if (!series.is_real()) throw Error("coordinate '" + name + "' is not real");
    std::vector<Term> tail;
    for (const auto& t : series.re().terms()) {
      if (t.exp < 0) {
        throw NotInfinitesimal("coordinate '" + name + "' is infinitely large");
      }
      if (t.exp > 0) tail.push_back(t);
    }
    if (coords.size() <= *idx) coords.resize(*idx + 1);
    if (coords[*idx]) throw Error("coordinate '" + name + "' given twice");
    coords[*idx] = std::make_pair(series.re().standard_part(), normalize(std::move(tail), order, 0.0));
  }
  std::vector<double> standard;
  std::vector<AsymptoticScalar> h;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i]) throw UnboundVariable(std::string("coordinate '") + "xyz"[i] + "' missing");
    standard.push_back(coords[i]->first);
    h.push_back(coords[i]->second);
  }
  return {standard, AsymptoticVector(std::move(h), 0.0)};
}

/// Point literal for an AsymptoticPoint (inverse of parse_point).
inline std::string format_point(const AsymptoticPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i) out += ", ";
    out += std::string(1, "xyz"[i]) + "=" + dsl_detail::format_number(p.standard_part()[i]);
    for (const auto& t : p.infinitesimal_part()[i].terms()) {
      out += (t.coef < 0 ? " - " : " + ") + dsl_detail::format_number(std::abs(t.coef)) + "*s^" +
             format_exponent(t.exp);
    }
  }
  return out;
}

inline DomainSpec parse_domain(std::string_view text) {
  const std::string t = dsl_detail::trim(text);
  if (t == "R") return DomainSpec::whole_space(1);
  if (t.rfind("R^", 0) == 0) {
    const auto d = std::stoul(t.substr(2));
    return DomainSpec::whole_space(d);
  }
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')') throw Error("unrecognized domain '" + t + "'");
  const std::string kind = dsl_detail::trim(t.substr(0, open));
  std::vector<double> args;
  for (const auto& a : dsl_detail::split_top_level(t.substr(open + 1, t.size() - open - 2))) {
    args.push_back(dsl_detail::parse_bound(a));
  }
  if (kind == "box") {
    if (args.empty() || args.size() % 2 != 0) throw Error("box needs lo,hi pairs");
    std::vector<double> lo;
    std::vector<double> hi;
    for (std::size_t i = 0; i < args.size(); i += 2) {
      lo.push_back(args[i]);
      hi.push_back(args[i + 1]);
    }
    return DomainSpec::box(lo, hi);
  }
  if (kind == "ball") {
    if (args.size() < 2) throw Error("ball needs a centre and a radius");
    const double r = args.back();
    args.pop_back();
    return DomainSpec::ball(args, r);
  }
  if (kind == "annulus") {
    if (args.size() != 4) throw Error("annulus needs cx,cy,r_in,r_out");
    return DomainSpec::annulus(args[0], args[1], args[2], args[3]);
  }
  if (kind == "union") {
    if (args.size() != 4) throw Error("union needs a,b,c,d");
    return DomainSpec::interval_union(args[0], args[1], args[2], args[3]);
  }
  throw Error("unrecognized domain '" + t + "'");
}

/// An expression bound to a domain (and optionally a point).
struct ParsedProgram {
  Expr expr;
  DomainSpec domain;
  std::optional<AsymptoticPoint> point;
};

/// Parses an expression with its domain; every variable must be a domain coordinate.
inline ParsedProgram parse_program(std::string_view expression, std::string_view domain,
                                   std::optional<std::string_view> point = std::nullopt,
                                   Exponent order = kDefaultOrder) {
  ParsedProgram program{parse_expression(expression), parse_domain(domain), std::nullopt};
  const auto used = arity(program.expr);
  if (used > program.domain.dimension()) {
    throw UnboundVariable(std::string("variable '") + "xyz"[std::min<std::size_t>(used - 1, 2)] +
                          "' is not a coordinate of " + program.domain.name());
  }
  if (point) {
    program.point = parse_point(*point, order);
    if (program.point->dimension() != program.domain.dimension()) {
      throw Error("point dimension does not match " + program.domain.name());
    }
  }
  return program;
}

}  // namespace rhocalc
