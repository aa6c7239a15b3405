#pragma once

// Polynomial expressions in x over Q:
//   expr   := term (("+" | "-") term)*
//   term   := factor (("*" | juxtapose) factor)*
//   factor := base ("^" nat)?
//   base   := rational | "x" | "(" expr ")" | "-" factor
//   rational := int ("/" posint)?

#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "discstrat/dense_poly.hpp"
#include "discstrat/rational.hpp"

namespace discstrat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position),
        message_(message) {}
  std::size_t position() const { return position_; }
  const std::string& reason() const { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

inline constexpr unsigned kMaxParseExponent = 1000;

/// Expression tree over rational literals, x, unary minus, + - * and ^.
struct PolyExpr {
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Power };
  Kind kind = Kind::Literal;
  BigRational value;  // Literal
  unsigned exponent = 0;  // Power
  std::vector<std::unique_ptr<PolyExpr>> children;

  static std::unique_ptr<PolyExpr> literal(BigRational v) {
    auto e = std::make_unique<PolyExpr>();
    e->value = std::move(v);
    return e;
  }
  static std::unique_ptr<PolyExpr> node(Kind k, std::unique_ptr<PolyExpr> a, std::unique_ptr<PolyExpr> b = nullptr) {
    auto e = std::make_unique<PolyExpr>();
    e->kind = k;
    e->children.push_back(std::move(a));
    if (b) e->children.push_back(std::move(b));
    return e;
  }

  UniPoly expand() const {
    switch (kind) {
      case Kind::Literal: return UniPoly(value);
      case Kind::Variable: return UniPoly::monomial(BigRational(1), 1);
      case Kind::Negate: return -children[0]->expand();
      case Kind::Add: return children[0]->expand() + children[1]->expand();
      case Kind::Subtract: return children[0]->expand() - children[1]->expand();
      case Kind::Multiply: return children[0]->expand() * children[1]->expand();
      case Kind::Power: return pow(children[0]->expand(), exponent);
    }
    throw std::logic_error("unknown expression kind");
  }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  std::unique_ptr<PolyExpr> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced parenthesis: unexpected ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_base() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));  // other letters error out in base()
  }

  std::unique_ptr<PolyExpr> expr() {
    auto lhs = term();
    while (at('+') || at('-')) {
      const auto kind = text_[pos_] == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Subtract;
      ++pos_;
      lhs = PolyExpr::node(kind, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<PolyExpr> term() {
    auto lhs = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
      } else if (!starts_base()) {
        break;
      }
      lhs = PolyExpr::node(PolyExpr::Kind::Multiply, std::move(lhs), factor());
    }
    return lhs;
  }

  std::unique_ptr<PolyExpr> factor() {
    auto b = base();
    if (at('^')) {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 4 || std::stoul(digits) > kMaxParseExponent)
        throw ParseError("exponent exceeds " + std::to_string(kMaxParseExponent), start);
      auto p = PolyExpr::node(PolyExpr::Kind::Power, std::move(b));
      p->exponent = static_cast<unsigned>(std::stoul(digits));
      return p;
    }
    return b;
  }

  std::unique_ptr<PolyExpr> base() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return PolyExpr::node(PolyExpr::Kind::Negate, factor());
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      auto e = expr();
      if (!at(')')) throw ParseError("unbalanced parenthesis: '(' at position " + std::to_string(open) + " not closed", pos_);
      ++pos_;
      return e;
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != 'x')
        throw ParseError("unknown variable; only x is allowed", pos_ - 1);
      auto e = std::make_unique<PolyExpr>();
      e->kind = PolyExpr::Kind::Variable;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      throw ParseError(std::string("unknown variable '") + c + "'; only x is allowed", pos_);
    if (c == ')') throw ParseError("unbalanced parenthesis: unexpected ')'", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::unique_ptr<PolyExpr> rational() {
    BigInt num(read_digits());
    BigInt den(1);
    // A '/' is only part of the literal when a positive integer follows.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      const std::size_t slash = pos_++;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected denominator after '/'", slash + 1);
      den = BigInt(digits);
      if (den == 0) throw ParseError("zero denominator", slash + 1);
    }
    return PolyExpr::literal(make_rational(num, den));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::unique_ptr<PolyExpr> parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Exact expansion of the parsed expression, without normalization.
inline UniPoly parse_polynomial(std::string_view text) { return parse_expression(text)->expand(); }

struct ParsedPolynomial {
  UniPoly monic;  // the input divided by its leading coefficient
  std::optional<std::string> warning;  // set when that division changed the input
};

/// Parses and normalizes to a monic polynomial; rejects the zero polynomial.
inline ParsedPolynomial parse_monic_polynomial(std::string_view text) {
  UniPoly p = parse_polynomial(text);
  if (p.is_zero()) throw ParseError("zero polynomial", 0);
  ParsedPolynomial out{p, std::nullopt};
  if (!p.is_monic()) {
    out.warning = "input not monic; divided by leading coefficient " + to_string(p.leading());
    out.monic = monic(p);
  }
  return out;
}

/// Text that parse_polynomial maps back to p, highest degree first.
inline std::string render(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigRational& c = p[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) out << to_string(mag);
    if (i > 0) {
      if (!unit) out << '*';
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

}  // namespace discstrat
