#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fdde/exp_poly.hpp"

namespace fdde {

/// Syntax error with the 0-based input offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// The expression parsed but does not lower to an exponential polynomial
/// (e.g. exp(exp(z)), division by a non-constant).
class LoweringError : public std::runtime_error {
 public:
  LoweringError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parse tree for the expression language
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*   -- divisors must lower to constants
///   factor := '-' factor | atom ('^' uint)?
///   atom   := number | number 'i' | 'i' | 'pi' | 'z' | 'exp' '(' expr ')' | '(' expr ')'
/// with decimal numbers (optional fraction and exponent part), whitespace
/// insensitive.
struct Expr {
  enum class Kind { Literal, Pi, Var, Add, Sub, Mul, Div, Pow, Exp, Neg };

  Kind kind = Kind::Literal;
  Complex literal{0.0};               // Literal
  int power = 0;                      // Pow
  std::unique_ptr<Expr> lhs, rhs;     // binary nodes; Exp/Neg/Pow use lhs only
  std::size_t offset = 0;             // source position, for diagnostics
};

/// Throws ParseError on malformed input.
std::unique_ptr<Expr> parse(std::string_view text);

/// Throws LoweringError when the tree leaves the exponential-polynomial
/// class.
ExpPoly lower(const Expr& expr);

/// parse + lower in one step.
ExpPoly parse_exp_poly(std::string_view text);

/// parse + lower and require a constant (used for complex-valued flags such
/// as "5i", "-0.5+2i", "2*pi").
Complex parse_complex(std::string_view text);

/// Grammar-conformant rendering; reparsing the output yields an equal value.
std::string to_expression(const ExpPoly& f);
std::string to_expression(Complex value);

}  // namespace fdde
