#include "fdde/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace fdde {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::unique_ptr<Expr> run() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  static constexpr int kMaxDepth = 256;

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth)
        throw ParseError("expression nests too deeply", parser.pos_);
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static std::unique_ptr<Expr> make(Expr::Kind kind, std::size_t offset) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->offset = offset;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind kind, std::unique_ptr<Expr> l,
                                      std::unique_ptr<Expr> r, std::size_t offset) {
    auto e = make(kind, offset);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> parse_expr() {
    DepthGuard guard(*this);
    auto left = parse_term();
    while (true) {
      const std::size_t at = pos_;
      if (consume('+')) {
        left = binary(Expr::Kind::Add, std::move(left), parse_term(), at);
      } else if (consume('-')) {
        left = binary(Expr::Kind::Sub, std::move(left), parse_term(), at);
      } else {
        return left;
      }
    }
  }

  std::unique_ptr<Expr> parse_term() {
    auto left = parse_factor();
    while (true) {
      const std::size_t at = pos_;
      if (consume('*')) {
        left = binary(Expr::Kind::Mul, std::move(left), parse_factor(), at);
      } else if (consume('/')) {
        left = binary(Expr::Kind::Div, std::move(left), parse_factor(), at);
      } else {
        return left;
      }
    }
  }

  std::unique_ptr<Expr> parse_factor() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t at = pos_;
    if (consume('-')) {
      auto e = make(Expr::Kind::Neg, at);
      e->lhs = parse_factor();
      return e;
    }
    auto base = parse_atom();
    if (consume('^')) {
      skip_ws();
      const std::size_t digits_at = pos_;
      long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 1'000'000) throw ParseError("power is too large", digits_at);
        ++pos_;
      }
      if (pos_ == digits_at)
        throw ParseError("expected a nonnegative integer power after '^'", pos_);
      auto e = make(Expr::Kind::Pow, at);
      e->lhs = std::move(base);
      e->power = static_cast<int>(value);
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a value", pos_);
    const std::size_t at = pos_;
    const char c = text_[pos_];

    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();

    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "i") {
        pos_ = end;
        auto e = make(Expr::Kind::Literal, at);
        e->literal = Complex{0.0, 1.0};
        return e;
      }
      if (word == "pi") {
        pos_ = end;
        return make(Expr::Kind::Pi, at);
      }
      if (word == "z") {
        pos_ = end;
        return make(Expr::Kind::Var, at);
      }
      if (word == "exp") {
        pos_ = end;
        if (!consume('(')) throw ParseError("expected '(' after exp", pos_);
        auto e = make(Expr::Kind::Exp, at);
        e->lhs = parse_expr();
        if (!consume(')')) throw ParseError("expected ')'", pos_);
        return e;
      }
      throw ParseError("unknown identifier '" + std::string(word) + "'", at);
    }

    if (consume('(')) {
      auto e = parse_expr();
      if (!consume(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    throw ParseError("expected a value", pos_);
  }

  std::unique_ptr<Expr> parse_number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) ++exp_end;
      std::size_t digit_start = exp_end;
      while (exp_end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[exp_end]))) ++exp_end;
      if (exp_end > digit_start) end = exp_end;  // otherwise the 'e' is not an exponent
    }

    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + at, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end)
      throw ParseError("malformed number", at);
    pos_ = end;

    auto e = make(Expr::Kind::Literal, at);
    // A number immediately followed by 'i' is an imaginary literal ("5i").
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() ||
         !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      e->literal = Complex{0.0, value};
    } else {
      e->literal = Complex{value, 0.0};
    }
    return e;
  }
};

void append_signed(std::string& out, const std::string& piece) {
  if (out.empty()) {
    out = piece;
    return;
  }
  if (!piece.empty() && piece.front() == '-') {
    out += " - " + piece.substr(1);
  } else {
    out += " + " + piece;
  }
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// A complex coefficient as a single grammar-level factor.
std::string format_coefficient(Complex c) {
  const double re = c.real();
  const double im = c.imag();
  if (im == 0.0) return format_double(re);
  std::string im_part;
  if (im == 1.0) {
    im_part = "i";
  } else if (im == -1.0) {
    im_part = "-i";
  } else {
    im_part = format_double(im) + "*i";
  }
  if (re == 0.0) return im_part;
  std::string out = format_double(re);
  append_signed(out, im_part);
  return "(" + out + ")";
}

// Monomial count ignoring exact-zero coefficients.
int monomial_count(const Poly& p) {
  int count = 0;
  for (const Complex& c : p.coeffs())
    if (c != Complex{0.0}) ++count;
  return count;
}

std::string format_poly(const Poly& p, bool parenthesize_sums) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree().value_or(0); ++d) {
    const Complex c = p.coeff(d);
    if (c == Complex{0.0}) continue;
    std::string piece;
    if (d == 0) {
      piece = format_coefficient(c);
    } else {
      const std::string zpow = d == 1 ? "z" : "z^" + std::to_string(d);
      if (c == Complex{1.0}) {
        piece = zpow;
      } else if (c == Complex{-1.0}) {
        piece = "-" + zpow;
      } else {
        piece = format_coefficient(c) + "*" + zpow;
      }
    }
    append_signed(out, piece);
  }
  if (parenthesize_sums && monomial_count(p) > 1) return "(" + out + ")";
  return out;
}

}  // namespace

std::unique_ptr<Expr> parse(std::string_view text) { return Parser(text).run(); }

ExpPoly lower(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::Literal:
      return ExpPoly::constant(expr.literal);
    case Expr::Kind::Pi:
      return ExpPoly::constant(Complex{std::numbers::pi});
    case Expr::Kind::Var:
      return ExpPoly::polynomial(Poly::variable());
    case Expr::Kind::Add:
      return lower(*expr.lhs) + lower(*expr.rhs);
    case Expr::Kind::Sub:
      return lower(*expr.lhs) - lower(*expr.rhs);
    case Expr::Kind::Mul:
      return lower(*expr.lhs) * lower(*expr.rhs);
    case Expr::Kind::Div: {
      const ExpPoly divisor = lower(*expr.rhs);
      Complex value;
      if (!divisor.constant_value(&value))
        throw LoweringError("division is only defined by constants", expr.rhs->offset);
      if (approx_zero(value))
        throw LoweringError("division by zero", expr.rhs->offset);
      return (Complex{1.0} / value) * lower(*expr.lhs);
    }
    case Expr::Kind::Pow:
      return lower(*expr.lhs).pow(expr.power);
    case Expr::Kind::Neg:
      return -lower(*expr.lhs);
    case Expr::Kind::Exp: {
      const ExpPoly argument = lower(*expr.lhs);
      if (!argument.is_polynomial())
        throw LoweringError("exp argument must be a polynomial in z", expr.lhs->offset);
      return ExpPoly::exponential(argument.polynomial_part());
    }
  }
  throw LoweringError("unhandled expression node", expr.offset);
}

ExpPoly parse_exp_poly(std::string_view text) { return lower(*parse(text)); }

Complex parse_complex(std::string_view text) {
  const ExpPoly value = parse_exp_poly(text);
  Complex out;
  if (!value.constant_value(&out))
    throw LoweringError("expected a constant expression", 0);
  return out;
}

std::string to_expression(Complex value) { return format_coefficient(value); }

std::string to_expression(const ExpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const ExpTerm& term : f.terms()) {
    std::string piece;
    if (term.exponent.is_zero()) {
      piece = format_poly(term.coeff, /*parenthesize_sums=*/false);
    } else {
      const std::string exp_part = "exp(" + format_poly(term.exponent, false) + ")";
      const bool is_scalar = term.coeff.degree().value_or(-1) == 0;
      const Complex scalar = is_scalar ? term.coeff.constant_term() : Complex{0.0};
      if (is_scalar && scalar == Complex{1.0}) {
        piece = exp_part;
      } else if (is_scalar && scalar == Complex{-1.0}) {
        piece = "-" + exp_part;
      } else {
        piece = format_poly(term.coeff, /*parenthesize_sums=*/true) + "*" + exp_part;
      }
    }
    append_signed(out, piece);
  }
  return out;
}

}  // namespace fdde
