#include "vaisman/parser.hpp"

#include <cctype>
#include <limits>

namespace vaisman {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

class Parser {
 public:
  Parser(std::string_view src, DoubledSpace space) : src_(src), space_(space) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Poly p = expression();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_primary() {
    skip_ws();
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  // expression := term (('+' | '-') term)*
  Poly expression() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // term := unary (('*' | '/' | juxtaposition) unary)*
  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        const Poly divisor = unary();
        if (!divisor.is_constant()) throw ParseError("division by a non-constant expression", at);
        const Rational c = divisor.constant_term();
        if (sgn(c) == 0) throw ParseError("division by zero", at);
        acc *= Rational(1) / c;
      } else if (starts_primary()) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  // unary := ('-' | '+') unary | power
  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  // power := primary ('^' uint)*
  Poly power() {
    Poly base = primary();
    while (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      const std::uint64_t e = exponent(at);
      if (e > kMaxExponent) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  // A bare unsigned literal, or a parenthesized constant expression that
  // evaluates to a non-negative integer.
  std::uint64_t exponent(std::size_t at) {
    if (peek() == '-') throw ParseError("negative exponent", at);
    if (peek() == '(') {
      const Poly value = primary();
      const Rational c = value.constant_term();
      if (!value.is_constant()) throw ParseError("exponent must be a constant", at);
      if (sgn(c) < 0) throw ParseError("negative exponent", at);
      if (c.get_den() != 1) throw ParseError("non-integer exponent", at);
      if (c > Rational(kMaxExponent)) throw ParseError("exponent too large", at);
      return c.get_num().get_ui();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("exponent must be a non-negative integer", at);
    }
    const std::uint64_t e = integer_literal();
    if (peek() == '.') throw ParseError("non-integer exponent", at);
    return e;
  }

  Poly primary() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '.') throw ParseError("decimal literals are not supported; use p/q", pos_);
      return Poly::constant(space_, Rational(std::string(src_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      return variable(src_.substr(start, pos_ - start), start);
    }
    if (at_end()) throw ParseError("unexpected end of expression", at);
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  Poly variable(std::string_view name, std::size_t at) {
    Sector sector = Sector::plain;
    std::string_view digits;
    if (name.starts_with("xt")) {
      sector = Sector::tilde;
      digits = name.substr(2);
    } else if (name.starts_with("x")) {
      digits = name.substr(1);
    }
    const bool numeric =
        !digits.empty() && digits[0] != '0' &&
        digits.find_first_not_of("0123456789") == std::string_view::npos && digits.size() < 9;
    if (!numeric) throw ParseError("unknown coordinate '" + std::string(name) + "'", at);
    const std::size_t index = std::stoul(std::string(digits));
    if (index > space_.dim()) {
      throw ParseError("unknown coordinate '" + std::string(name) + "' (dimension is " +
                           std::to_string(space_.dim()) + ")",
                       at);
    }
    return Poly::coordinate(space_, sector, index);
  }

  std::uint64_t integer_literal() {
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("integer literal overflow", pos_);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::string_view src_;
  DoubledSpace space_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view src, DoubledSpace space) { return Parser(src, space).parse(); }

}  // namespace vaisman
