#include "jacring/parser.hpp"

#include <cctype>
#include <string>

#include "jacring/errors.hpp"

namespace jacring {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract, std::size_t at) {
    try {
      return subtract ? sub(ring_, a, b) : add(ring_, a, b);
    } catch (const NonHomogeneousError&) {
      throw NonHomogeneousError("non-homogeneous expression at position " + std::to_string(at));
    }
  }

  Polynomial expr() {
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negative) acc = negate(ring_, acc);
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        acc = combine(acc, term(), false, at);
      } else if (accept('-')) {
        acc = combine(acc, term(), true, at);
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = mul(ring_, acc, factor());
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (e > 0xFFFF) throw ParseError("exponent too large", at);
      base = pow(ring_, base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const mpz_class num = integer();
      mpz_class den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", start);
      }
      try {
        return Polynomial::constant(ring_, ring_.field().from_fraction(num, den));
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_.variable_index(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingContext& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring, bool allow_zero) {
  Polynomial p = Parser(text, ring).parse();
  if (p.is_zero() && !allow_zero) {
    throw PreconditionError("'" + std::string(text) +
                            "' is the zero polynomial, which is not a valid generator");
  }
  return p;
}

}  // namespace jacring
