#include <cctype>
#include <cstdint>
#include <string>

#include "tburau/errors.hpp"
#include "tburau/laurent.hpp"

namespace tburau {

namespace {

// Recursive-descent parser for the polynomial expression grammar.
// '^' binds tighter than '*', which binds tighter than '+'/'-'.
class PolyParser {
 public:
  PolyParser(const std::string& text, RegistryPtr registry)
      : text_(text), registry_(std::move(registry)) {}

  LaurentPoly parse() {
    LaurentPoly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
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

  LaurentPoly parse_expr() {
    LaurentPoly p = parse_term();
    while (true) {
      if (eat('+')) {
        p += parse_term();
      } else if (eat('-')) {
        p -= parse_term();
      } else {
        return p;
      }
    }
  }

  LaurentPoly parse_term() {
    LaurentPoly p = parse_factor();
    while (eat('*')) p *= parse_factor();
    return p;
  }

  LaurentPoly parse_factor() {
    if (eat('-')) return -parse_factor();
    if (eat('(')) {
      LaurentPoly p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly(parse_int());
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
    fail(pos_ == text_.size() ? "unexpected end of input" : "unexpected character");
  }

  Int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Int(text_.substr(start, pos_ - start));
  }

  LaurentPoly parse_variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (!registry_) fail("no variables are declared");
    auto idx = registry_->find(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    std::int64_t exponent = 1;
    // Exponent: '^' followed by an optionally signed integer, no parentheses.
    std::size_t save = pos_;
    if (eat('^')) {
      bool negative = false;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = save;
        fail("expected an integer exponent after '^'");
      }
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      exponent = std::stoll(text_.substr(dstart, pos_ - dstart));
      if (negative) exponent = -exponent;
    }
    return LaurentPoly::variable(registry_, *idx, exponent);
  }

  const std::string& text_;
  RegistryPtr registry_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, const RegistryPtr& registry) {
  return PolyParser(text, registry).parse();
}

}  // namespace tburau
