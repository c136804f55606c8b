#include "irrcert/parse.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace irrcert {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  // Digits only; whitespace between digits is not allowed.
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError(start, "expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Integer signed_integer(Cursor& cur) {
  bool neg = false;
  if (cur.accept('-')) {
    neg = true;
  } else {
    cur.accept('+');
  }
  Integer v(cur.digits(), 10);
  return neg ? Integer(-v) : v;
}

Polynomial parse_list(std::string_view text) {
  Cursor cur(text);
  std::vector<Integer> coeffs;
  if (cur.done()) throw ParseError(0, "empty polynomial");
  for (;;) {
    coeffs.push_back(signed_integer(cur));
    if (cur.done()) break;
    if (!cur.accept(',')) throw ParseError(cur.pos(), "expected ',' between coefficients");
  }
  return Polynomial(std::move(coeffs));
}

std::size_t exponent(Cursor& cur) {
  const std::size_t at = cur.pos();
  const std::string e = cur.digits();
  if (e.size() > 6) throw ParseError(at, "exponent too large");
  return static_cast<std::size_t>(std::stoul(e));
}

Polynomial parse_expression(std::string_view text) {
  Cursor cur(text);
  std::map<std::size_t, Integer> terms;
  bool first = true;
  while (!cur.done()) {
    bool neg = false;
    if (cur.accept('-')) {
      neg = true;
    } else if (!cur.accept('+') && !first) {
      throw ParseError(cur.pos(), "expected '+' or '-' between terms");
    }
    Integer c = 1;
    std::size_t e = 0;
    bool has_coeff = false;
    if (is_digit(cur.peek())) {
      c = Integer(cur.digits(), 10);
      has_coeff = true;
      if (cur.accept('*')) {
        if (cur.peek() != 'x') throw ParseError(cur.pos(), "expected 'x' after '*'");
      }
    }
    if (cur.accept('x')) {
      e = 1;
      if (cur.accept('^')) e = exponent(cur);
    } else if (!has_coeff) {
      throw ParseError(cur.pos(), "expected a coefficient or 'x'");
    }
    if (neg) c = -c;
    terms[e] += c;
    first = false;
  }
  if (first) throw ParseError(0, "empty polynomial");
  std::vector<Integer> coeffs(terms.rbegin()->first + 1);
  for (auto& [power, c] : terms) coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

}  // namespace

Integer parse_integer(std::string_view text) {
  Cursor cur(text);
  Integer v = signed_integer(cur);
  if (!cur.done()) throw ParseError(cur.pos(), "trailing characters after integer");
  return v;
}

Polynomial parse_polynomial(std::string_view text) {
  if (text.find('x') != std::string_view::npos) return parse_expression(text);
  return parse_list(text);
}

}  // namespace irrcert
