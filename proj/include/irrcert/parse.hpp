#pragma once

#include "irrcert/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irrcert {

/// Parse failure with the 0-based character offset of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Accepts either an ascending coefficient list ("7,5,-16") or an
/// expression in x ("4*x^10 - 16*x^2 + 5*x + 7"). Whitespace is ignored and
/// repeated powers are summed.
Polynomial parse_polynomial(std::string_view text);

/// Decimal integer with optional sign; throws ParseError.
Integer parse_integer(std::string_view text);

}  // namespace irrcert
