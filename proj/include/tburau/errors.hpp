#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tburau {

// Raised by the text parsers (polynomials, braid words); carries the
// byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a representation does not satisfy rho(x_i beta) = rho(x_i)
// for every generator, so the closure group carries no induced representation.
class NonExtendableError : public std::runtime_error {
 public:
  NonExtendableError(const std::string& message, std::vector<int> failing)
      : std::runtime_error(message), failing_generators_(std::move(failing)) {}

  const std::vector<int>& failing_generators() const { return failing_generators_; }

 private:
  std::vector<int> failing_generators_;
};

}  // namespace tburau
