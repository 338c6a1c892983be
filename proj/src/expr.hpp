#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grid.hpp"

namespace condex {
namespace expr {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Single-variable arithmetic expression: literals, x, + - * / ^ (right
/// associative), parentheses, sin, cos, exp, sqrt and pi.
class Expression {
 public:
  static Expression parse(std::string_view source);

  double operator()(double x) const;

  /// Re-parseable rendering; parsing it yields a structurally equal tree.
  std::string to_string() const;

  bool equals(const Expression& other) const;

  /// Adapter for the approximation pipeline.
  RealFn fn() const;

  struct Node;

 private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

  std::shared_ptr<const Node> root_;
};

}  // namespace expr
}  // namespace condex
