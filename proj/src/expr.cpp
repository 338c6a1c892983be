#include "expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

namespace condex {
namespace expr {

struct Expression::Node {
  enum class Kind { number, variable, negate, add, sub, mul, div, pow, call };
  enum class Call { sin, cos, exp, sqrt };

  Kind kind = Kind::number;
  double value = 0.0;
  Call call = Call::sin;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr leaf_number(double v) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::number;
  node->value = v;
  return node;
}

NodePtr leaf_variable() {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::variable;
  return node;
}

NodePtr unary(Node::Kind kind, NodePtr child) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(child);
  return node;
}

NodePtr binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

NodePtr call(Node::Call fn, NodePtr arg) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::call;
  node->call = fn;
  node->lhs = std::move(arg);
  return node;
}

const char* call_name(Node::Call fn) {
  switch (fn) {
    case Node::Call::sin: return "sin";
    case Node::Call::cos: return "cos";
    case Node::Call::exp: return "exp";
    case Node::Call::sqrt: return "sqrt";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr run() {
    NodePtr root = expression();
    skip_space();
    if (pos_ != src_.size()) {
      fail("unexpected trailing input");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr expression() {
    NodePtr node = term();
    while (true) {
      if (eat('+')) {
        node = binary(Node::Kind::add, node, term());
      } else if (eat('-')) {
        node = binary(Node::Kind::sub, node, term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    NodePtr node = factor();
    while (true) {
      if (eat('*')) {
        node = binary(Node::Kind::mul, node, factor());
      } else if (eat('/')) {
        node = binary(Node::Kind::div, node, factor());
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    if (eat('-')) {
      return unary(Node::Kind::negate, factor());
    }
    if (eat('+')) {
      return factor();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (eat('^')) {
      // right associative; the exponent may carry its own sign
      return binary(Node::Kind::pow, base, factor());
    }
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= src_.size()) {
      fail("unexpected end of input");
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return identifier();
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = expression();
      if (!eat(')')) {
        fail("expected ')'");
      }
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  NodePtr number() {
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double value = 0.0;
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{}) {
      fail("malformed number");
    }
    pos_ = static_cast<std::size_t>(result.ptr - src_.data());
    return leaf_number(value);
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") {
      return leaf_variable();
    }
    if (name == "pi") {
      return leaf_number(std::numbers::pi);
    }
    Node::Call fn;
    if (name == "sin") {
      fn = Node::Call::sin;
    } else if (name == "cos") {
      fn = Node::Call::cos;
    } else if (name == "exp") {
      fn = Node::Call::exp;
    } else if (name == "sqrt") {
      fn = Node::Call::sqrt;
    } else {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    if (!eat('(')) {
      fail("expected '(' after function name");
    }
    NodePtr arg = expression();
    if (!eat(')')) {
      fail("expected ')'");
    }
    return call(fn, std::move(arg));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

double eval_node(const Node& node, double x) {
  switch (node.kind) {
    case Node::Kind::number: return node.value;
    case Node::Kind::variable: return x;
    case Node::Kind::negate: return -eval_node(*node.lhs, x);
    case Node::Kind::add: return eval_node(*node.lhs, x) + eval_node(*node.rhs, x);
    case Node::Kind::sub: return eval_node(*node.lhs, x) - eval_node(*node.rhs, x);
    case Node::Kind::mul: return eval_node(*node.lhs, x) * eval_node(*node.rhs, x);
    case Node::Kind::div: return eval_node(*node.lhs, x) / eval_node(*node.rhs, x);
    case Node::Kind::pow: return std::pow(eval_node(*node.lhs, x), eval_node(*node.rhs, x));
    case Node::Kind::call:
      switch (node.call) {
        case Node::Call::sin: return std::sin(eval_node(*node.lhs, x));
        case Node::Call::cos: return std::cos(eval_node(*node.lhs, x));
        case Node::Call::exp: return std::exp(eval_node(*node.lhs, x));
        case Node::Call::sqrt: return std::sqrt(eval_node(*node.lhs, x));
      }
  }
  return 0.0;
}

int precedence(Node::Kind kind) {
  switch (kind) {
    case Node::Kind::add:
    case Node::Kind::sub: return 1;
    case Node::Kind::mul:
    case Node::Kind::div: return 2;
    case Node::Kind::negate: return 3;
    case Node::Kind::pow: return 4;
    default: return 5;
  }
}

void render(const Node& node, std::string& out) {
  const auto child = [&](const Node& c, bool needs_parens) {
    if (needs_parens) {
      out += '(';
      render(c, out);
      out += ')';
    } else {
      render(c, out);
    }
  };
  const int prec = precedence(node.kind);
  switch (node.kind) {
    case Node::Kind::number: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", node.value);
      out += buf;
      return;
    }
    case Node::Kind::variable:
      out += 'x';
      return;
    case Node::Kind::negate:
      out += '-';
      child(*node.lhs, precedence(node.lhs->kind) < prec);
      return;
    case Node::Kind::add:
    case Node::Kind::sub:
    case Node::Kind::mul:
    case Node::Kind::div: {
      child(*node.lhs, precedence(node.lhs->kind) < prec);
      switch (node.kind) {
        case Node::Kind::add: out += " + "; break;
        case Node::Kind::sub: out += " - "; break;
        case Node::Kind::mul: out += "*"; break;
        default: out += "/"; break;
      }
      child(*node.rhs, precedence(node.rhs->kind) <= prec);
      return;
    }
    case Node::Kind::pow:
      child(*node.lhs, precedence(node.lhs->kind) <= prec);
      out += '^';
      child(*node.rhs, precedence(node.rhs->kind) < prec);
      return;
    case Node::Kind::call:
      out += call_name(node.call);
      out += '(';
      render(*node.lhs, out);
      out += ')';
      return;
  }
}

bool nodes_equal(const Node& a, const Node& b) {
  if (a.kind != b.kind) {
    return false;
  }
  switch (a.kind) {
    case Node::Kind::number: return a.value == b.value;
    case Node::Kind::variable: return true;
    case Node::Kind::negate: return nodes_equal(*a.lhs, *b.lhs);
    case Node::Kind::call: return a.call == b.call && nodes_equal(*a.lhs, *b.lhs);
    default: return nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
  }
}

}  // namespace

Expression Expression::parse(std::string_view source) {
  std::size_t first = 0;
  while (first < source.size() && std::isspace(static_cast<unsigned char>(source[first]))) {
    ++first;
  }
  if (first == source.size()) {
    throw ParseError("empty expression", 0);
  }
  return Expression(Parser(source).run());
}

double Expression::operator()(double x) const { return eval_node(*root_, x); }

std::string Expression::to_string() const {
  std::string out;
  render(*root_, out);
  return out;
}

bool Expression::equals(const Expression& other) const { return nodes_equal(*root_, *other.root_); }

RealFn Expression::fn() const {
  return [root = root_](double x) { return eval_node(*root, x); };
}

}  // namespace expr
}  // namespace condex
