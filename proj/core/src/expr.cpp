#include "sl21/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace sl21 {

namespace {

using C = std::complex<double>;

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Tag { Number, Variable, Unary, Binary, Call } tag;
  C number{};
  int var = -1;
  char op = 0;                // + - * / ^
  std::string fn;             // call name
  NodePtr lhs, rhs;
  std::vector<NodePtr> args;
};

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at offset " + std::to_string(pos_) + ": " + what);
  }

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

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      if (consume('+')) lhs = binary('+', lhs, term());
      else if (consume('-')) lhs = binary('-', lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      skip_ws();
      if (consume('*')) lhs = binary('*', lhs, factor());
      else if (consume('/')) lhs = binary('/', lhs, factor());
      else return lhs;
    }
  }

  NodePtr factor() {  // right-associative power
    NodePtr base = unary();
    skip_ws();
    if (consume('^')) return binary('^', base, factor());
    return base;
  }

  NodePtr unary() {
    skip_ws();
    if (consume('-')) {
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::Unary;
      n->op = '-';
      n->lhs = unary();
      return n;
    }
    if (consume('+')) return unary();
    return primary();
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr number() {
    std::size_t used = 0;
    double val = 0;
    try {
      val = std::stod(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("bad number");
    }
    pos_ += used;
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Number;
    n->number = C(val);
    return n;
  }

  NodePtr identifier() {
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
      ++end;
    const std::string name = text_.substr(pos_, end - pos_);
    pos_ = end;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::Call;
      n->fn = name;
      if (!consume(')')) {
        for (;;) {
          n->args.push_back(expression());
          if (consume(')')) break;
          if (!consume(',')) fail("expected ',' or ')'");
        }
      }
      const std::size_t want = (name == "pow") ? 2 : 1;
      if (n->args.size() != want) fail("function '" + name + "' arity");
      return n;
    }
    if (name == "i") {
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::Number;
      n->number = C(0, 1);
      return n;
    }
    if (name == "pi") {
      auto n = std::make_shared<Node>();
      n->tag = Node::Tag::Number;
      n->number = C(std::numbers::pi);
      return n;
    }
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (vars_[k] == name) {
        auto n = std::make_shared<Node>();
        n->tag = Node::Tag::Variable;
        n->var = static_cast<int>(k);
        return n;
      }
    }
    fail("unknown identifier '" + name + "'");
  }

  NodePtr binary(char op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<Node>();
    n->tag = Node::Tag::Binary;
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

bool is_constant(const CJet& j) {
  for (int pos = 1; pos < j.table_size(); ++pos)
    if (j.coeff(pos) != C(0)) return false;
  return true;
}

CJet eval_node(const Node& n, std::span<const CJet> vars) {
  switch (n.tag) {
    case Node::Tag::Number:
      return vars[0].constant_like(n.number);
    case Node::Tag::Variable:
      return vars[static_cast<std::size_t>(n.var)];
    case Node::Tag::Unary:
      return -eval_node(*n.lhs, vars);
    case Node::Tag::Binary: {
      const CJet a = eval_node(*n.lhs, vars);
      const CJet b = eval_node(*n.rhs, vars);
      switch (n.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        case '^':
          if (is_constant(b)) return pow(a, b.value());
          return exp(b * log(a));
      }
      throw std::logic_error("bad operator");
    }
    case Node::Tag::Call: {
      const CJet a = eval_node(*n.args[0], vars);
      if (n.fn == "exp") return exp(a);
      if (n.fn == "log") return log(a);
      if (n.fn == "sin") return sin(a);
      if (n.fn == "cos") return cos(a);
      if (n.fn == "sqrt") return sqrt(a);
      if (n.fn == "re") return real_part(a);
      if (n.fn == "im") return imag_part(a);
      if (n.fn == "conj") return real_part(a) - C(0, 1) * imag_part(a);
      if (n.fn == "pow") {
        const CJet b = eval_node(*n.args[1], vars);
        if (is_constant(b)) return pow(a, b.value());
        return exp(b * log(a));
      }
      throw std::invalid_argument("unknown function '" + n.fn + "'");
    }
  }
  throw std::logic_error("bad node");
}

}  // namespace

SmoothMap parse_expression(const std::string& text, const std::vector<std::string>& variables) {
  Parser parser(text, variables);
  NodePtr root = parser.parse();
  const std::size_t arity = variables.size();
  return [root, arity](std::span<const CJet> vars) -> CJet {
    if (vars.size() != arity) throw std::invalid_argument("expression: arity mismatch");
    return eval_node(*root, vars);
  };
}

}  // namespace sl21
