#include "douglas/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "douglas/errors.hpp"

namespace douglas {

namespace {

constexpr int kMaxDepth = 64;

class Parser {
 public:
  Parser(const std::string& src, int n) : src_(src), n_(n) {
    ast_.n = n;
    ast_.source = src;
  }

  ExprAst run() {
    if (src_.empty()) throw ParseError("empty expression", 0);
    ast_.root = parse_expr(0);
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
    return std::move(ast_);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  void check_depth(int depth) {
    if (depth > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
  }

  int add(ExprAst::Node node) {
    ast_.nodes.push_back(node);
    return int(ast_.nodes.size()) - 1;
  }

  int parse_expr(int depth) {
    check_depth(depth);
    int lhs = parse_term(depth + 1);
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      int rhs = parse_term(depth + 1);
      ExprAst::Node node;
      node.kind = (c == '+') ? ExprAst::Kind::Add : ExprAst::Kind::Sub;
      node.lhs = lhs;
      node.rhs = rhs;
      lhs = add(node);
    }
    return lhs;
  }

  int parse_term(int depth) {
    check_depth(depth);
    int lhs = parse_factor(depth + 1);
    while (true) {
      char c = peek();
      if (c != '*' && c != '/') break;
      ++pos_;
      int rhs = parse_factor(depth + 1);
      ExprAst::Node node;
      node.kind = (c == '*') ? ExprAst::Kind::Mul : ExprAst::Kind::Div;
      node.lhs = lhs;
      node.rhs = rhs;
      lhs = add(node);
    }
    return lhs;
  }

  int parse_factor(int depth) {
    check_depth(depth);
    int base = parse_base(depth + 1);
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected a non-negative integer exponent after '^'", pos_);
      long v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + (src_[pos_] - '0');
        if (v > 1000) throw ParseError("integer exponent too large", start);
        ++pos_;
      }
      ExprAst::Node node;
      node.kind = ExprAst::Kind::Pow;
      node.lhs = base;
      node.ipow = int(v);
      base = add(node);
    }
    return base;
  }

  int parse_base(int depth) {
    check_depth(depth);
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = src_[pos_];

    if (c == '-') {
      ++pos_;
      int child = parse_base(depth + 1);
      ExprAst::Node node;
      node.kind = ExprAst::Kind::Neg;
      node.lhs = child;
      return add(node);
    }
    if (c == '(') {
      ++pos_;
      int inner = parse_expr(depth + 1);
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident_or_func(depth);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  int parse_number() {
    const char* begin = src_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) throw ParseError("malformed number", pos_);
    pos_ += std::size_t(end - begin);
    ExprAst::Node node;
    node.kind = ExprAst::Kind::Number;
    node.number = v;
    return add(node);
  }

  int parse_ident_or_func(int depth) {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string word = src_.substr(start, pos_ - start);

    if (word == "x") {
      if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError("expected a variable index after 'x'", pos_);
      long idx = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        idx = idx * 10 + (src_[pos_] - '0');
        if (idx > 255) throw ParseError("variable index out of range", start);
        ++pos_;
      }
      if (idx >= n_) throw ParseError("variable index out of range for dimension", start);
      ExprAst::Node node;
      node.kind = ExprAst::Kind::Var;
      node.var_index = int(idx);
      return add(node);
    }

    ExprAst::FuncKind fk;
    if (word == "sin") fk = ExprAst::FuncKind::Sin;
    else if (word == "cos") fk = ExprAst::FuncKind::Cos;
    else if (word == "exp") fk = ExprAst::FuncKind::Exp;
    else if (word == "abs") fk = ExprAst::FuncKind::Abs;
    else throw ParseError("unknown identifier '" + word + "'", start);

    if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
    int arg = parse_expr(depth + 1);
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    ExprAst::Node node;
    node.kind = ExprAst::Kind::Func;
    node.func = fk;
    node.lhs = arg;
    return add(node);
  }

  const std::string& src_;
  int n_;
  std::size_t pos_ = 0;
  ExprAst ast_;
};

double eval_node(const ExprAst& ast, int idx, const SpherePoint& p) {
  const auto& node = ast.nodes[std::size_t(idx)];
  switch (node.kind) {
    case ExprAst::Kind::Number: return node.number;
    case ExprAst::Kind::Var: return p.coords[std::size_t(node.var_index)];
    case ExprAst::Kind::Neg: return -eval_node(ast, node.lhs, p);
    case ExprAst::Kind::Add: return eval_node(ast, node.lhs, p) + eval_node(ast, node.rhs, p);
    case ExprAst::Kind::Sub: return eval_node(ast, node.lhs, p) - eval_node(ast, node.rhs, p);
    case ExprAst::Kind::Mul: return eval_node(ast, node.lhs, p) * eval_node(ast, node.rhs, p);
    case ExprAst::Kind::Div: return eval_node(ast, node.lhs, p) / eval_node(ast, node.rhs, p);
    case ExprAst::Kind::Pow: {
      double b = eval_node(ast, node.lhs, p);
      double r = 1.0;
      for (int i = 0; i < node.ipow; ++i) r *= b;
      return r;
    }
    case ExprAst::Kind::Func: {
      double a = eval_node(ast, node.lhs, p);
      switch (node.func) {
        case ExprAst::FuncKind::Sin: return std::sin(a);
        case ExprAst::FuncKind::Cos: return std::cos(a);
        case ExprAst::FuncKind::Exp: return std::exp(a);
        case ExprAst::FuncKind::Abs: return std::abs(a);
      }
      return 0.0;
    }
  }
  return 0.0;
}

}  // namespace

ExprAst parse_expression(const std::string& src, int n) {
  if (n < 1) throw std::invalid_argument("parse_expression: need n >= 1");
  return Parser(src, n).run();
}

double eval_expression(const ExprAst& ast, const SpherePoint& point) {
  if (point.dim() != ast.n)
    throw std::invalid_argument("eval_expression: point dimension mismatch");
  double v = eval_node(ast, ast.root, point);
  if (!std::isfinite(v))
    throw EvaluationError("eval_expression: non-finite value (division by zero or overflow)",
                          point.coords, 0);
  return v;
}

BoundaryFunction boundary_from_expression(const std::string& src, int n) {
  auto ast = std::make_shared<ExprAst>(parse_expression(src, n));
  BoundaryFunction u;
  u.n = n;
  u.label = "expr:" + src;
  u.evaluator = [ast](const SpherePoint& p) { return eval_expression(*ast, p); };
  return u;
}

}  // namespace douglas
