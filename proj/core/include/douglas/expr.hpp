#pragma once

#include <string>
#include <vector>

#include "douglas/harmonics.hpp"
#include "douglas/quadrature.hpp"

namespace douglas {

// AST for boundary-function expressions over the sphere variables x0..x{n-1}.
//
// Grammar (whitespace insensitive, left associative, standard precedence):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' uint)?
//   base   := number | ident | '(' expr ')' | func '(' expr ')' | '-' base
//   ident  := 'x' uint        (index < n)
//   func   := sin | cos | exp | abs
struct ExprAst {
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Func };
  enum class FuncKind { Sin, Cos, Exp, Abs };

  struct Node {
    Kind kind;
    double number = 0.0;
    int var_index = 0;
    int ipow = 0;
    FuncKind func = FuncKind::Sin;
    int lhs = -1;
    int rhs = -1;
  };

  int n = 0;  // variable count
  std::vector<Node> nodes;
  int root = -1;
  std::string source;
};

// Throws ParseError with a byte offset on any rejection; never crashes.
ExprAst parse_expression(const std::string& src, int n);

// Standard real evaluation; throws EvaluationError (carrying the point) on
// division by zero or overflow to a non-finite value.
double eval_expression(const ExprAst& ast, const SpherePoint& point);

BoundaryFunction boundary_from_expression(const std::string& src, int n);

}  // namespace douglas
