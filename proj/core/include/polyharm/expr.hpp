#pragma once

// Small complex-valued expression language over variables <p>1..<p>n, where
// <p> is the variable prefix ('x' by default, 'z' for boundary data).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ['-'] INTEGER ('^' exponent)?      (folded, right associative)
//   primary := NUMBER | 'i' | VAR | FUNC '(' arg ')' | '(' expr ')'
//
// FUNC is one of exp, sin, cos, sqrt (principal), re, im, abs2, normH.
// abs2(x) = sum x_j^2 (bilinear) and normH(x) = sum |x_j|^2 take the bare
// vector name as argument.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polyharm/complex_geometry.hpp"
#include "polyharm/error.hpp"
#include "polyharm/field.hpp"
#include "polyharm/multipoly.hpp"

namespace polyharm::expr {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, SourcePos pos, std::vector<std::string> expected);
  SourcePos position() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

class EvalError : public Error {
 public:
  EvalError(const std::string& what, SourcePos pos);
  SourcePos position() const { return pos_; }

 private:
  SourcePos pos_;
};

/// Raised by to_poly for expressions outside the polynomial fragment.
class NotPolynomialError : public Error {
 public:
  using Error::Error;
};

enum class NodeKind { Literal, Variable, Vector, Negate, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Exp, Sin, Cos, Sqrt, Re, Im, Abs2, NormH };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind;
  SourcePos pos;
  Complex value{};   // Literal
  int index = 0;     // Variable: 1-based index; Pow: exponent
  Func func{};       // Call
  NodePtr lhs;       // operand / left operand / call argument
  NodePtr rhs;       // right operand of binary nodes
};

/// Immutable parsed expression.
class Expr {
 public:
  Expr(NodePtr root, std::size_t dim, char prefix);

  const Node& root() const { return *root_; }
  std::size_t dim() const { return dim_; }
  char prefix() const { return prefix_; }

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
  std::size_t dim_;
  char prefix_;
};

Expr parse(std::string_view source, std::size_t n, char prefix = 'x');

/// Canonical, fully parenthesized form; parse(print(e)) == e.
std::string print(const Expr& e);

Complex eval(const Expr& e, const ComplexVec& point);

/// Polynomial fragment: literals, variables, + - *, division by nonzero
/// constants, nonnegative powers and abs2.
MultiPoly to_poly(const Expr& e);

/// Source text whose parse evaluates to P (variables named <prefix>j).
std::string poly_to_source(const MultiPoly& P, char prefix = 'x');

FieldFunction to_field(Expr e);

}  // namespace polyharm::expr
