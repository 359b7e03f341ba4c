#include "polyharm/expr.hpp"

#include <gtest/gtest.h>

#include <random>

#include "polyharm/manufactured.hpp"

using namespace polyharm;
using namespace polyharm::expr;

namespace {

NodePtr lit(Complex v) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Literal;
  n->value = v;
  return n;
}

NodePtr var(int j) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Variable;
  n->index = j;
  return n;
}

NodePtr bin(NodeKind kind, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr pow_node(NodePtr a, int e) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Pow;
  n->lhs = std::move(a);
  n->index = e;
  return n;
}

NodePtr neg(NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::Negate;
  n->lhs = std::move(a);
  return n;
}

SourcePos parse_error_pos(const std::string& src, std::size_t n = 2) {
  try {
    parse(src, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << src << "'";
  return {};
}

// Random polynomial expression text together with its MultiPoly.
std::pair<std::string, MultiPoly> random_poly_expr(std::size_t n, int depth, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  switch (pick(gen)) {
    case 0: {
      const double c = std::round(coef(gen) * 100.0) / 100.0;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", std::abs(c));
      const MultiPoly P = MultiPoly::constant(n, std::abs(c));
      return {buf, P};
    }
    case 1: {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(gen);
      return {"x" + std::to_string(j + 1), MultiPoly::variable(n, j)};
    }
    case 2: {
      auto [a, A] = random_poly_expr(n, depth - 1, gen);
      auto [b, B] = random_poly_expr(n, depth - 1, gen);
      return {"(" + a + " + " + b + ")", A + B};
    }
    case 3: {
      auto [a, A] = random_poly_expr(n, depth - 1, gen);
      auto [b, B] = random_poly_expr(n, depth - 1, gen);
      return {"((" + a + ")*(" + b + ") - i*(" + b + "))", A * B - Complex{0.0, 1.0} * B};
    }
    case 4: {
      auto [a, A] = random_poly_expr(n, depth - 1, gen);
      return {"((" + a + ")^2 / 4)", A.pow(2) * Complex(0.25)};
    }
    default: {
      auto [a, A] = random_poly_expr(n, depth - 1, gen);
      return {"(-abs2(x)*(" + a + "))", -1.0 * (MultiPoly::abs2(n) * A)};
    }
  }
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(parse("x1^2 - x2^2", 2),
            Expr(bin(NodeKind::Sub, pow_node(var(1), 2), pow_node(var(2), 2)), 2, 'x'));
  EXPECT_EQ(parse("i*x1", 2), Expr(bin(NodeKind::Mul, lit({0.0, 1.0}), var(1)), 2, 'x'));
  EXPECT_THROW(parse("x1 +", 2), ParseError);
  const SourcePos p = parse_error_pos("x1 +");
  EXPECT_EQ(p.line, 1);
  EXPECT_EQ(p.column, 5);
}

TEST(Parse, Precedence) {
  // -x1^2 is -(x1^2); 2^3^2 folds to 2^9; a - b - c is (a - b) - c
  EXPECT_EQ(parse("-x1^2", 1), Expr(neg(pow_node(var(1), 2)), 1, 'x'));
  EXPECT_EQ(parse("x1^2^3", 1), Expr(pow_node(var(1), 8), 1, 'x'));
  EXPECT_EQ(parse("x1 - x2 - 1", 2),
            Expr(bin(NodeKind::Sub, bin(NodeKind::Sub, var(1), var(2)), lit(1.0)), 2, 'x'));
  EXPECT_EQ(parse("1 + x1*x2", 2),
            Expr(bin(NodeKind::Add, lit(1.0), bin(NodeKind::Mul, var(1), var(2))), 2, 'x'));
  EXPECT_EQ(parse(" ( x1 )\n*\tx2 ", 2), parse("x1*x2", 2));
  EXPECT_EQ(parse("x1^-2", 1), Expr(pow_node(var(1), -2), 1, 'x'));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("foo(x1)", 2), ParseError);
  EXPECT_THROW(parse("x3", 2), ParseError);
  EXPECT_THROW(parse("x0", 2), ParseError);
  EXPECT_THROW(parse("x1^x2", 2), ParseError);
  EXPECT_THROW(parse("x1^1.5", 2), ParseError);
  EXPECT_THROW(parse("x + 1", 2), ParseError);
  EXPECT_THROW(parse("(x1", 2), ParseError);
  EXPECT_THROW(parse("", 2), ParseError);
  EXPECT_THROW(parse("z1", 2), ParseError);
  EXPECT_NO_THROW(parse("z1", 2, 'z'));
}

TEST(Parse, ErrorPositionsAreExact) {
  EXPECT_EQ(parse_error_pos("x1 + x3").column, 6);
  EXPECT_EQ(parse_error_pos("x1 * $").column, 6);
  EXPECT_EQ(parse_error_pos("1 + foo").column, 5);
  const SourcePos multi = parse_error_pos("x1 +\n  x2 )");
  EXPECT_EQ(multi.line, 2);
  EXPECT_EQ(multi.column, 6);
  try {
    parse("x1 +", 2);
  } catch (const ParseError& e) {
    EXPECT_FALSE(e.expected().empty());
    EXPECT_NE(std::string(e.what()).find("1:5"), std::string::npos);
  }
}

TEST(Eval, Examples) {
  EXPECT_LE(std::abs(eval(parse("x1^2 - x2^2", 2), ComplexVec{0.6, 0.8}) - (-0.28)), 1e-15);
  EXPECT_LE(std::abs(eval(parse("i*x1", 2), ComplexVec{1.0, 0.0}) - Complex{0.0, 1.0}), 1e-15);
  EXPECT_LE(std::abs(eval(parse("1 + abs2(x)*x1", 2), ComplexVec{0.5, 0.0}) - 1.125), 1e-15);
}

TEST(Eval, Functions) {
  const ComplexVec z{Complex{0.3, 0.4}, Complex{-1.0, 0.5}};
  EXPECT_LE(std::abs(eval(parse("exp(x1)", 2), z) - std::exp(z[0])), 1e-15);
  EXPECT_LE(std::abs(eval(parse("sin(x2) + cos(x1)", 2), z) - (std::sin(z[1]) + std::cos(z[0]))), 1e-14);
  EXPECT_LE(std::abs(eval(parse("sqrt(-4)", 2), z) - Complex{0.0, 2.0}), 1e-15);
  EXPECT_LE(std::abs(eval(parse("sqrt(x2)", 2), z) - csqrt_principal(z[1])), 1e-15);
  EXPECT_EQ(eval(parse("re(x1) + i*im(x2)", 2), z), Complex(0.3, 0.5));
  EXPECT_LE(std::abs(eval(parse("abs2(x)", 2), z) - (z[0] * z[0] + z[1] * z[1])), 1e-15);
  EXPECT_LE(std::abs(eval(parse("normH(x)", 2), z) - (std::norm(z[0]) + std::norm(z[1]))), 1e-15);
  EXPECT_LE(std::abs(eval(parse("x1^-2", 2), z) - 1.0 / (z[0] * z[0])), 1e-14);
}

TEST(Eval, DivisionByZeroNamesSubexpression) {
  const auto e = parse("x1 / (x2 - 1)", 2);
  try {
    eval(e, ComplexVec{1.0, 1.0});
    FAIL() << "expected EvalError";
  } catch (const EvalError& err) {
    EXPECT_EQ(err.position().line, 1);
    EXPECT_EQ(err.position().column, 6);
  }
  EXPECT_THROW(eval(parse("x1^-1", 2), ComplexVec{0.0, 1.0}), EvalError);
  EXPECT_THROW(eval(e, ComplexVec{1.0, 1.0, 0.0}), DimensionError);
}

TEST(Print, RoundTripIsIdentity) {
  const char* sources[] = {"x1^2 - x2^2", "i*x1", "1 + abs2(x)*x1", "-x1^-3 / (2.5e-3 + i)",
                           "exp(sin(x1)) * sqrt(re(x2)) - normH(x)", "((x1))", "0.1 + 0.2",
                           "-(-x2)^2^2"};
  for (const char* s : sources) {
    const auto e = parse(s, 2);
    const auto printed = print(e);
    EXPECT_EQ(parse(printed, 2), e) << s << " -> " << printed;
    EXPECT_EQ(print(parse(printed, 2)), printed);
  }
  EXPECT_EQ(print(parse("x1^2 - x2^2", 2)), "((x1^2) - (x2^2))");
}

TEST(ToPoly, MatchesManufacturedSolution) {
  const MultiPoly expected = MultiPoly::constant(2, 1.0) + MultiPoly::abs2(2) * MultiPoly::variable(2, 0);
  EXPECT_EQ(to_poly(parse("1 + abs2(x)*x1", 2)).chopped(0.0), expected);
  EXPECT_THROW(to_poly(parse("exp(x1)", 2)), NotPolynomialError);
  EXPECT_THROW(to_poly(parse("1 / x1", 2)), NotPolynomialError);
  EXPECT_THROW(to_poly(parse("x1^-1", 2)), NotPolynomialError);
}

TEST(ToPoly, SourceRoundTrip) {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 20; ++t) {
    const MultiPoly P = random_harmonic(3, 4, gen);
    const MultiPoly Q = to_poly(parse(poly_to_source(P), 3));
    EXPECT_LE(max_coefficient_difference(P, Q), 1e-15);
  }
  EXPECT_EQ(poly_to_source(MultiPoly(2)), "0");
}

TEST(Eval, AgreesWithPolyEval) {
  std::mt19937_64 gen(32);
  std::normal_distribution<double> g;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    auto [src, P] = random_poly_expr(n, 4, gen);
    const auto e = parse(src, n);
    std::vector<Complex> pt(n);
    for (auto& v : pt) v = {g(gen), g(gen)};
    const ComplexVec z(pt);
    const Complex a = eval(e, z);
    const Complex b = poly_eval(P, z);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b))) << src;
    EXPECT_LE(max_coefficient_difference(to_poly(e), P), 1e-12 * std::max(1.0, P.max_abs_coefficient()));
  }
}

TEST(ToField, EvaluatesLikeEval) {
  const auto e = parse("z1*z2 + i", 2, 'z');
  const auto F = to_field(e);
  const ComplexVec z{0.5, -2.0};
  EXPECT_EQ(F(z), eval(e, z));
  EXPECT_EQ(print(e), "((z1 * z2) + i)");
}
