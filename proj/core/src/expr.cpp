#include "polyharm/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace polyharm::expr {

namespace {

std::string describe(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) s += ", ";
    s += items[i];
  }
  return s;
}

}  // namespace

ParseError::ParseError(const std::string& what, SourcePos pos, std::vector<std::string> expected)
    : Error("syntax error at " + describe(pos) + ": " + what +
            (expected.empty() ? std::string() : "; expected one of: " + join(expected))),
      pos_(pos),
      expected_(std::move(expected)) {}

EvalError::EvalError(const std::string& what, SourcePos pos)
    : Error(what + " at " + describe(pos)), pos_(pos) {}

Expr::Expr(NodePtr root, std::size_t dim, char prefix)
    : root_(std::move(root)), dim_(dim), prefix_(prefix) {
  if (!root_) throw Error("Expr: empty tree");
}

namespace {

bool same_tree(const Node* a, const Node* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::Literal:
      return a->value == b->value;
    case NodeKind::Variable:
      return a->index == b->index;
    case NodeKind::Vector:
      return true;
    case NodeKind::Pow:
      return a->index == b->index && same_tree(a->lhs.get(), b->lhs.get());
    case NodeKind::Call:
      return a->func == b->func && same_tree(a->lhs.get(), b->lhs.get());
    default:
      return same_tree(a->lhs.get(), b->lhs.get()) && same_tree(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return a.dim_ == b.dim_ && a.prefix_ == b.prefix_ && same_tree(a.root_.get(), b.root_.get());
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '.') {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
          while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
          j = k;
        }
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    Tok kind = Tok::Invalid;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: break;
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

struct FuncName {
  const char* name;
  Func func;
};
constexpr FuncName kFuncs[] = {
    {"exp", Func::Exp}, {"sin", Func::Sin}, {"cos", Func::Cos},   {"sqrt", Func::Sqrt},
    {"re", Func::Re},   {"im", Func::Im},   {"abs2", Func::Abs2}, {"normH", Func::NormH},
};

const char* func_name(Func f) {
  for (const auto& fn : kFuncs) {
    if (fn.func == f) return fn.name;
  }
  return "?";
}

std::optional<Func> lookup_func(const std::string& name) {
  for (const auto& fn : kFuncs) {
    if (name == fn.name) return fn.func;
  }
  return std::nullopt;
}

bool takes_vector(Func f) { return f == Func::Abs2 || f == Func::NormH; }

const std::vector<std::string> kOperandStart = {"number", "i", "variable", "function", "(",
                                                "-"};

class Parser {
 public:
  Parser(std::string_view src, std::size_t n, char prefix)
      : tokens_(lex(src)), n_(n), prefix_(prefix) {}

  NodePtr parse_all() {
    NodePtr e = expression();
    if (peek().kind != Tok::End) {
      fail_unexpected({"+", "-", "*", "/", "^", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail_unexpected(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string what =
        t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'";
    throw ParseError(what, t.pos, std::move(expected));
  }

  static NodePtr make(NodeKind kind, SourcePos pos, NodePtr lhs = nullptr,
                      NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->pos = pos;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  NodePtr expression() {
    NodePtr left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = take();
      NodePtr right = term();
      left = make(op.kind == Tok::Plus ? NodeKind::Add : NodeKind::Sub, left->pos, left, right);
    }
    return left;
  }

  NodePtr term() {
    NodePtr left = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      NodePtr right = unary();
      left = make(op.kind == Tok::Star ? NodeKind::Mul : NodeKind::Div, left->pos, left, right);
    }
    return left;
  }

  NodePtr unary() {
    if (peek().kind == Tok::Minus) {
      const Token& op = take();
      return make(NodeKind::Negate, op.pos, unary());
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (peek().kind == Tok::Caret) {
      take();
      auto node = std::make_shared<Node>();
      node->kind = NodeKind::Pow;
      node->pos = base->pos;
      node->lhs = base;
      node->index = exponent();
      return node;
    }
    return base;
  }

  int exponent() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    const Token& t = peek();
    if (t.kind != Tok::Number) fail_unexpected({"integer exponent"});
    long value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value > 4096) {
      throw ParseError("exponent '" + t.text + "' is not a small integer literal", t.pos,
                       {"integer exponent"});
    }
    take();
    long e = negative ? -value : value;
    if (peek().kind == Tok::Caret) {
      const Token& op = take();
      const int upper = exponent();
      if (upper < 0) {
        throw ParseError("exponent tower does not fold to an integer", op.pos,
                         {"integer exponent"});
      }
      long folded = 1;
      for (int k = 0; k < upper; ++k) {
        folded *= e;
        if (std::abs(folded) > 4096) {
          throw ParseError("folded exponent too large", op.pos, {"integer exponent"});
        }
      }
      e = folded;
    }
    return static_cast<int>(e);
  }

  NodePtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        take();
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v)) {
          throw ParseError("malformed number '" + t.text + "'", t.pos, {"number"});
        }
        auto n = std::make_shared<Node>();
        n->kind = NodeKind::Literal;
        n->pos = t.pos;
        n->value = v;
        return n;
      }
      case Tok::LParen: {
        const SourcePos open = take().pos;
        NodePtr inner = expression();
        if (peek().kind != Tok::RParen) fail_unexpected({")", "+", "-", "*", "/", "^"});
        take();
        auto moved = std::make_shared<Node>(*inner);
        moved->pos = open;
        return moved;
      }
      case Tok::Ident:
        return identifier();
      default:
        fail_unexpected(kOperandStart);
    }
  }

  std::optional<int> variable_index(const std::string& name) const {
    if (name.size() < 2 || name[0] != prefix_) return std::nullopt;
    for (std::size_t k = 1; k < name.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
    }
    int idx = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
    if (ec != std::errc()) return -1;
    return idx;
  }

  NodePtr identifier() {
    const Token t = take();
    if (t.text == "i") {
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::Literal;
      n->pos = t.pos;
      n->value = Complex{0.0, 1.0};
      return n;
    }
    if (auto idx = variable_index(t.text)) {
      if (*idx < 1 || static_cast<std::size_t>(*idx) > n_) {
        throw ParseError("variable '" + t.text + "' out of range (dimension " +
                             std::to_string(n_) + ")",
                         t.pos, {prefix_ + std::string("1..") + prefix_ + std::to_string(n_)});
      }
      auto n = std::make_shared<Node>();
      n->kind = NodeKind::Variable;
      n->pos = t.pos;
      n->index = *idx;
      return n;
    }
    if (t.text == std::string(1, prefix_)) {
      throw ParseError("vector '" + t.text + "' is only allowed as argument of abs2/normH",
                       t.pos, kOperandStart);
    }
    const auto func = lookup_func(t.text);
    if (!func) {
      throw ParseError("unknown identifier '" + t.text + "'", t.pos,
                       {"i", prefix_ + std::string("<j>"), "function"});
    }
    if (peek().kind != Tok::LParen) fail_unexpected({"("});
    take();
    NodePtr arg;
    if (takes_vector(*func)) {
      const Token& a = peek();
      if (a.kind != Tok::Ident || a.text != std::string(1, prefix_)) {
        fail_unexpected({std::string(1, prefix_)});
      }
      take();
      arg = make(NodeKind::Vector, a.pos);
    } else {
      arg = expression();
    }
    if (peek().kind != Tok::RParen) fail_unexpected({")"});
    take();
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Call;
    n->pos = t.pos;
    n->func = *func;
    n->lhs = arg;
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t n_;
  char prefix_;
};

}  // namespace

Expr parse(std::string_view source, std::size_t n, char prefix) {
  if (n == 0) throw DimensionError("expr::parse: dimension must be >= 1");
  if (!std::isalpha(static_cast<unsigned char>(prefix)) || prefix == 'i') {
    throw Error("expr::parse: invalid variable prefix");
  }
  Parser parser(source, n, prefix);
  return Expr(parser.parse_all(), n, prefix);
}

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_literal(Complex v) {
  if (v == Complex{0.0, 1.0}) return "i";
  if (v.imag() == 0.0 && v.real() >= 0.0 && !std::signbit(v.real())) {
    return format_double(v.real());
  }
  return "(" + format_double(v.real()) + " + " + format_double(v.imag()) + "*i)";
}

void print_node(const Node& node, char prefix, std::string& out) {
  switch (node.kind) {
    case NodeKind::Literal:
      out += format_literal(node.value);
      return;
    case NodeKind::Variable:
      out += prefix;
      out += std::to_string(node.index);
      return;
    case NodeKind::Vector:
      out += prefix;
      return;
    case NodeKind::Negate:
      out += "(-";
      print_node(*node.lhs, prefix, out);
      out += ")";
      return;
    case NodeKind::Pow:
      out += "(";
      print_node(*node.lhs, prefix, out);
      out += "^" + std::to_string(node.index) + ")";
      return;
    case NodeKind::Call:
      out += func_name(node.func);
      out += "(";
      print_node(*node.lhs, prefix, out);
      out += ")";
      return;
    default:
      break;
  }
  const char* op = node.kind == NodeKind::Add   ? " + "
                   : node.kind == NodeKind::Sub ? " - "
                   : node.kind == NodeKind::Mul ? " * "
                                                : " / ";
  out += "(";
  print_node(*node.lhs, prefix, out);
  out += op;
  print_node(*node.rhs, prefix, out);
  out += ")";
}

}  // namespace

std::string print(const Expr& e) {
  std::string out;
  print_node(e.root(), e.prefix(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Complex int_power(Complex base, int e, SourcePos pos) {
  if (e < 0) {
    if (base == Complex{0.0, 0.0}) throw EvalError("division by zero (zero to negative power)", pos);
    return Complex{1.0, 0.0} / int_power(base, -e, pos);
  }
  Complex r{1.0, 0.0};
  unsigned u = static_cast<unsigned>(e);
  while (u != 0) {
    if (u & 1u) r *= base;
    base *= base;
    u >>= 1u;
  }
  return r;
}

Complex eval_node(const Node& node, const ComplexVec& z) {
  switch (node.kind) {
    case NodeKind::Literal:
      return node.value;
    case NodeKind::Variable:
      return z[static_cast<std::size_t>(node.index - 1)];
    case NodeKind::Vector:
      throw EvalError("bare vector outside abs2/normH", node.pos);
    case NodeKind::Negate:
      return -eval_node(*node.lhs, z);
    case NodeKind::Add:
      return eval_node(*node.lhs, z) + eval_node(*node.rhs, z);
    case NodeKind::Sub:
      return eval_node(*node.lhs, z) - eval_node(*node.rhs, z);
    case NodeKind::Mul:
      return eval_node(*node.lhs, z) * eval_node(*node.rhs, z);
    case NodeKind::Div: {
      const Complex num = eval_node(*node.lhs, z);
      const Complex den = eval_node(*node.rhs, z);
      if (den == Complex{0.0, 0.0}) {
        throw EvalError("division by zero in subexpression", node.rhs->pos);
      }
      return num / den;
    }
    case NodeKind::Pow:
      return int_power(eval_node(*node.lhs, z), node.index, node.pos);
    case NodeKind::Call:
      break;
  }
  switch (node.func) {
    case Func::Abs2:
      return z.square();
    case Func::NormH: {
      double s = 0.0;
      for (const auto& c : z.entries()) s += std::norm(c);
      return s;
    }
    default:
      break;
  }
  const Complex a = eval_node(*node.lhs, z);
  switch (node.func) {
    case Func::Exp: return std::exp(a);
    case Func::Sin: return std::sin(a);
    case Func::Cos: return std::cos(a);
    case Func::Sqrt: return csqrt_principal(a);
    case Func::Re: return a.real();
    case Func::Im: return a.imag();
    default: break;
  }
  throw EvalError("unknown function", node.pos);
}

}  // namespace

Complex eval(const Expr& e, const ComplexVec& point) {
  if (point.dim() != e.dim()) throw DimensionError("expr::eval: dimension mismatch");
  return eval_node(e.root(), point);
}

FieldFunction to_field(Expr e) {
  const std::size_t n = e.dim();
  auto shared = std::make_shared<const Expr>(std::move(e));
  return FieldFunction(n, [shared](const ComplexVec& z) { return eval(*shared, z); });
}

// ---------------------------------------------------------------------------
// Polynomial bridge

namespace {

MultiPoly poly_node(const Node& node, std::size_t n) {
  switch (node.kind) {
    case NodeKind::Literal:
      return MultiPoly::constant(n, node.value);
    case NodeKind::Variable:
      return MultiPoly::variable(n, static_cast<std::size_t>(node.index - 1));
    case NodeKind::Negate:
      return -poly_node(*node.lhs, n);
    case NodeKind::Add:
      return poly_node(*node.lhs, n) + poly_node(*node.rhs, n);
    case NodeKind::Sub:
      return poly_node(*node.lhs, n) - poly_node(*node.rhs, n);
    case NodeKind::Mul:
      return poly_node(*node.lhs, n) * poly_node(*node.rhs, n);
    case NodeKind::Div: {
      const MultiPoly den = poly_node(*node.rhs, n);
      if (den.degree() > 0) throw NotPolynomialError("division by a non-constant expression");
      if (den.is_zero()) throw EvalError("division by zero in subexpression", node.rhs->pos);
      const Complex c = den.coefficient(Exponent(n, 0));
      return poly_node(*node.lhs, n) * (Complex{1.0, 0.0} / c);
    }
    case NodeKind::Pow:
      if (node.index < 0) throw NotPolynomialError("negative power");
      return poly_node(*node.lhs, n).pow(static_cast<unsigned>(node.index));
    case NodeKind::Call:
      if (node.func == Func::Abs2) return MultiPoly::abs2(n);
      throw NotPolynomialError(std::string("function '") + func_name(node.func) +
                               "' is not polynomial");
    case NodeKind::Vector:
      break;
  }
  throw NotPolynomialError("unsupported node");
}

}  // namespace

MultiPoly to_poly(const Expr& e) { return poly_node(e.root(), e.dim()); }

std::string poly_to_source(const MultiPoly& P, char prefix) {
  if (P.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : P.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + format_double(c.real()) + " + " + format_double(c.imag()) + "*i)";
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      out += "*";
      out += prefix;
      out += std::to_string(j + 1);
      if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
  }
  return out;
}

}  // namespace polyharm::expr
