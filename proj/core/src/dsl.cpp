#include "igk/dsl.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "igk/error.hpp"

namespace igk::dsl {
namespace {

// ---------------------------------------------------------------------------
// Construction helpers with constant folding.

NodePtr make(Op op, std::vector<NodePtr> args = {}) {
  return std::make_shared<const Node>(Node{op, 0.0, 0, std::move(args)});
}

NodePtr number(double v) { return std::make_shared<const Node>(Node{Op::Number, v, 0, {}}); }

NodePtr variable(Op op, std::size_t index) {
  return std::make_shared<const Node>(Node{op, 0.0, index, {}});
}

bool is_number(const NodePtr& n, double v) { return n->op == Op::Number && n->value == v; }

NodePtr neg(NodePtr a) {
  if (a->op == Op::Number) return number(-a->value);
  if (a->op == Op::Neg) return a->args[0];
  return make(Op::Neg, {std::move(a)});
}

NodePtr add(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0)) return b;
  if (is_number(b, 0.0)) return a;
  if (a->op == Op::Number && b->op == Op::Number) return number(a->value + b->value);
  return make(Op::Add, {std::move(a), std::move(b)});
}

NodePtr sub(NodePtr a, NodePtr b) {
  if (is_number(b, 0.0)) return a;
  if (is_number(a, 0.0)) return neg(std::move(b));
  if (a->op == Op::Number && b->op == Op::Number) return number(a->value - b->value);
  return make(Op::Sub, {std::move(a), std::move(b)});
}

NodePtr mul(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0) || is_number(b, 0.0)) return number(0.0);
  if (is_number(a, 1.0)) return b;
  if (is_number(b, 1.0)) return a;
  if (a->op == Op::Number && b->op == Op::Number) return number(a->value * b->value);
  return make(Op::Mul, {std::move(a), std::move(b)});
}

NodePtr div(NodePtr a, NodePtr b) {
  if (is_number(a, 0.0)) return number(0.0);
  if (is_number(b, 1.0)) return a;
  return make(Op::Div, {std::move(a), std::move(b)});
}

NodePtr pow(NodePtr a, NodePtr b) {
  if (is_number(b, 1.0)) return a;
  if (is_number(b, 0.0)) return number(1.0);
  return make(Op::Pow, {std::move(a), std::move(b)});
}

std::optional<double> literal_value(const NodePtr& n) {
  if (n->op == Op::Number) return n->value;
  if (n->op == Op::Neg && n->args[0]->op == Op::Number) return -n->args[0]->value;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Names.

struct FunctionInfo {
  std::string_view name;
  Op op;
  std::size_t arity;
};

constexpr FunctionInfo kFunctions[] = {
    {"exp", Op::Exp, 1},  {"log", Op::Log, 1},   {"sin", Op::Sin, 1}, {"cos", Op::Cos, 1},
    {"abs", Op::Abs, 1},  {"sign", Op::Sign, 1}, {"min", Op::Min, 2}, {"max", Op::Max, 2},
    {"if", Op::If, 3},
};

const FunctionInfo* find_function(std::string_view name) {
  for (const auto& f : kFunctions)
    if (f.name == name) return &f;
  return nullptr;
}

std::string_view function_name(Op op) {
  for (const auto& f : kFunctions)
    if (f.op == op) return f.name;
  return "?";
}

std::string_view binary_symbol(Op op) {
  switch (op) {
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Pow: return "^";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Gt: return ">";
    case Op::Ge: return ">=";
    case Op::Eq: return "==";
    default: return "?";
  }
}

bool is_binary(Op op) {
  switch (op) {
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div: case Op::Pow:
    case Op::Lt: case Op::Le: case Op::Gt: case Op::Ge: case Op::Eq:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Parser.

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  NodePtr parse_all() {
    auto root = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail({"operator", "end of input"});
    return root;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    std::string what = "syntax error at offset " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) what += i + 1 == expected.size() ? " or " : ", ";
      what += expected[i];
    }
    if (pos_ < text_.size()) what += ", found '" + std::string(1, text_[pos_]) + "'";
    else what += ", found end of input";
    throw SyntaxError(pos_, std::move(expected), what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail({"'" + std::string(token) + "'"});
  }

  NodePtr parse_expr() {
    auto lhs = parse_additive();
    struct Cmp { std::string_view tok; Op op; };
    // Two-character operators first.
    static constexpr Cmp kCmps[] = {{"<=", Op::Le}, {">=", Op::Ge}, {"==", Op::Eq},
                                    {"<", Op::Lt},  {">", Op::Gt}};
    for (const auto& c : kCmps) {
      if (accept(c.tok)) return make(c.op, {lhs, parse_additive()});
    }
    return lhs;
  }

  NodePtr parse_additive() {
    auto lhs = parse_term();
    for (;;) {
      if (accept("+")) lhs = make(Op::Add, {lhs, parse_term()});
      else if (accept("-")) lhs = make(Op::Sub, {lhs, parse_term()});
      else return lhs;
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_unary();
    for (;;) {
      if (accept("*")) lhs = make(Op::Mul, {lhs, parse_unary()});
      else if (accept("/")) lhs = make(Op::Div, {lhs, parse_unary()});
      else return lhs;
    }
  }

  NodePtr parse_unary() {
    if (accept("-")) {
      auto operand = parse_unary();
      // "-2" is the literal -2 so that printed negative literals read back unchanged.
      if (operand->op == Op::Number) return number(-operand->value);
      return make(Op::Neg, {std::move(operand)});
    }
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (accept("^")) {
      auto exponent = parse_unary();
      if (options_.rewrite_general_powers && !literal_value(exponent))
        return make(Op::Exp, {make(Op::Mul, {exponent, make(Op::Log, {base})})});
      return make(Op::Pow, {base, exponent});
    }
    return base;
  }

  NodePtr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail({"number", "identifier", "'('", "'-'"});
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    if (accept("(")) {
      auto inner = parse_expr();
      expect(")");
      return inner;
    }
    fail({"number", "identifier", "'('", "'-'"});
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != text_.data() + pos_) {
      pos_ = start;
      fail({"number"});
    }
    return number(v);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (const auto* fn = find_function(name)) return parse_call(*fn);
    if (name == "pi") return number(std::numbers::pi);
    if (name.size() >= 2 && (name[0] == 'x' || name[0] == 't')) {
      std::size_t k = 0;
      const auto res = std::from_chars(name.data() + 1, name.data() + name.size(), k);
      if (res.ec == std::errc() && res.ptr == name.data() + name.size() && k >= 1 &&
          name[1] != '0') {
        const bool coord = name[0] == 'x';
        const std::size_t limit = coord ? options_.coord_dim : options_.param_dim;
        if (k > limit)
          throw UnknownIdentifierError("unknown identifier '" + std::string(name) + "' at offset " +
                                       std::to_string(start) + ": only " + std::to_string(limit) +
                                       (coord ? " coordinate(s)" : " parameter(s)") + " declared");
        return variable(coord ? Op::Coord : Op::Param, k - 1);
      }
    }
    throw UnknownIdentifierError("unknown identifier '" + std::string(name) + "' at offset " +
                                 std::to_string(start));
  }

  NodePtr parse_call(const FunctionInfo& fn) {
    expect("(");
    std::vector<NodePtr> args;
    args.push_back(parse_expr());
    while (args.size() < fn.arity) {
      expect(",");
      args.push_back(parse_expr());
    }
    expect(")");
    return make(fn.op, std::move(args));
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer.

void print_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), std::abs(v));
  if (std::signbit(v)) out += "(-";
  out.append(buf, res.ptr);
  if (std::signbit(v)) out += ')';
}

void print_node(std::string& out, const Node& n) {
  switch (n.op) {
    case Op::Number:
      print_number(out, n.value);
      return;
    case Op::Coord:
      out += 'x';
      out += std::to_string(n.index + 1);
      return;
    case Op::Param:
      out += 't';
      out += std::to_string(n.index + 1);
      return;
    case Op::Neg:
      out += "(-";
      print_node(out, *n.args[0]);
      out += ')';
      return;
    default:
      break;
  }
  if (is_binary(n.op)) {
    out += '(';
    print_node(out, *n.args[0]);
    out += binary_symbol(n.op);
    print_node(out, *n.args[1]);
    out += ')';
    return;
  }
  out += function_name(n.op);
  out += '(';
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) out += ',';
    print_node(out, *n.args[i]);
  }
  out += ')';
}

std::string print_node(const Node& n) {
  std::string out;
  print_node(out, n);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation.

struct Evaluator {
  std::span<const double> coords;
  std::span<const double> params;

  [[noreturn]] static void domain_error(const Node& n, const std::string& why) {
    throw DomainError(why + " in '" + print_node(n) + "'");
  }

  double checked(const Node& n, double v) const {
    if (!std::isfinite(v)) domain_error(n, "non-finite value");
    return v;
  }

  double operator()(const Node& n) const {
    switch (n.op) {
      case Op::Number:
        return n.value;
      case Op::Coord:
        if (n.index >= coords.size()) domain_error(n, "coordinate not supplied");
        return coords[n.index];
      case Op::Param:
        if (n.index >= params.size()) domain_error(n, "parameter not supplied");
        return params[n.index];
      case Op::Neg:
        return -(*this)(*n.args[0]);
      case Op::Add:
        return checked(n, (*this)(*n.args[0]) + (*this)(*n.args[1]));
      case Op::Sub:
        return checked(n, (*this)(*n.args[0]) - (*this)(*n.args[1]));
      case Op::Mul:
        return checked(n, (*this)(*n.args[0]) * (*this)(*n.args[1]));
      case Op::Div: {
        const double den = (*this)(*n.args[1]);
        if (den == 0.0) domain_error(n, "division by zero");
        return checked(n, (*this)(*n.args[0]) / den);
      }
      case Op::Pow:
        return checked(n, std::pow((*this)(*n.args[0]), (*this)(*n.args[1])));
      case Op::Lt: return (*this)(*n.args[0]) < (*this)(*n.args[1]) ? 1.0 : 0.0;
      case Op::Le: return (*this)(*n.args[0]) <= (*this)(*n.args[1]) ? 1.0 : 0.0;
      case Op::Gt: return (*this)(*n.args[0]) > (*this)(*n.args[1]) ? 1.0 : 0.0;
      case Op::Ge: return (*this)(*n.args[0]) >= (*this)(*n.args[1]) ? 1.0 : 0.0;
      case Op::Eq: return (*this)(*n.args[0]) == (*this)(*n.args[1]) ? 1.0 : 0.0;
      case Op::Exp:
        return checked(n, std::exp((*this)(*n.args[0])));
      case Op::Log: {
        const double a = (*this)(*n.args[0]);
        if (!(a > 0.0)) domain_error(n, "log of nonpositive value");
        return std::log(a);
      }
      case Op::Sin: return std::sin((*this)(*n.args[0]));
      case Op::Cos: return std::cos((*this)(*n.args[0]));
      case Op::Abs: return std::abs((*this)(*n.args[0]));
      case Op::Sign: {
        const double a = (*this)(*n.args[0]);
        return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
      }
      case Op::Min: return std::min((*this)(*n.args[0]), (*this)(*n.args[1]));
      case Op::Max: return std::max((*this)(*n.args[0]), (*this)(*n.args[1]));
      case Op::If:
        return (*this)(*n.args[0]) != 0.0 ? (*this)(*n.args[1]) : (*this)(*n.args[2]);
    }
    domain_error(n, "unknown node");
  }
};

// ---------------------------------------------------------------------------
// Differentiation.

bool depends(const Node& n, std::size_t param) {
  if (n.op == Op::Param) return n.index == param;
  for (const auto& a : n.args)
    if (depends(*a, param)) return true;
  return false;
}

NodePtr derive(const NodePtr& np, std::size_t j) {
  const Node& n = *np;
  if (!depends(n, j)) return number(0.0);
  const auto& a = n.args.empty() ? np : n.args[0];
  switch (n.op) {
    case Op::Param:
      return number(1.0);
    case Op::Neg:
      return neg(derive(a, j));
    case Op::Add:
      return add(derive(a, j), derive(n.args[1], j));
    case Op::Sub:
      return sub(derive(a, j), derive(n.args[1], j));
    case Op::Mul: {
      const auto& b = n.args[1];
      return add(mul(derive(a, j), b), mul(a, derive(b, j)));
    }
    case Op::Div: {
      const auto& b = n.args[1];
      return div(sub(mul(derive(a, j), b), mul(a, derive(b, j))), mul(b, b));
    }
    case Op::Pow: {
      const auto& b = n.args[1];
      if (!depends(*b, j)) {
        const auto lit = literal_value(b);
        auto reduced = lit ? number(*lit - 1.0) : sub(b, number(1.0));
        return mul(mul(b, pow(a, std::move(reduced))), derive(a, j));
      }
      // a^b = exp(b log a)
      return mul(np, add(mul(derive(b, j), make(Op::Log, {a})), div(mul(b, derive(a, j)), a)));
    }
    case Op::Exp:
      return mul(np, derive(a, j));
    case Op::Log:
      return div(derive(a, j), a);
    case Op::Sin:
      return mul(make(Op::Cos, {a}), derive(a, j));
    case Op::Cos:
      return mul(neg(make(Op::Sin, {a})), derive(a, j));
    case Op::If:
      return make(Op::If, {n.args[0], derive(n.args[1], j), derive(n.args[2], j)});
    default:
      break;
  }
  throw UnsupportedError("cannot differentiate non-smooth node '" + print_node(n) +
                         "' with respect to t" + std::to_string(j + 1));
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  if (a.op == Op::Number) {
    // Bitwise-equal doubles, so that 0.0 and -0.0 differ as literals.
    return a.value == b.value && std::signbit(a.value) == std::signbit(b.value);
  }
  if ((a.op == Op::Coord || a.op == Op::Param) && a.index != b.index) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!equal_nodes(*a.args[i], *b.args[i])) return false;
  return true;
}

std::size_t extent(const Node& n, Op op) {
  std::size_t e = n.op == op ? n.index + 1 : 0;
  for (const auto& a : n.args) e = std::max(e, extent(*a, op));
  return e;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) { return equal_nodes(*a.root_, *b.root_); }

Expr parse(std::string_view text, const ParseOptions& options) {
  return Expr(Parser(text, options).parse_all());
}

std::string print(const Expr& e) { return print_node(e.root()); }

double eval(const Expr& e, std::span<const double> coords, std::span<const double> params) {
  return Evaluator{coords, params}(e.root());
}

Expr differentiate(const Expr& e, std::size_t param) { return Expr(derive(e.node(), param)); }

bool depends_on_param(const Expr& e, std::size_t param) { return depends(e.root(), param); }

std::size_t coord_extent(const Expr& e) { return extent(e.root(), Op::Coord); }
std::size_t param_extent(const Expr& e) { return extent(e.root(), Op::Param); }

}  // namespace igk::dsl
