#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace igk::dsl {

// Density expression language.
//
//   expr     := additive [ ('<' | '<=' | '>' | '>=' | '==') additive ]
//   additive := term { ('+' | '-') term }
//   term     := unary { ('*' | '/') unary }
//   unary    := '-' unary | power
//   power    := primary [ '^' unary ]            (right associative)
//   primary  := number | 'pi' | xK | tK | call | '(' expr ')'
//   call     := exp|log|sin|cos|abs|sign '(' expr ')'
//             | min|max '(' expr ',' expr ')'
//             | if '(' expr ',' expr ',' expr ')'
//
// xK are atom coordinates and tK parameters, both 1-based in the text and
// 0-based in the API.

enum class Op {
  Number, Coord, Param,
  Neg,
  Add, Sub, Mul, Div, Pow,
  Lt, Le, Gt, Ge, Eq,
  Exp, Log, Sin, Cos, Abs, Sign,
  Min, Max,
  If,
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  double value = 0.0;      // Number
  std::size_t index = 0;   // Coord / Param, 0-based
  std::vector<NodePtr> args;
};

/// Immutable expression tree; cheap to copy and safe to share across threads.
class Expr {
 public:
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  const Node& root() const { return *root_; }
  const NodePtr& node() const { return root_; }

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
};

struct ParseOptions {
  std::size_t coord_dim = 0;
  std::size_t param_dim = 0;
  /// Rewrite a^b with a non-literal exponent to exp(b*log(a)).
  bool rewrite_general_powers = false;
};

/// Throws SyntaxError (with byte offset and expected tokens) or
/// UnknownIdentifierError.
Expr parse(std::string_view text, const ParseOptions& options);

/// Fully parenthesized normal form; parse(print(e)) == e.
std::string print(const Expr& e);

/// Throws DomainError naming the offending subexpression for log of a
/// nonpositive value, division by zero, or any non-finite intermediate.
double eval(const Expr& e, std::span<const double> coords, std::span<const double> params);

/// Exact partial derivative with respect to parameter `param` (0-based).
/// Throws UnsupportedError when abs/sign/min/max or a comparison value depends
/// on that parameter. `if` is differentiated branchwise.
Expr differentiate(const Expr& e, std::size_t param);

bool depends_on_param(const Expr& e, std::size_t param);

/// Highest coordinate / parameter index referenced, plus one.
std::size_t coord_extent(const Expr& e);
std::size_t param_extent(const Expr& e);

}  // namespace igk::dsl
