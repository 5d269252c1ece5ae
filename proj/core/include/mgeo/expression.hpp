#pragma once

// Immersion coordinate expressions.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' integer)?
//   atom   := number | ident | ident '(' expr ')' | '(' expr ')' | '-' atom
//
// Identifiers are the variables u1..un, declared constants, and the functions
// sin, cos, exp, sqrt. Note that '-' binds tighter than '^': -u1^2 is (-u1)^2.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mgeo/jet.hpp"

namespace mgeo {

enum class NodeKind { constant, param, var, neg, sin, cos, exp, sqrt, add, sub, mul, div, pow };

struct ExprNode {
  NodeKind kind = NodeKind::constant;
  double value = 0.0;  ///< constant
  int index = 0;       ///< param / var slot (0-based)
  int exponent = 0;    ///< pow
  int lhs = -1;        ///< child node ids
  int rhs = -1;
  std::string text;    ///< source span, used in error messages
};

/// Names visible to an expression: n variables u1..un and named constants.
struct SymbolTable {
  int n_vars = 0;
  std::vector<std::string> constants;
};

/// Immutable parsed expression. Nodes live in a flat arena; children precede parents.
class Expr {
 public:
  Expr() = default;

  const std::vector<ExprNode>& nodes() const { return *nodes_; }
  int root() const { return root_; }
  const SymbolTable& symbols() const { return *symbols_; }
  const std::string& source() const { return source_; }

  /// Structural rendering, e.g. Mul(Param(r), Unary(cos, Var(u1))).
  std::string structure() const;

  double eval(const std::vector<double>& u, const std::vector<double>& constants) const;
  Jet2 eval_jet(const std::vector<double>& u, const std::vector<double>& constants) const;

 private:
  friend Expr parse_expression(const std::string&, const SymbolTable&, int);

  std::shared_ptr<const std::vector<ExprNode>> nodes_;
  std::shared_ptr<const SymbolTable> symbols_;
  int root_ = -1;
  std::string source_;
};

/// Throws ParseError with a 1-based position; `line` is reported as given.
Expr parse_expression(const std::string& text, const SymbolTable& symbols, int line = 1);

/// One expression per non-blank line.
std::vector<Expr> parse_immersion(const std::string& text, const SymbolTable& symbols);

}  // namespace mgeo
