// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Expression language for symmetric functions:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := pleth ('*' pleth)*
//   pleth  := power ('@' power)*            -- plethysm, left-associative
//   power  := atom ('^' UINT)*
//   atom   := UINT ['/' UINT] | BASIS '[' UINT (',' UINT)* ']' | '(' expr ')'
//             | '-' atom
//   BASIS  := 'm' | 'e' | 'p' | 'w'
//
// '@' binds tighter than '*', which binds tighter than '+'/'-'.
// SyntaxError carries a 1-based byte offset.

#ifndef SYMWITT_EXPR_HPP
#define SYMWITT_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "symwitt/symfunc.hpp"

namespace symwitt {

struct Expr {
  enum class Node { literal, generator, neg, add, sub, mul, pleth, pow };
  Node node;
  Rat literal;                 // literal
  Basis basis = Basis::monomial;
  Partition partition;         // generator
  unsigned exponent = 0;       // pow
  std::vector<std::shared_ptr<const Expr>> children;

  std::string str() const;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expr(std::string_view text);

/// Evaluate to a symmetric function (internally in the power-sum basis
/// over Q; convert with change_basis / with_coeff_ring as needed).
SymFunc eval_expr(const Expr& e);

/// Evaluate and present in a basis, narrowing the coefficient ring back to
/// Z whenever the coefficients are integral.
SymFunc eval_in_basis(std::string_view text, Basis target);

}  // namespace symwitt

#endif
