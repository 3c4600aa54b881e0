// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/expr.hpp"

#include <cctype>
#include <sstream>

namespace symwitt {

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos + 1);
  }
  unsigned number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw SyntaxError("expected number", pos + 1);
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  }

  ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  ExprPtr atom() {
    skip_ws();
    if (pos >= text.size()) throw SyntaxError("expected expression", pos + 1);
    char c = text[pos];
    if (c == '-') {
      ++pos;
      Expr e{Expr::Node::neg};
      e.children.push_back(atom());
      return make(std::move(e));
    }
    if (c == '(') {
      ++pos;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned num = number();
      Expr e{Expr::Node::literal};
      if (eat('/')) {
        unsigned den = number();
        if (den == 0) throw SyntaxError("zero denominator", pos);
        e.literal = Rat(num, den);
      } else {
        e.literal = Rat(num);
      }
      return make(std::move(e));
    }
    if (c == 'm' || c == 'e' || c == 'p' || c == 'w') {
      ++pos;
      expect('[');
      std::vector<unsigned> parts;
      parts.push_back(number());
      while (eat(',')) parts.push_back(number());
      expect(']');
      Expr e{Expr::Node::generator};
      e.basis = basis_from_letter(c);
      e.partition = Partition(std::move(parts));
      return make(std::move(e));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos + 1);
  }

  ExprPtr power() {
    ExprPtr base = atom();
    while (eat('^')) {
      Expr e{Expr::Node::pow};
      e.exponent = number();
      e.children.push_back(base);
      base = make(std::move(e));
    }
    return base;
  }

  ExprPtr pleth() {
    ExprPtr lhs = power();
    while (eat('@')) {
      Expr e{Expr::Node::pleth};
      e.children.push_back(lhs);
      e.children.push_back(power());
      lhs = make(std::move(e));
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = pleth();
    while (eat('*')) {
      Expr e{Expr::Node::mul};
      e.children.push_back(lhs);
      e.children.push_back(pleth());
      lhs = make(std::move(e));
    }
    return lhs;
  }

  ExprPtr expr() {
    skip_ws();
    ExprPtr lhs;
    if (peek_is('-')) {
      ++pos;
      Expr e{Expr::Node::neg};
      e.children.push_back(term());
      lhs = make(std::move(e));
    } else {
      lhs = term();
    }
    while (true) {
      skip_ws();
      if (eat('+')) {
        Expr e{Expr::Node::add};
        e.children.push_back(lhs);
        e.children.push_back(term());
        lhs = make(std::move(e));
      } else if (eat('-')) {
        Expr e{Expr::Node::sub};
        e.children.push_back(lhs);
        e.children.push_back(term());
        lhs = make(std::move(e));
      } else {
        break;
      }
    }
    return lhs;
  }

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos != text.size()) throw SyntaxError("trailing input", pos + 1);
    return e;
  }
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  ExprParser p{text};
  return p.parse();
}

std::string Expr::str() const {
  std::ostringstream os;
  switch (node) {
    case Node::literal:
      if (is_integer(literal))
        os << rat_num(literal).str();
      else
        os << rat_num(literal).str() << "/" << rat_den(literal).str();
      break;
    case Node::generator:
      os << basis_letter(basis) << partition.str();
      break;
    case Node::neg:
      os << "-(" << children[0]->str() << ")";
      break;
    case Node::add:
      os << "(" << children[0]->str() << " + " << children[1]->str() << ")";
      break;
    case Node::sub:
      os << "(" << children[0]->str() << " - " << children[1]->str() << ")";
      break;
    case Node::mul:
      os << "(" << children[0]->str() << " * " << children[1]->str() << ")";
      break;
    case Node::pleth:
      os << "(" << children[0]->str() << " @ " << children[1]->str() << ")";
      break;
    case Node::pow:
      os << "(" << children[0]->str() << ")^" << exponent;
      break;
  }
  return os.str();
}

SymFunc eval_expr(const Expr& e) {
  switch (e.node) {
    case Expr::Node::literal:
      return change_basis(SymFunc::constant(Basis::power_sum, e.literal), Basis::power_sum);
    case Expr::Node::generator:
      return change_basis(SymFunc::generator(e.basis, e.partition), Basis::power_sum);
    case Expr::Node::neg:
      return -eval_expr(*e.children[0]);
    case Expr::Node::add:
      return eval_expr(*e.children[0]) + eval_expr(*e.children[1]);
    case Expr::Node::sub:
      return eval_expr(*e.children[0]) - eval_expr(*e.children[1]);
    case Expr::Node::mul:
      return eval_expr(*e.children[0]) * eval_expr(*e.children[1]);
    case Expr::Node::pleth:
      return plethysm(eval_expr(*e.children[0]), eval_expr(*e.children[1]));
    case Expr::Node::pow:
      return eval_expr(*e.children[0]).pow(e.exponent);
  }
  throw DescriptorError("bad expression node");
}

SymFunc eval_in_basis(std::string_view text, Basis target) {
  SymFunc value = eval_expr(*parse_expr(text));
  SymFunc result = change_basis(value, target);
  if (target != Basis::power_sum && result.is_integral())
    return with_coeff_ring(result, RingDescriptor::integers());
  return result;
}

}  // namespace symwitt
