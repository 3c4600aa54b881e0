// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sparse multivariate polynomials over a coefficient ring.  Terms are kept
// in graded-lexicographic order (descending for display) with a fixed
// global variable ordering (x0 < x1 < ... < y0 < y1 < ...), so printed
// output is deterministic and stable for golden tests.

#ifndef SYMWITT_MULTIPOLY_HPP
#define SYMWITT_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "symwitt/ring.hpp"

namespace symwitt {

/// Natural order on variable names: alphabetic prefix first, then the
/// numeric suffix as a number, so x2 < x10 < y0.
bool variable_less(const std::string& a, const std::string& b);

class Monomial {
 public:
  Monomial() = default;  // the empty product, 1
  static Monomial variable(const std::string& name, unsigned exp = 1);

  unsigned degree() const;
  unsigned exponent(const std::string& name) const;
  /// (variable, exponent) pairs sorted by variable_less; exponents > 0.
  const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(unsigned e) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  std::string str() const;  // "x0^2*y1"

 private:
  std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Graded-lex, highest term first.
struct MonomialDisplayLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, RingElement, MonomialDisplayLess>;

  explicit MultiPoly(RingDescriptor ring) : ring_(std::move(ring)) {}
  MultiPoly() : MultiPoly(RingDescriptor::integers()) {}

  static MultiPoly constant(const RingDescriptor& ring, const RingElement& c);
  static MultiPoly constant(const RingDescriptor& ring, const Int& c);
  static MultiPoly variable(const RingDescriptor& ring, const std::string& name, unsigned exp = 1);
  static MultiPoly from_terms(const RingDescriptor& ring, TermMap terms);

  const RingDescriptor& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  std::vector<std::string> variables() const;
  /// Coefficient of a monomial (zero element if absent).
  RingElement coefficient(const Monomial& m) const;
  bool is_constant() const;
  RingElement constant_term() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator*(const RingElement& c) const;
  MultiPoly pow(unsigned e) const;

  /// Substitute polynomials for variables.  Every variable occurring in
  /// *this must be bound (SubstitutionError), and all bindings must share
  /// the descriptor (DescriptorError).
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

  /// Full evaluation at ring elements of `target`; coefficients are mapped
  /// through the canonical Z/Q -> target map.
  RingElement evaluate(const std::map<std::string, RingElement>& values,
                       const RingDescriptor& target) const;

  /// g with n*g = *this; IntegralityError (with the offending term) if a
  /// coefficient is not divisible.
  MultiPoly exact_div_int(const Int& n) const;

  /// Re-coefficient over another ring via convert_element, e.g. Q -> Z
  /// narrowing with integrality certification, or Z -> Z/m reduction.
  MultiPoly with_ring(const RingDescriptor& target) const;

  /// Exchange two variable names (used for symmetry tests).
  MultiPoly swap_variables(const std::string& a, const std::string& b) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  std::string str() const;  // "3*x0^2*y1 - 1/2*x1"
  nlohmann::json to_json() const;
  static MultiPoly from_json(const RingDescriptor& ring, const nlohmann::json& j);

 private:
  void add_term(const Monomial& m, const RingElement& c);

  RingDescriptor ring_;
  TermMap terms_;
};

/// Parse the text form: `3*x0^2*y1 - 1/2*x1 + 2`.
MultiPoly parse_poly(const RingDescriptor& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace symwitt

#endif
