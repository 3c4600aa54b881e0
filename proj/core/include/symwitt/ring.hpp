// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Coefficient rings and their elements: Z, Q, Z/m, and one univariate
// polynomial layer over these.  Elements are immutable values in canonical
// form (reduced fractions with positive denominator, residues in [0, m),
// no trailing zero coefficients), so equality is plain comparison.

#ifndef SYMWITT_RING_HPP
#define SYMWITT_RING_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symwitt/errors.hpp"
#include "symwitt/numbers.hpp"

namespace symwitt {

class RingDescriptor {
 public:
  enum class Kind { integers, rationals, mod, poly };

  RingDescriptor() : kind_(Kind::integers) {}

  static RingDescriptor integers() { return RingDescriptor(); }
  static RingDescriptor rationals();
  static RingDescriptor mod(Int modulus);  // modulus >= 2
  static RingDescriptor poly(const RingDescriptor& base, std::string variable);

  Kind kind() const { return kind_; }
  bool is_integers() const { return kind_ == Kind::integers; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_mod() const { return kind_ == Kind::mod; }
  bool is_poly() const { return kind_ == Kind::poly; }

  const Int& modulus() const;
  const RingDescriptor& base() const;
  const std::string& variable() const;

  /// True for Z, Q and polynomial rings over them: n*x = 0 implies x = 0.
  bool is_torsion_free() const;
  /// True when every nonzero integer is invertible (Q, Q[x] coefficients).
  bool has_rationals() const;
  /// Z -> Q, Z[x] -> Q[x]; identity on Q, Q[x].  DescriptorError for Z/m.
  RingDescriptor fraction_field() const;

  std::string name() const;  // "Z", "Q", "Z/6", "Z[x]", ...

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);
  friend bool operator!=(const RingDescriptor& a, const RingDescriptor& b) { return !(a == b); }

 private:
  Kind kind_;
  Int modulus_;                                  // mod
  std::shared_ptr<const RingDescriptor> base_;   // poly
  std::string var_;                              // poly
};

/// "Z" | "Q" | "Z/6" | "Z[x]" | "Q[x]"
RingDescriptor parse_ring(std::string_view text);

class RingElement {
 public:
  using PolyCoeffs = std::vector<RingElement>;  // ascending degree, trimmed

  RingElement() : ring_(RingDescriptor::integers()), payload_(Int(0)) {}

  static RingElement zero(const RingDescriptor& ring);
  static RingElement one(const RingDescriptor& ring);
  static RingElement from_int(const RingDescriptor& ring, const Int& value);
  static RingElement from_rat(const RingDescriptor& ring, const Rat& value);
  /// The generator of a polynomial ring.
  static RingElement generator(const RingDescriptor& ring);
  static RingElement from_coeffs(const RingDescriptor& ring, PolyCoeffs coeffs);

  const RingDescriptor& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const Int& int_value() const;           // integers / mod
  const Rat& rat_value() const;           // rationals
  const PolyCoeffs& coeffs() const;       // poly
  /// Value as a rational; only for Z / Q elements.
  Rat as_rat() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement pow(std::uint64_t e) const;

  /// g with n*g = *this, when such g exists; IntegralityError otherwise.
  RingElement exact_div_int(const Int& n) const;

  /// For polynomial rings: evaluate at `value` for the generator (value in
  /// the same ring).  Identity on base-ring elements.
  RingElement substitute(const RingElement& value) const;

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  std::string str() const;

 private:
  RingElement(RingDescriptor ring, std::variant<Int, Rat, PolyCoeffs> payload)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}
  void normalize();

  RingDescriptor ring_;
  std::variant<Int, Rat, PolyCoeffs> payload_;
};

/// Canonical embedding / narrowing between rings: Z -> anything,
/// Q -> Q-like (or Z when the value is integral), coefficientwise on
/// polynomials.  IntegralityError when narrowing fails, DescriptorError
/// when no canonical map exists.
RingElement convert_element(const RingElement& value, const RingDescriptor& target);

/// Parse "7", "-1/2", "x^2 - 2*x + 1" according to the ring.
RingElement parse_element(const RingDescriptor& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const RingElement& e);

}  // namespace symwitt

#endif
