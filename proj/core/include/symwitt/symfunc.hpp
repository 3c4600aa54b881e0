// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// The ring of symmetric functions in countably many variables, with the
// monomial (m), elementary (e), power-sum (p) and Witt (w) bases, base
// change, expansion into finitely many variables, plethysm, and the
// coaddition / comultiplication / counit structure.
//
// e and w are multiplicative integral bases; p is a basis only over Q.
// Coefficients are exact rationals tagged with a declared coefficient ring
// (Z or Q); a Z-tagged value always has integer coefficients.

#ifndef SYMWITT_SYMFUNC_HPP
#define SYMWITT_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "symwitt/multipoly.hpp"
#include "symwitt/partition.hpp"
#include "symwitt/ring.hpp"

namespace symwitt {

enum class Basis { monomial, elementary, power_sum, witt };

char basis_letter(Basis b);              // m e p w
Basis basis_from_letter(char c);
bool is_multiplicative(Basis b);         // e, p, w: b_lambda * b_mu = b_{lambda u mu}

class SymFunc {
 public:
  using TermMap = std::map<Partition, Rat, PartitionTermLess>;

  SymFunc(Basis basis, RingDescriptor ring);
  SymFunc() : SymFunc(Basis::monomial, RingDescriptor::integers()) {}

  static SymFunc zero(Basis basis, RingDescriptor ring = RingDescriptor::integers());
  static SymFunc constant(Basis basis, const Rat& c);
  /// The basis element b_lambda.
  static SymFunc generator(Basis basis, Partition lambda,
                           RingDescriptor ring = RingDescriptor::integers());
  static SymFunc from_terms(Basis basis, RingDescriptor ring, TermMap terms);

  // Named elements
  static SymFunc e_n(unsigned n);       // elementary basis
  static SymFunc psi_n(unsigned n);     // Adams operation, power-sum basis
  static SymFunc w_n(unsigned n);       // Witt basis
  /// x1 + x2 + ... , the two-sided identity for plethysm (= p_[1]).
  static SymFunc plethysm_identity();

  Basis basis() const { return basis_; }
  const RingDescriptor& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Max partition weight present (0 for constants and zero).
  unsigned degree() const;
  bool is_integral() const;
  Rat coefficient(const Partition& lambda) const;

  SymFunc operator-() const;
  friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc scaled(const Rat& c) const;   // promotes the ring to Q if needed
  SymFunc pow(unsigned e) const;

  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  std::string str() const;   // "w[1]^2 + 2*w[2]", "m[2,1]", "1/2*p[3]"

 private:
  void add_term(const Partition& p, const Rat& c);
  friend SymFunc unify_rings(const SymFunc&, const SymFunc&);

  Basis basis_;
  RingDescriptor ring_;
  TermMap terms_;
};

/// Re-express in another basis.  Round trips are the identity.  Targets
/// m/e/w keep a Z-tagged ring (conversion is exact on integral inputs and
/// certified); the p-basis target forces the Q tag.
SymFunc change_basis(const SymFunc& f, Basis target);

/// Narrow or widen the declared coefficient ring; IntegralityError when a
/// coefficient does not lie in the target.
SymFunc with_coeff_ring(const SymFunc& f, const RingDescriptor& ring);

/// Image of f in the polynomial ring on the given variables (all other
/// x_i set to 0).  Exact: distinct f of degree <= #vars stay distinct.
MultiPoly expand(const SymFunc& f, const std::vector<std::string>& vars);
MultiPoly expand(const SymFunc& f, unsigned nvars, const std::string& prefix = "x");

/// Inverse of expand on symmetric polynomials of degree <= nvars
/// (monomial-basis result; SymmetryError / PrecisionError otherwise).
SymFunc from_polynomial(const MultiPoly& g, unsigned nvars, const std::string& prefix = "x");

/// Plethysm f o g: associative, with two-sided identity x1 + x2 + ... .
/// Computed in the p-basis via p_n o p_m = p_{nm}; when both inputs carry
/// the Z tag the result is re-integralized (IntegralityError would signal
/// an implementation bug).
SymFunc plethysm(const SymFunc& f, const SymFunc& g);

/// Coaddition at finite level: f(x1, y1, x2, y2, ...) in the 2N variables
/// {x1..xN, y1..yN}.  Requires deg(f) <= N.
MultiPoly coaddition_image(const SymFunc& f, unsigned N);

/// Comultiplication at finite level: f(..., x_i*y_j, ...) in the N^2
/// products.  Requires deg(f) <= N.
MultiPoly comultiplication_image(const SymFunc& f, unsigned N);

/// Additive counit f(0,0,...) and multiplicative counit f(1,0,0,...).
Rat counit_plus(const SymFunc& f);
Rat counit_times(const SymFunc& f);

/// True iff the coaddition image splits as f(x) + f(y) at level deg(f).
bool is_additive(const SymFunc& f);

/// Linear part of f in its multiplicative basis (e or w): the image modulo
/// the square of the augmentation ideal.  Requires counit_plus(f) == 0.
SymFunc cotangent_reduce(const SymFunc& f);

std::ostream& operator<<(std::ostream& os, const SymFunc& f);

}  // namespace symwitt

#endif
