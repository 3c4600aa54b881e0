// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// The p-typical layer: theta generators, delta-ring actions coming from
// Frobenius lifts on torsion-free rings, lambda-operations from the Adams
// operations by Newton's recursion, and the linearization checks.

#ifndef SYMWITT_DELTA_HPP
#define SYMWITT_DELTA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symwitt/symfunc.hpp"
#include "symwitt/witt.hpp"

namespace symwitt {

/// An endomorphism f of a p-torsion-free ring (Z, or one polynomial layer
/// over Z/Q) with f(x) == x^p mod p, given by the image of the generator.
/// The congruence is checked on construction; checking it on the generator
/// suffices because coefficients obey Fermat.
class FrobeniusLift {
 public:
  /// Over Z (or Q) the identity is the unique ring endomorphism.
  FrobeniusLift(RingDescriptor ring, std::int64_t p);
  /// Over a polynomial ring: x -> gen_image.
  FrobeniusLift(RingDescriptor ring, std::int64_t p, RingElement gen_image);

  const RingDescriptor& ring() const { return ring_; }
  std::int64_t prime() const { return p_; }
  RingElement apply(const RingElement& r) const;

 private:
  RingDescriptor ring_;
  std::int64_t p_;
  std::optional<RingElement> gen_image_;
};

/// The ring map R -> W(R) attached to a Frobenius lift: ghost components
/// (r, f(r), f(f(r)), ...).  Integrality of the Witt components is what the
/// Dieudonne-Dwork congruence guarantees; it is asserted, not assumed.
WittVector dwork_action(const FrobeniusLift& lift, const RingElement& r, int len);

/// delta(r) = (f(r) - r^p) / p, exact.
RingElement delta_op(const FrobeniusLift& lift, const RingElement& r);

/// lambda_1..lambda_N from psi_1..psi_N by n*lambda_n =
/// sum_{i=1..n} (-1)^{i-1} psi_i lambda_{n-i}.  IntegralityError when a
/// division fails over the ring.
std::vector<RingElement> lambda_from_adams(const std::vector<RingElement>& psi);
std::vector<MultiPoly> lambda_from_adams(const std::vector<MultiPoly>& psi);

/// theta_n = w_{p^n} as a symmetric function (Witt basis).
SymFunc theta_as_symfunc(unsigned n, std::int64_t p);

/// Membership in Lambda_p = Z[theta_0, theta_1, ...]: true iff the w-basis
/// expression involves only w_{p^k} generators.  The certificate is the
/// theta-polynomial (variables theta0, theta1, ...).
struct MembershipResult {
  bool member;
  MultiPoly certificate;  // meaningful only when member
};
MembershipResult lambda_p_membership(const SymFunc& f, std::int64_t p);

struct CheckItem {
  std::string check;
  bool pass;
  std::string witness;
};

/// Verifies, at finite truncation: F = psi_p is additive and ring-like;
/// the cotangent image of F is p*theta_1; and theta_1^{o n} agrees with
/// theta_n modulo decomposables for n <= 3.
std::vector<CheckItem> linearization_report(std::int64_t p);

}  // namespace symwitt

#endif
