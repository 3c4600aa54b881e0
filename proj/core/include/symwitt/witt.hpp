// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Witt vectors over arbitrary coefficient rings.  The ring structure is
// carried by universal structure polynomials with integer coefficients,
// computed once per truncation set by symbolic ghost inversion over Q with
// integrality certification, then evaluated componentwise in any ring
// (including Z/m, where the ghost map is useless).  Every operation states
// the exact truncation of its output; there is no silent precision loss.

#ifndef SYMWITT_WITT_HPP
#define SYMWITT_WITT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symwitt/multipoly.hpp"
#include "symwitt/ring.hpp"

namespace symwitt {

/// Finite divisor-closed set of positive integers indexing Witt components.
class TruncationSet {
 public:
  /// {1, p, p^2, ..., p^{len-1}} (len members).
  static TruncationSet p_typical(std::int64_t p, int len);
  /// {1, 2, ..., n}.
  static TruncationSet full(std::int64_t n);
  /// Validates divisor-closure.
  explicit TruncationSet(std::vector<std::int64_t> members);

  const std::vector<std::int64_t>& members() const { return members_; }  // ascending
  std::size_t size() const { return members_.size(); }
  bool contains(std::int64_t n) const;
  std::size_t index_of(std::int64_t n) const;
  /// {m : m*n in this set}; divisor-closed again.
  TruncationSet quotient(std::int64_t n) const;
  bool is_full() const;  // {1..N}

  friend bool operator==(const TruncationSet& a, const TruncationSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const TruncationSet& a, const TruncationSet& b) { return !(a == b); }
  friend bool operator<(const TruncationSet& a, const TruncationSet& b) {
    return a.members_ < b.members_;
  }
  std::string str() const;  // "{1,2,4}"

 private:
  std::vector<std::int64_t> members_;
};

class WittVector {
 public:
  WittVector(TruncationSet trunc, RingDescriptor ring, std::vector<RingElement> components);
  static WittVector zero(const TruncationSet& trunc, const RingDescriptor& ring);

  const TruncationSet& trunc() const { return trunc_; }
  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& components() const { return components_; }
  const RingElement& component(std::int64_t n) const;
  /// Restriction to a divisor-closed subset (components are reindexed).
  WittVector truncate(const TruncationSet& smaller) const;
  /// Componentwise coefficient-ring change via convert_element.
  WittVector with_ring(const RingDescriptor& target) const;

  friend bool operator==(const WittVector& a, const WittVector& b);
  friend bool operator!=(const WittVector& a, const WittVector& b) { return !(a == b); }

  std::string str() const;  // "[2,-1,-4]"
  nlohmann::json to_json() const;

 private:
  TruncationSet trunc_;
  RingDescriptor ring_;
  std::vector<RingElement> components_;
};

/// Same shape as a Witt vector, holding ghost components.
class GhostVector {
 public:
  GhostVector(TruncationSet trunc, RingDescriptor ring, std::vector<RingElement> entries);
  const TruncationSet& trunc() const { return trunc_; }
  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& entries() const { return entries_; }
  const RingElement& entry(std::int64_t n) const;
  friend bool operator==(const GhostVector& a, const GhostVector& b);
  friend bool operator!=(const GhostVector& a, const GhostVector& b) { return !(a == b); }
  std::string str() const;

 private:
  TruncationSet trunc_;
  RingDescriptor ring_;
  std::vector<RingElement> entries_;
};

/// ghost_n(a) = sum_{d|n} d * a_d^{n/d}.
GhostVector ghost(const WittVector& a);

/// Inverse of ghost over torsion-free rings:
/// w_n = (g_n - sum_{d|n, d<n} d w_d^{n/d}) / n.  IntegralityError over Z
/// when no preimage exists.
WittVector from_ghost(const GhostVector& g);

/// Universal addition/multiplication/negation polynomials over Z in the
/// variables {x_d, y_d : d in trunc}, certified integral during
/// construction and cached per truncation set.
struct StructurePolys {
  TruncationSet trunc;
  std::map<std::int64_t, MultiPoly> sum, product, negation;
};

std::shared_ptr<const StructurePolys> structure_polys(const TruncationSet& trunc);

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_pow(const WittVector& a, unsigned e);
/// Image of an integer under the unique ring map Z -> W(R).
WittVector int_to_witt(const Int& k, const TruncationSet& trunc, const RingDescriptor& ring);
/// Exact division by a nonzero integer over torsion-free rings;
/// IntegralityError when the quotient is not a Witt vector over the ring.
WittVector witt_div_int(const WittVector& a, const Int& n);

/// Teichmueller lift: component b at index 1, zero elsewhere; [a][b] = [ab].
WittVector teichmuller(const RingElement& b, const TruncationSet& trunc);

/// Frobenius polynomials for F_n on the given truncation set (integral,
/// derived by ghost inversion, cached); entry m of the result has
/// ghost_m(F_n a) = ghost_{mn}(a).
const std::vector<MultiPoly>& frobenius_polys(const TruncationSet& trunc, std::int64_t n);
WittVector frobenius(std::int64_t n, const WittVector& a);

/// Additive shift: component_m = a_{m/n} when n | m and m/n is in a's
/// truncation set, else 0.
WittVector verschiebung(std::int64_t n, const WittVector& a, const TruncationSet& target);

/// Power series with coefficients c_0..c_N, printed as
/// "1 - 2*t + t^2 + O(t^3)".
class TruncatedSeries {
 public:
  TruncatedSeries(RingDescriptor ring, std::vector<RingElement> coeffs);
  const RingDescriptor& ring() const { return ring_; }
  const std::vector<RingElement>& coeffs() const { return coeffs_; }
  std::size_t order() const { return coeffs_.size(); }  // exponent of the O() tail
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }
  std::string str() const;

 private:
  RingDescriptor ring_;
  std::vector<RingElement> coeffs_;
};

/// series_of(a) = prod_{n<=N} (1 - a_n t^n) mod t^{N+1}; requires the full
/// truncation {1..N}.  Witt addition corresponds to series multiplication.
TruncatedSeries series_of(const WittVector& a);
/// Inverse, by successive factor stripping; SeriesFormatError unless the
/// constant term is 1.
WittVector witt_of_series(const TruncatedSeries& s);

/// The W(W(R))-point with outer ghost components ghost_{p^n} = F_{p^n}(a)
/// truncated to inner length `inner`, for n < outer.  Requires a p-typical
/// vector of length >= outer + inner over a torsion-free ring; all
/// components are certified to lie in the coefficient ring.
std::vector<WittVector> artin_hasse(const WittVector& a, std::int64_t p, int outer, int inner);

std::ostream& operator<<(std::ostream& os, const WittVector& a);
std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

}  // namespace symwitt

#endif
