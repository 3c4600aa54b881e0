// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMWITT_PARTITION_HPP
#define SYMWITT_PARTITION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symwitt/errors.hpp"

namespace symwitt {

/// Integer partition: weakly decreasing positive parts.  The empty
/// partition (weight 0) is allowed.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into weakly decreasing order; zero parts rejected.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Multiset union, re-sorted.
  Partition union_with(const Partition& other) const;
  /// Each part multiplied by k >= 1.
  Partition scaled(unsigned k) const;
  /// (multiplicity of each distinct part), largest part first.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Lexicographic on the part vectors (used inside the display order).
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  std::string str() const;  // "[3,1,1]"
  static Partition parse(std::string_view text);

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of n in reverse-lexicographic order, e.g.
/// 4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
std::vector<Partition> partitions_of(unsigned n);

/// Partitions of n using only parts from the given set.
std::vector<Partition> partitions_with_parts(unsigned n, const std::vector<unsigned>& parts);

/// Term order for symmetric-function displays: weight ascending, then
/// lexicographic on parts within a weight (so [1,1] prints before [2]).
struct PartitionTermLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  }
};

}  // namespace symwitt

#endif
