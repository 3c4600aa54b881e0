// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMWITT_ERRORS_HPP
#define SYMWITT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symwitt {

/// Base class of all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(kind) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Operands live over different rings / incompatible index sets.
class DescriptorError : public Error {
 public:
  explicit DescriptorError(const std::string& what) : Error("DescriptorError", what) {}
};

/// A substitution left a variable unbound.
class SubstitutionError : public Error {
 public:
  explicit SubstitutionError(const std::string& what) : Error("SubstitutionError", what) {}
};

/// An exact division failed over the ring.  This is a mathematical signal:
/// it falsifies an integrality claim.  `term` names the offending term.
class IntegralityError : public Error {
 public:
  IntegralityError(const std::string& what, const std::string& term)
      : Error("IntegralityError", what + " (offending term: " + term + ")"), term_(term) {}
  explicit IntegralityError(const std::string& what) : Error("IntegralityError", what) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

/// Input polynomial is not symmetric.
class SymmetryError : public Error {
 public:
  explicit SymmetryError(const std::string& what) : Error("SymmetryError", what) {}
};

/// An operation was asked to resolve more degrees / components than the
/// input determines.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error("PrecisionError", what) {}
};

/// Argument is not in the augmentation ideal (nonzero constant term).
class NotAugmentedError : public Error {
 public:
  explicit NotAugmentedError(const std::string& what) : Error("NotAugmentedError", what) {}
};

/// Power series input has the wrong shape (e.g. constant term != 1).
class SeriesFormatError : public Error {
 public:
  explicit SeriesFormatError(const std::string& what) : Error("SeriesFormatError", what) {}
};

/// Parse error, with a 1-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error("SyntaxError", what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace symwitt

#endif
