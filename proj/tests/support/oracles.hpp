// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, kept independent of the library's computation paths.
//
// The plethysm oracle follows the definition directly: write g (with
// nonnegative expansion) as a multiset of coefficient-1 monomials in
// x_1..x_N and substitute those monomials into the arguments of f.  For f
// given in the e-basis this means evaluating elementary symmetric
// polynomials of the monomial multiset, which we do by the prefix-product
// recurrence e_i <- e_i + M * e_{i-1}.

#ifndef SYMWITT_TESTS_ORACLES_HPP
#define SYMWITT_TESTS_ORACLES_HPP

#include <vector>

#include "symwitt/multipoly.hpp"
#include "symwitt/symfunc.hpp"

namespace symwitt::testing {

/// The multiset of monomials of expand(g, nvars); requires nonnegative
/// integer coefficients (a coefficient c contributes c copies).
inline std::vector<Monomial> monomial_multiset(const SymFunc& g, unsigned nvars) {
  MultiPoly image = expand(g, nvars);
  std::vector<Monomial> ms;
  for (const auto& [mono, c] : image.terms()) {
    Rat r = c.as_rat();
    if (!is_integer(r) || r < 0)
      throw DescriptorError("oracle needs a nonnegative integral expansion");
    for (Int i = 0; i < rat_num(r); ++i) ms.push_back(mono);
  }
  return ms;
}

/// e_0..e_dmax of the monomial multiset, as polynomials over Z.
inline std::vector<MultiPoly> elementary_of_monomials(const std::vector<Monomial>& ms,
                                                      unsigned dmax) {
  const RingDescriptor z = RingDescriptor::integers();
  std::vector<MultiPoly> e(dmax + 1, MultiPoly(z));
  e[0] = MultiPoly::constant(z, 1);
  RingElement one = RingElement::one(z);
  for (const auto& m : ms) {
    for (unsigned k = dmax; k >= 1; --k) {
      if (e[k - 1].is_zero()) continue;
      MultiPoly shifted(z);
      MultiPoly::TermMap terms;
      for (const auto& [mono, c] : e[k - 1].terms()) terms.emplace(mono * m, c);
      e[k] = e[k] + MultiPoly::from_terms(z, std::move(terms));
    }
  }
  return e;
}

/// Expansion of f o g in nvars variables, computed by monomial
/// substitution.  f must be in the e-basis with integer coefficients; g
/// must have a nonnegative expansion.
inline MultiPoly plethysm_oracle_expand(const SymFunc& f, const SymFunc& g, unsigned nvars) {
  if (f.basis() != Basis::elementary)
    throw DescriptorError("oracle expects f in the e-basis");
  auto ms = monomial_multiset(g, nvars);
  unsigned dmax = 0;
  for (const auto& [lambda, c] : f.terms())
    if (!lambda.empty()) dmax = std::max(dmax, lambda.parts().front());
  auto e = elementary_of_monomials(ms, dmax);
  const RingDescriptor z = RingDescriptor::integers();
  MultiPoly acc(z);
  for (const auto& [lambda, c] : f.terms()) {
    MultiPoly term = MultiPoly::constant(z, RingElement::from_rat(z, c));
    for (unsigned part : lambda.parts()) term = term * e[part];
    acc = acc + term;
  }
  return acc;
}

}  // namespace symwitt::testing

#endif
