// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#include "symwitt/delta.hpp"

#include <sstream>

#include "symwitt/numbers.hpp"

namespace symwitt {

namespace {
const RingDescriptor kZ = RingDescriptor::integers();
}

// ---------------------------------------------------------------------------
// FrobeniusLift

FrobeniusLift::FrobeniusLift(RingDescriptor ring, std::int64_t p)
    : ring_(std::move(ring)), p_(p) {
  if (!is_prime(p)) throw DescriptorError("p = " + std::to_string(p) + " is not prime");
  if (!ring_.is_torsion_free())
    throw DescriptorError("Frobenius lifts need a torsion-free ring, got " + ring_.name());
  if (ring_.is_poly())
    throw DescriptorError("a lift over " + ring_.name() + " must specify the generator image");
  // over Z (or Q) the identity endomorphism: x == x^p mod p holds by Fermat
}

FrobeniusLift::FrobeniusLift(RingDescriptor ring, std::int64_t p, RingElement gen_image)
    : ring_(std::move(ring)), p_(p), gen_image_(std::move(gen_image)) {
  if (!is_prime(p)) throw DescriptorError("p = " + std::to_string(p) + " is not prime");
  if (!ring_.is_torsion_free())
    throw DescriptorError("Frobenius lifts need a torsion-free ring, got " + ring_.name());
  if (!ring_.is_poly())
    throw DescriptorError("generator image given, but " + ring_.name() + " has no generator");
  if (gen_image_->ring() != ring_) throw DescriptorError("generator image ring mismatch");
  RingElement x = RingElement::generator(ring_);
  RingElement diff = *gen_image_ - x.pow(static_cast<std::uint64_t>(p));
  try {
    diff.exact_div_int(p);
  } catch (const IntegralityError&) {
    throw IntegralityError("f(" + ring_.variable() + ") = " + gen_image_->str() +
                               " is not congruent to " + ring_.variable() + "^" +
                               std::to_string(p) + " mod " + std::to_string(p),
                           gen_image_->str());
  }
}

RingElement FrobeniusLift::apply(const RingElement& r) const {
  if (r.ring() != ring_) throw DescriptorError("element not in " + ring_.name());
  if (!gen_image_) return r;
  return r.substitute(*gen_image_);
}

// ---------------------------------------------------------------------------
// Dwork action and delta

WittVector dwork_action(const FrobeniusLift& lift, const RingElement& r, int len) {
  if (len < 1) throw DescriptorError("dwork_action needs length >= 1");
  std::vector<RingElement> entries;
  entries.reserve(static_cast<std::size_t>(len));
  RingElement cur = r;
  for (int i = 0; i < len; ++i) {
    entries.push_back(cur);
    if (i + 1 < len) cur = lift.apply(cur);
  }
  TruncationSet trunc = TruncationSet::p_typical(lift.prime(), len);
  try {
    return from_ghost(GhostVector(trunc, lift.ring(), std::move(entries)));
  } catch (const IntegralityError& e) {
    throw IntegralityError(
        "Frobenius-lift congruence fails along the orbit of " + r.str() + ": " + e.what(),
        e.term());
  }
}

RingElement delta_op(const FrobeniusLift& lift, const RingElement& r) {
  RingElement num = lift.apply(r) - r.pow(static_cast<std::uint64_t>(lift.prime()));
  try {
    return num.exact_div_int(lift.prime());
  } catch (const IntegralityError&) {
    throw IntegralityError("(f(r) - r^p)/p is not in " + lift.ring().name() + " for r = " + r.str(),
                           r.str());
  }
}

// ---------------------------------------------------------------------------
// Newton's recursion

namespace {

template <class V>
std::vector<V> lambda_recursion(const std::vector<V>& psi, const V& one) {
  std::vector<V> lambda;
  lambda.push_back(one);  // lambda_0 = 1
  for (std::size_t n = 1; n <= psi.size(); ++n) {
    V acc = psi[0] * lambda[n - 1];  // i = 1 term
    for (std::size_t i = 2; i <= n; ++i) {
      V term = psi[i - 1] * lambda[n - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    lambda.push_back(acc.exact_div_int(Int(n)));
  }
  lambda.erase(lambda.begin());
  return lambda;
}

}  // namespace

std::vector<RingElement> lambda_from_adams(const std::vector<RingElement>& psi) {
  if (psi.empty()) return {};
  return lambda_recursion(psi, RingElement::one(psi.front().ring()));
}

std::vector<MultiPoly> lambda_from_adams(const std::vector<MultiPoly>& psi) {
  if (psi.empty()) return {};
  return lambda_recursion(psi, MultiPoly::constant(psi.front().ring(), 1));
}

// ---------------------------------------------------------------------------
// Lambda_p

SymFunc theta_as_symfunc(unsigned n, std::int64_t p) {
  if (!is_prime(p)) throw DescriptorError("p = " + std::to_string(p) + " is not prime");
  Int q = pow_int(Int(p), n);
  return SymFunc::w_n(static_cast<unsigned>(q));
}

MembershipResult lambda_p_membership(const SymFunc& f, std::int64_t p) {
  if (!f.is_integral()) throw DescriptorError("membership test expects an integral input");
  SymFunc in_w = change_basis(f, Basis::witt);
  MultiPoly cert(kZ);
  for (const auto& [lambda, c] : in_w.terms()) {
    Monomial mono;
    for (unsigned part : lambda.parts()) {
      // part must be p^k for some k
      std::int64_t rest = static_cast<std::int64_t>(part);
      unsigned k = 0;
      while (rest % p == 0) {
        rest /= p;
        ++k;
      }
      if (rest != 1) return MembershipResult{false, MultiPoly(kZ)};
      mono = mono * Monomial::variable("theta" + std::to_string(k));
    }
    cert = cert + MultiPoly::from_terms(
                      kZ, {{mono, RingElement::from_rat(kZ, c)}});
  }
  return MembershipResult{true, cert};
}

// ---------------------------------------------------------------------------
// Linearization report

std::vector<CheckItem> linearization_report(std::int64_t p) {
  if (!is_prime(p) || p > 5) throw DescriptorError("linearization report expects p in {2,3,5}");
  std::vector<CheckItem> items;
  unsigned pu = static_cast<unsigned>(p);
  SymFunc F = SymFunc::psi_n(pu);

  items.push_back({"F_additive", is_additive(F), "Delta+(psi_" + std::to_string(p) + ")"});

  {
    MultiPoly lhs = comultiplication_image(F, pu);
    MultiPoly rhs = expand(F, pu, "x") * expand(F, pu, "y");
    items.push_back({"F_ring_like", lhs == rhs,
                     "Deltax(psi_" + std::to_string(p) + ") vs psi(x)*psi(y)"});
  }

  {
    SymFunc lin = cotangent_reduce(change_basis(F, Basis::witt));
    SymFunc expected = theta_as_symfunc(1, p).scaled(Rat(p));
    items.push_back({"cotangent_F", lin == expected,
                     "linear part " + lin.str() + ", expected " + expected.str()});
  }

  SymFunc theta1 = theta_as_symfunc(1, p);
  SymFunc power = theta1;
  for (unsigned n = 1; n <= 3; ++n) {
    if (n > 1) power = plethysm(theta1, power);
    SymFunc lin = cotangent_reduce(change_basis(power, Basis::witt));
    SymFunc expected = theta_as_symfunc(n, p);
    items.push_back({"theta_power_" + std::to_string(n), lin == expected,
                     "linear part " + lin.str() + ", expected " + expected.str()});
  }
  return items;
}

}  // namespace symwitt
