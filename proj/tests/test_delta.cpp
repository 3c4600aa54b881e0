// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symwitt/checks.hpp"
#include "symwitt/delta.hpp"
#include "symwitt/numbers.hpp"

using namespace symwitt;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();

RingElement zi(long v) { return RingElement::from_int(Z, v); }
}  // namespace

TEST_CASE("theta generators") {
  CHECK(theta_as_symfunc(0, 2) == SymFunc::w_n(1));
  CHECK(change_basis(theta_as_symfunc(0, 2), Basis::elementary) == SymFunc::e_n(1));
  // theta_1 = w_2 = (psi_2 - psi_1^2)/2 = -e_2 for p = 2
  CHECK(change_basis(theta_as_symfunc(1, 2), Basis::elementary) == -SymFunc::e_n(2));
  CHECK(theta_as_symfunc(2, 3) == SymFunc::w_n(9));
}

TEST_CASE("F^{o n} decomposes through the theta generators") {
  // psi_{p^2} = theta_0^{p^2} + p theta_1^p + p^2 theta_2
  for (std::int64_t p : {2, 3}) {
    unsigned pu = static_cast<unsigned>(p);
    SymFunc lhs = change_basis(SymFunc::psi_n(pu * pu), Basis::power_sum);
    SymFunc rhs = theta_as_symfunc(0, p).pow(pu * pu) +
                  theta_as_symfunc(1, p).pow(pu).scaled(Rat(p)) +
                  theta_as_symfunc(2, p).scaled(Rat(p * p));
    CHECK(lhs == change_basis(rhs, Basis::power_sum));
  }
}

TEST_CASE("lambda_p membership") {
  auto r1 = lambda_p_membership(SymFunc::psi_n(2), 2);
  CHECK(r1.member);
  CHECK(r1.certificate.str() == "theta0^2 + 2*theta1");

  CHECK(!lambda_p_membership(SymFunc::w_n(3), 2).member);

  auto r2 = lambda_p_membership(SymFunc::psi_n(4), 2);
  CHECK(r2.member);
  CHECK(r2.certificate.str() == "theta0^4 + 2*theta1^2 + 4*theta2");

  // mixed element with a non-p-power component
  CHECK(!lambda_p_membership(SymFunc::w_n(2) + SymFunc::w_n(6), 2).member);
  CHECK(lambda_p_membership(SymFunc::w_n(2) * SymFunc::w_n(4), 2).member);
}

TEST_CASE("frobenius lift validation") {
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement x = RingElement::generator(zx);
  CHECK_NOTHROW(FrobeniusLift(zx, 2, x.pow(2)));
  CHECK_NOTHROW(FrobeniusLift(zx, 2, x.pow(2) + RingElement::from_int(zx, 2) * x));
  CHECK_THROWS_AS(FrobeniusLift(zx, 2, x.pow(2) + x), IntegralityError);
  CHECK_THROWS_AS(FrobeniusLift(zx, 4, x.pow(4)), DescriptorError);  // 4 is not prime
  CHECK_THROWS_AS(FrobeniusLift(RingDescriptor::mod(4), 2), DescriptorError);
  FrobeniusLift id(Z, 2);
  CHECK(id.apply(zi(7)) == zi(7));
}

TEST_CASE("dwork action") {
  FrobeniusLift id2(Z, 2);
  CHECK(dwork_action(id2, zi(2), 3).str() == "[2,-1,-4]");
  CHECK(dwork_action(id2, zi(0), 3) == WittVector::zero(TruncationSet::p_typical(2, 3), Z));
  CHECK(dwork_action(id2, zi(1), 3) ==
        teichmuller(zi(1), TruncationSet::p_typical(2, 3)));
  // Z[x] with f: x -> x^2: the orbit of x is exactly Teichmueller
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement x = RingElement::generator(zx);
  FrobeniusLift fx(zx, 2, x.pow(2));
  CHECK(dwork_action(fx, x, 2) == teichmuller(x, TruncationSet::p_typical(2, 2)));
}

TEST_CASE("delta operator") {
  FrobeniusLift id2(Z, 2);
  CHECK(delta_op(id2, zi(3)) == zi(-3));  // (3 - 9)/2
  CHECK(delta_op(id2, zi(0)).is_zero());
  CHECK(delta_op(id2, zi(1)).is_zero());
  // delta(r+s) - delta(r) - delta(s) = -sum_{i=1}^{p-1} (1/p) binom(p,i) r^i s^{p-i}
  FrobeniusLift id3(Z, 3);
  for (long r = -3; r <= 3; ++r)
    for (long s = -2; s <= 2; ++s) {
      RingElement lhs = delta_op(id3, zi(r + s)) - delta_op(id3, zi(r)) - delta_op(id3, zi(s));
      RingElement rhs = RingElement::zero(Z);
      for (unsigned i = 1; i < 3; ++i)
        rhs = rhs - RingElement::from_int(Z, binomial(Int(3), i) / 3) * zi(r).pow(i) *
                        zi(s).pow(3 - i);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("newton's recursion for lambda operations") {
  // constant Adams values give the binomial lambda-structure
  for (long m : {-10L, -3L, 0L, 3L, 10L}) {
    std::vector<RingElement> psi(6, zi(m));
    auto lambda = lambda_from_adams(psi);
    for (unsigned n = 1; n <= 6; ++n) CHECK(lambda[n - 1].int_value() == binomial(Int(m), n));
  }
  // m = 3, N = 2: lambda = (3, 3)
  auto l = lambda_from_adams(std::vector<RingElement>{zi(3), zi(3)});
  CHECK(l == std::vector<RingElement>({zi(3), zi(3)}));
  // division failure over Z is reported
  CHECK_THROWS_AS(lambda_from_adams(std::vector<RingElement>{zi(1), zi(2)}), IntegralityError);
  // symbolic: lambda_2 = (psi1^2 - psi2)/2 over Q
  std::vector<MultiPoly> psi{parse_poly(Q, "psi1"), parse_poly(Q, "psi2")};
  auto sym = lambda_from_adams(psi);
  CHECK(sym[0] == parse_poly(Q, "psi1"));
  CHECK(sym[1] == parse_poly(Q, "1/2*psi1^2 - 1/2*psi2"));
}

TEST_CASE("linearization report") {
  for (std::int64_t p : {2, 3}) {
    auto items = linearization_report(p);
    REQUIRE(items.size() == 6);
    for (const auto& item : items) {
      INFO(item.check, " @ p=", p, ": ", item.witness);
      CHECK(item.pass);
    }
  }
  // cotangent_reduce(psi_p) = p * theta_1, stated directly
  for (std::int64_t p : {2, 3, 5}) {
    SymFunc lin = cotangent_reduce(change_basis(SymFunc::psi_n(static_cast<unsigned>(p)),
                                                Basis::witt));
    CHECK(lin == theta_as_symfunc(1, p).scaled(Rat(p)));
  }
  // linear part of theta_1 o theta_1 is theta_2
  for (std::int64_t p : {2, 3}) {
    SymFunc sq = plethysm(theta_as_symfunc(1, p), theta_as_symfunc(1, p));
    CHECK(cotangent_reduce(change_basis(sq, Basis::witt)) == theta_as_symfunc(2, p));
  }
}

TEST_CASE("module invariant suite") {
  for (const auto& r : run_check_suite("deltaplet")) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
