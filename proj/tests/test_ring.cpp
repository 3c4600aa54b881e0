// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symwitt/ring.hpp"

using namespace symwitt;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();

RingElement zi(long v) { return RingElement::from_int(Z, v); }
}  // namespace

TEST_CASE("descriptor construction and names") {
  CHECK(Z.name() == "Z");
  CHECK(Q.name() == "Q");
  CHECK(RingDescriptor::mod(6).name() == "Z/6");
  CHECK(RingDescriptor::poly(Z, "x").name() == "Z[x]");
  CHECK(RingDescriptor::poly(Q, "t").name() == "Q[t]");
  CHECK_THROWS_AS(RingDescriptor::mod(1), DescriptorError);
  RingDescriptor zxy = RingDescriptor::poly(RingDescriptor::poly(Z, "a"), "b");
  CHECK_THROWS_AS(RingDescriptor::poly(zxy, "c"), DescriptorError);
  CHECK(parse_ring("Z/17") == RingDescriptor::mod(17));
  CHECK(parse_ring("Q[x]") == RingDescriptor::poly(Q, "x"));
  CHECK(Z.fraction_field() == Q);
  CHECK(RingDescriptor::poly(Z, "x").fraction_field() == RingDescriptor::poly(Q, "x"));
  CHECK_THROWS_AS(RingDescriptor::mod(4).fraction_field(), DescriptorError);
}

TEST_CASE("canonical forms") {
  RingDescriptor z6 = RingDescriptor::mod(6);
  CHECK(RingElement::from_int(z6, -1).int_value() == 5);
  CHECK(RingElement::from_int(z6, 13).int_value() == 1);
  CHECK(RingElement::from_rat(Q, Rat(4, 6)).str() == "2/3");
  // polynomial trailing zeros are trimmed
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement p = RingElement::from_coeffs(zx, {zi(1), zi(0), zi(0)});
  CHECK(p == RingElement::one(zx));
}

TEST_CASE("arithmetic and powers") {
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement x = RingElement::generator(zx);
  RingElement one = RingElement::one(zx);
  CHECK((x + one) * (x - one) == x * x - one);
  CHECK((x + one).pow(2) == x * x + RingElement::from_int(zx, 2) * x + one);
  CHECK(zi(5).pow(0) == zi(1));
  RingDescriptor z2 = RingDescriptor::mod(2);
  RingElement a = RingElement::from_int(z2, 1);
  CHECK((a + a).is_zero());
  CHECK_THROWS_AS(zi(1) + RingElement::from_int(z2, 1), DescriptorError);
}

TEST_CASE("exact division by integers") {
  CHECK(zi(6).exact_div_int(2) == zi(3));
  CHECK(zi(6).exact_div_int(-3) == zi(-2));
  CHECK_THROWS_AS(zi(3).exact_div_int(2), IntegralityError);
  CHECK(RingElement::from_rat(Q, Rat(3)).exact_div_int(2) == RingElement::from_rat(Q, Rat(3, 2)));
  // Z/6: 2*g = 4 has the solution g = 2
  RingDescriptor z6 = RingDescriptor::mod(6);
  RingElement g = RingElement::from_int(z6, 4).exact_div_int(2);
  CHECK(RingElement::from_int(z6, 2) * g == RingElement::from_int(z6, 4));
  CHECK_THROWS_AS(RingElement::from_int(z6, 3).exact_div_int(2), IntegralityError);
  // polynomials divide coefficientwise
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement p = parse_element(zx, "2*x^2 + 4");
  CHECK(p.exact_div_int(2) == parse_element(zx, "x^2 + 2"));
  CHECK_THROWS_AS(parse_element(zx, "2*x + 1").exact_div_int(2), IntegralityError);
}

TEST_CASE("substitution") {
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingElement f = parse_element(zx, "x^2 - 2*x + 1");
  RingElement v = parse_element(zx, "x + 1");
  CHECK(f.substitute(v) == parse_element(zx, "x^2"));
  CHECK(zi(7).substitute(zi(3)) == zi(7));
}

TEST_CASE("text round trips") {
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  for (const char* s : {"x^2 - 2*x + 1", "0", "-x", "3*x^5 + x", "-7"}) {
    RingElement e = parse_element(zx, s);
    CHECK(parse_element(zx, e.str()) == e);
  }
  CHECK(parse_element(Q, "-1/2").str() == "-1/2");
  CHECK(parse_element(RingDescriptor::mod(6), "-1").str() == "5");
  RingDescriptor qx = RingDescriptor::poly(Q, "x");
  CHECK(parse_element(qx, "1/2*x - 1/3").str() == "1/2*x - 1/3");
  CHECK_THROWS_AS(parse_element(Z, "y"), SyntaxError);
}

TEST_CASE("conversions between rings") {
  CHECK(convert_element(zi(3), Q) == RingElement::from_rat(Q, Rat(3)));
  CHECK(convert_element(RingElement::from_rat(Q, Rat(3)), Z) == zi(3));
  CHECK_THROWS_AS(convert_element(RingElement::from_rat(Q, Rat(1, 2)), Z), IntegralityError);
  CHECK(convert_element(zi(8), RingDescriptor::mod(6)).int_value() == 2);
  RingDescriptor zx = RingDescriptor::poly(Z, "x");
  RingDescriptor qx = RingDescriptor::poly(Q, "x");
  RingElement p = parse_element(zx, "x + 2");
  CHECK(convert_element(convert_element(p, qx), zx) == p);
}
