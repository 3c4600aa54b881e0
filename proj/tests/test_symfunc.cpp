// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/oracles.hpp"
#include "symwitt/checks.hpp"
#include "symwitt/symfunc.hpp"

using namespace symwitt;

namespace {
const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor Q = RingDescriptor::rationals();

MultiPoly P(const char* text) { return parse_poly(Z, text); }
}  // namespace

TEST_CASE("expansion into finitely many variables") {
  CHECK(expand(SymFunc::e_n(2), 3) == P("x1*x2 + x1*x3 + x2*x3"));
  CHECK(expand(SymFunc::psi_n(2), 2) == P("x1^2 + x2^2"));
  // ghost-inversion oracle at n = 2: w_2 = (psi_2 - psi_1^2)/2
  MultiPoly w2_oracle =
      (expand(SymFunc::psi_n(2), 2) - expand(SymFunc::psi_n(1), 2).pow(2)).exact_div_int(2);
  CHECK(w2_oracle == P("-x1*x2"));
  CHECK(expand(SymFunc::w_n(2), 2) == w2_oracle);
  // monomial orbits die when there are more parts than variables
  CHECK(expand(SymFunc::generator(Basis::monomial, Partition({1, 1, 1})), 2).is_zero());
  // expansion is multiplicative
  SymFunc f = SymFunc::e_n(2) * SymFunc::e_n(1);
  CHECK(expand(f, 3) == expand(SymFunc::e_n(2), 3) * expand(SymFunc::e_n(1), 3));
}

TEST_CASE("from_polynomial recovers the monomial basis") {
  CHECK(from_polynomial(P("x1 + x2 + x3"), 3) ==
        SymFunc::generator(Basis::monomial, Partition({1})));
  // the full orbit of x1^2 x2^2 in four variables
  MultiPoly orbit = expand(SymFunc::generator(Basis::monomial, Partition({2, 2})), 4);
  CHECK(from_polynomial(orbit, 4) == SymFunc::generator(Basis::monomial, Partition({2, 2})));
  // x1^2 + x2^2 - (x1+x2)^2 = -2 m_{1,1}
  MultiPoly g = P("x1^2 + x2^2") - P("x1 + x2").pow(2);
  CHECK(from_polynomial(g, 2) ==
        SymFunc::generator(Basis::monomial, Partition({1, 1})).scaled(Rat(-2)));
  CHECK_THROWS_AS(from_polynomial(P("x1 + 2*x2"), 2), SymmetryError);
  CHECK_THROWS_AS(from_polynomial(P("x1*x2*x3"), 2), SymmetryError);  // foreign variable
  CHECK_THROWS_AS(from_polynomial(P("x1^3*x2^3"), 2), PrecisionError);
  // round trip against expand for every basis
  for (Basis b : {Basis::monomial, Basis::elementary, Basis::power_sum, Basis::witt}) {
    SymFunc f = SymFunc::generator(b, Partition({2, 1}));
    SymFunc m = from_polynomial(expand(f, 3), 3);
    CHECK(expand(m, 3) == expand(f, 3));
  }
}

TEST_CASE("base change") {
  // Newton / equ-witt goldens, cross-checked by expansion
  SymFunc psi2_e = change_basis(SymFunc::psi_n(2), Basis::elementary);
  CHECK(psi2_e == SymFunc::e_n(1).pow(2) - SymFunc::e_n(2).scaled(Rat(2)));
  CHECK(psi2_e.str() == "e[1]^2 - 2*e[2]");
  CHECK(expand(psi2_e, 4) == expand(SymFunc::psi_n(2), 4));

  SymFunc psi2_w = change_basis(SymFunc::psi_n(2), Basis::witt);
  CHECK(psi2_w == SymFunc::w_n(1).pow(2) + SymFunc::w_n(2).scaled(Rat(2)));
  CHECK(psi2_w.str() == "w[1]^2 + 2*w[2]");

  SymFunc e1_p = change_basis(SymFunc::e_n(1), Basis::power_sum);
  CHECK(e1_p.ring() == Q);  // the p-basis target forces Q
  CHECK(e1_p.terms().size() == 1);
  CHECK(e1_p.coefficient(Partition({1})) == 1);

  // equ-witt at every n <= 8: psi_n = sum_{d|n} d w_d^{n/d}
  for (unsigned n = 1; n <= 8; ++n) {
    SymFunc expected = SymFunc::zero(Basis::witt);
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d) continue;
      expected = expected + SymFunc::w_n(d).pow(n / d).scaled(Rat(d));
    }
    CHECK(change_basis(SymFunc::psi_n(n), Basis::witt) == expected);
  }

  // integral round trips keep the Z tag
  SymFunc f = SymFunc::e_n(3) * SymFunc::e_n(1) - SymFunc::e_n(4).scaled(Rat(5));
  SymFunc back = change_basis(change_basis(f, Basis::witt), Basis::elementary);
  CHECK(back == f);
  CHECK(back.ring() == Z);

  CHECK_THROWS_AS(with_coeff_ring(change_basis(SymFunc::psi_n(2), Basis::power_sum).scaled(Rat(1, 2)), Z),
                  IntegralityError);
}

TEST_CASE("plethysm") {
  // Adams composition
  CHECK(change_basis(plethysm(SymFunc::psi_n(2), SymFunc::psi_n(3)), Basis::power_sum) ==
        change_basis(SymFunc::psi_n(6), Basis::power_sum));
  // identity element e = x1 + x2 + ...
  SymFunc e = SymFunc::plethysm_identity();
  SymFunc f = SymFunc::e_n(2) * SymFunc::e_n(1) + SymFunc::e_n(3).scaled(Rat(2));
  CHECK(plethysm(f, e) == f);
  CHECK(plethysm(e, change_basis(f, Basis::power_sum)) == change_basis(f, Basis::power_sum));
  // golden value, frozen after the monomial-substitution oracle confirmed it
  SymFunc got = plethysm(SymFunc::psi_n(2), SymFunc::e_n(2));
  SymFunc expected = change_basis(SymFunc::e_n(2).pow(2) - (SymFunc::e_n(1) * SymFunc::e_n(3)).scaled(Rat(2)) +
                                      SymFunc::e_n(4).scaled(Rat(2)),
                                  Basis::power_sum);
  CHECK(change_basis(got, Basis::power_sum) == expected);
  // the oracle itself, in >= 4 variables
  SymFunc psi2_e = change_basis(SymFunc::psi_n(2), Basis::elementary);
  MultiPoly oracle = testing::plethysm_oracle_expand(psi2_e, SymFunc::e_n(2), 4);
  CHECK(expand(got, 4) == oracle);
  // constants: f o c evaluates the Adams values at c, c o g = c
  SymFunc three = SymFunc::constant(Basis::power_sum, 3);
  CHECK(change_basis(plethysm(three, f), Basis::power_sum) == change_basis(three, Basis::power_sum));
  CHECK(plethysm(f, SymFunc::zero(Basis::power_sum)) ==
        SymFunc::constant(Basis::elementary, counit_plus(f)));
}

TEST_CASE("plethysm matches the monomial-substitution oracle on random pairs") {
  std::mt19937_64 rng(7);
  auto rand_part = [&](unsigned maxw) {
    auto all = partitions_of(1 + rng() % maxw);
    return all[rng() % all.size()];
  };
  for (int i = 0; i < 8; ++i) {
    unsigned df = 1 + rng() % 3, dg = 1 + rng() % 3;
    SymFunc f = SymFunc::zero(Basis::elementary);
    SymFunc g = SymFunc::zero(Basis::elementary);
    for (int t = 0; t < 2; ++t) {
      f = f + SymFunc::generator(Basis::elementary, rand_part(df))
                  .scaled(Rat(1 + static_cast<int>(rng() % 3)));
      g = g + SymFunc::generator(Basis::elementary, rand_part(dg))
                  .scaled(Rat(1 + static_cast<int>(rng() % 3)));
    }
    unsigned nvars = f.degree() * g.degree();
    if (nvars == 0 || nvars > 9) continue;
    CHECK(expand(plethysm(f, g), nvars) == testing::plethysm_oracle_expand(f, g, nvars));
  }
}

TEST_CASE("coaddition") {
  for (unsigned n : {1u, 2u, 5u}) {
    MultiPoly lhs = coaddition_image(SymFunc::psi_n(n), n);
    MultiPoly rhs = expand(SymFunc::psi_n(n), n, "x") + expand(SymFunc::psi_n(n), n, "y");
    CHECK(lhs == rhs);  // power sums split over disjoint unions
  }
  // e_2 -> e_2(x) + e_1(x) e_1(y) + e_2(y)
  MultiPoly lhs = coaddition_image(SymFunc::e_n(2), 2);
  MultiPoly rhs = expand(SymFunc::e_n(2), 2, "x") + expand(SymFunc::e_n(2), 2, "y") +
                  expand(SymFunc::e_n(1), 2, "x") * expand(SymFunc::e_n(1), 2, "y");
  CHECK(lhs == rhs);
  // oracle route: prod over the merged variable set
  MultiPoly direct = expand(SymFunc::e_n(2), {"x1", "x2", "y1", "y2"});
  CHECK(lhs == direct);
  CHECK_THROWS_AS(coaddition_image(SymFunc::e_n(3), 2), PrecisionError);
}

TEST_CASE("comultiplication") {
  // ring-like on power sums
  for (unsigned n : {1u, 2u, 3u}) {
    MultiPoly lhs = comultiplication_image(SymFunc::psi_n(n), n);
    CHECK(lhs == expand(SymFunc::psi_n(n), n, "x") * expand(SymFunc::psi_n(n), n, "y"));
  }
  // e_2 -> e_1(x)^2 e_2(y) + e_2(x) e_1(y)^2 - 2 e_2(x) e_2(y)
  MultiPoly e1x = expand(SymFunc::e_n(1), 2, "x"), e1y = expand(SymFunc::e_n(1), 2, "y");
  MultiPoly e2x = expand(SymFunc::e_n(2), 2, "x"), e2y = expand(SymFunc::e_n(2), 2, "y");
  MultiPoly expected = e1x.pow(2) * e2y + e2x * e1y.pow(2) - e2x * e2y * RingElement::from_int(Z, 2);
  CHECK(comultiplication_image(SymFunc::e_n(2), 2) == expected);
}

TEST_CASE("counits") {
  CHECK(counit_plus(SymFunc::e_n(2)) == 0);
  CHECK(counit_plus(SymFunc::constant(Basis::elementary, 1) + SymFunc::e_n(1)) == 1);
  CHECK(counit_times(SymFunc::e_n(1)) == 1);
  for (unsigned n = 2; n <= 5; ++n) CHECK(counit_times(SymFunc::e_n(n)) == 0);
  for (unsigned n = 1; n <= 6; ++n) CHECK(counit_times(SymFunc::psi_n(n)) == 1);
  CHECK(counit_times(SymFunc::w_n(3)) == 0);
}

TEST_CASE("additive elements") {
  CHECK(is_additive(SymFunc::psi_n(6)));
  CHECK(!is_additive(SymFunc::e_n(2)));  // cross term e1(x) e1(y)
  CHECK(is_additive(SymFunc::zero(Basis::power_sum)));
  CHECK(is_additive(SymFunc::psi_n(1).scaled(Rat(5, 2))));
  CHECK(!is_additive(SymFunc::constant(Basis::power_sum, 1)));
  CHECK(!is_additive(SymFunc::psi_n(2) * SymFunc::psi_n(1)));
}

TEST_CASE("cotangent reduction") {
  SymFunc psi2_w = change_basis(SymFunc::psi_n(2), Basis::witt);  // w1^2 + 2 w2
  CHECK(cotangent_reduce(psi2_w) == SymFunc::w_n(2).scaled(Rat(2)));
  CHECK(cotangent_reduce(SymFunc::w_n(3)) == SymFunc::w_n(3));
  CHECK_THROWS_AS(cotangent_reduce(SymFunc::constant(Basis::witt, 1) + SymFunc::w_n(1)),
                  NotAugmentedError);
  CHECK_THROWS_AS(cotangent_reduce(change_basis(SymFunc::e_n(2), Basis::monomial)),
                  DescriptorError);
}

TEST_CASE("display order is stable") {
  SymFunc f = SymFunc::e_n(4).scaled(Rat(2)) -
              (SymFunc::e_n(1) * SymFunc::e_n(3)).scaled(Rat(2)) + SymFunc::e_n(2).pow(2);
  CHECK(f.str() == "e[2]^2 - 2*e[1]*e[3] + 2*e[4]");
  SymFunc g = SymFunc::generator(Basis::monomial, Partition({2, 1})).scaled(Rat(1, 2));
  CHECK(g.str() == "1/2*m[2,1]");
  CHECK(SymFunc::zero(Basis::witt).str() == "0");
}

TEST_CASE("module invariant suite") {
  for (const auto& r : run_check_suite("symfunc")) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
