#include <doctest.h>

#include "tburau/errors.hpp"
#include "tburau/selftest.hpp"
#include "tburau/torsion.hpp"

using namespace tburau;

TEST_CASE("closure Fox matrix") {
  Representation trivial = Representation::trivial(2, 1);
  RegistryPtr reg = trivial.registry();
  ColoredBraidWord id = ColoredBraidWord::identity({1, 1});
  CHECK(is_zero_matrix(closure_fox_matrix(trivial, id)));

  ColoredBraidWord s1 = parse_braid("s1", {1, 1});
  RingMatrix m = closure_fox_matrix(trivial, s1);
  RingMatrix expected(2, 2);
  expected << parse_poly("-t", reg), parse_poly("t", reg), parse_poly("1", reg),
      parse_poly("-1", reg);
  CHECK(mat_equal(m, expected));

  CHECK_THROWS_AS(closure_fox_matrix(trivial, parse_braid("s1", {1, 2})), std::invalid_argument);
}

TEST_CASE("wada invariant of the trefoil closure") {
  Representation rho = selftest::trefoil_representation();
  RegistryPtr reg = rho.registry();
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  TorsionResult t = wada_invariant(rho, braid, 2, 2);
  REQUIRE(t.normalized);
  CHECK(*t.normalized == parse_poly("1 - s*t^2", reg));
  CHECK(!t.zero);
  CHECK(t.route == "wada");
  std::vector<LaurentPoly> gens = rho.image_determinants();
  CHECK(equal_up_to_units(t.value.numerator, parse_poly("1 - s*t^2", reg) * t.value.denominator,
                          gens));
}

TEST_CASE("wada invariant rejects non-extendable input") {
  Representation rho = selftest::trefoil_representation();
  ColoredBraidWord s1 = parse_braid("s1", {1, 1});
  CHECK_THROWS_AS(wada_invariant(rho, s1, 2, 2), NonExtendableError);
  try {
    wada_invariant(rho, s1, 2, 2);
  } catch (const NonExtendableError& e) {
    CHECK(e.failing_generators() == std::vector<int>{1, 2});
  }
  CHECK_THROWS_AS(wada_invariant(rho, parse_braid("s1^3", {1, 1}), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(wada_invariant(rho, parse_braid("s1^3", {1, 1}), 2, 3), std::invalid_argument);
}

TEST_CASE("wada invariant of the Hopf link") {
  Representation trivial = Representation::trivial(2, 2);
  RegistryPtr reg = trivial.registry();
  ColoredBraidWord braid = parse_braid("s1 s1", {1, 2});
  TorsionResult t = wada_invariant(trivial, braid, 2, 2);
  REQUIRE(t.exact_quotient);
  CHECK(*t.exact_quotient == parse_poly("t1", reg));
  REQUIRE(t.normalized);
  CHECK(t.normalized->is_one());
}

TEST_CASE("unknot degenerate case") {
  Representation trivial = Representation::trivial(1, 1);
  RegistryPtr reg = trivial.registry();
  ColoredBraidWord empty = parse_braid("", {1});
  TorsionResult wada = wada_invariant(trivial, empty, 1, 1);
  CHECK(wada.value.numerator.is_one());
  CHECK(wada.value.denominator == parse_poly("t - 1", reg));
  TorsionResult burau = torsion_from_burau(trivial, empty);
  CHECK(burau.value.numerator.is_one());
  CHECK(burau.value.denominator == parse_poly("t - 1", reg));
}

TEST_CASE("torsion from the reduced matrix on the trefoil") {
  Representation rho = selftest::trefoil_representation();
  RegistryPtr reg = rho.registry();
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  TorsionResult t = torsion_from_burau(rho, braid);
  CHECK(t.value.numerator == parse_poly("1 - s^3*t^6", reg));
  CHECK(t.value.denominator == parse_poly("1 + s*t^2 + s^2*t^4", reg));
  REQUIRE(t.exact_quotient);
  CHECK(*t.exact_quotient == parse_poly("1 - s*t^2", reg));
  REQUIRE(t.normalized);
  CHECK(*t.normalized == parse_poly("1 - s*t^2", reg));
}

TEST_CASE("reduced-route torsion for trivial representations") {
  // One color: the single-variable torsion against the classical formula.
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  Representation trivial = Representation::trivial(2, 1);
  RegistryPtr reg = trivial.registry();
  TorsionResult t = torsion_from_burau(trivial, braid);
  CHECK(t.value.denominator == parse_poly("t^2 - 1", reg));
  CHECK(t.value.numerator == parse_poly("-1 - t^3", reg));

  // Two colors: the Hopf link torsion is 1.
  Representation trivial2 = Representation::trivial(2, 2);
  TorsionResult hopf = torsion_from_burau(trivial2, parse_braid("s1 s1", {1, 2}));
  RegistryPtr reg2 = trivial2.registry();
  CHECK(hopf.value.numerator == parse_poly("t1*t2 - 1", reg2));
  CHECK(hopf.value.denominator == parse_poly("t1*t2 - 1", reg2));
  REQUIRE(hopf.normalized);
  CHECK(hopf.normalized->is_one());
}

TEST_CASE("verification report on the trefoil") {
  Representation rho = selftest::trefoil_representation();
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  VerificationReport report = verify_main_theorem(rho, braid);
  CHECK(report.applicable);
  CHECK(report.pass);
  CHECK(report.verdict() == "pass");
  REQUIRE(report.witness);
  // The witness multiplies the right side onto the left side exactly.
  LaurentPoly lhs_cross = report.lhs.numerator * report.rhs.denominator;
  LaurentPoly rhs_cross = report.rhs.numerator * report.lhs.denominator;
  CHECK(rhs_cross.scaled(report.witness->monomial, Int(report.witness->sign)) == lhs_cross);
  CHECK(report.unit_group.size() == 2);
}

TEST_CASE("verification is reported not applicable when rho does not extend") {
  Representation rho = selftest::trefoil_representation();
  VerificationReport report = verify_main_theorem(rho, parse_braid("s1", {1, 1}));
  CHECK(!report.applicable);
  CHECK(report.verdict() == "not applicable");
  CHECK(report.failing_generators == std::vector<int>{1, 2});

  VerificationReport colors = verify_main_theorem(Representation::trivial(2, 2),
                                                  parse_braid("s1", {1, 2}));
  CHECK(!colors.applicable);
  CHECK(!colors.colors_preserved);
}

TEST_CASE("untwisted alexander polynomials") {
  RegistryPtr reg = color_registry(1);
  TorsionResult trefoil = alexander_untwisted(parse_braid("s1^3", {1, 1}));
  REQUIRE(trefoil.normalized);
  CHECK(*trefoil.normalized == parse_poly("1 - t + t^2", reg));

  TorsionResult fig8 = alexander_untwisted(parse_braid("s1 s2^-1 s1 s2^-1", {1, 1, 1}));
  REQUIRE(fig8.normalized);
  CHECK(*fig8.normalized == parse_poly("1 - 3*t + t^2", reg));

  TorsionResult unknot = alexander_untwisted(parse_braid("", {1}));
  REQUIRE(unknot.normalized);
  CHECK(unknot.normalized->is_one());

  RegistryPtr reg2 = color_registry(2);
  TorsionResult hopf = alexander_untwisted(parse_braid("s1 s1", {1, 2}));
  REQUIRE(hopf.normalized);
  CHECK(hopf.normalized->is_one());
}

TEST_CASE("wada choices agree on the trefoil") {
  Representation rho = selftest::trefoil_representation();
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  std::vector<LaurentPoly> gens = rho.image_determinants();
  TorsionResult base = wada_invariant(rho, braid, 2, 2);
  for (int r = 1; r <= 2; ++r)
    for (int j = 1; j <= 2; ++j)
      CHECK(rat_equal_up_to_units(base.value, wada_invariant(rho, braid, r, j).value, gens));
}

TEST_CASE("conjugated braids have the same torsion") {
  // Stabilized trefoil: the closure of s1^3 s2 in B_3 is again the trefoil.
  ColoredBraidWord beta = parse_braid("s1^3 s2", {1, 1, 1});
  ColoredBraidWord gamma = parse_braid("s2 s1^-1", {1, 1, 1});
  ColoredBraidWord conjugated = gamma * beta * gamma.inverse();
  Representation trivial = Representation::trivial(3, 1);
  TorsionResult a = torsion_from_burau(trivial, conjugated);
  TorsionResult b = torsion_from_burau(trivial, beta);
  CHECK(!b.zero);
  CHECK(rat_equal_up_to_units(a.value, b.value));
  // And it matches the torsion computed from the 2-strand presentation.
  TorsionResult direct = torsion_from_burau(Representation::trivial(2, 1),
                                            parse_braid("s1^3", {1, 1}));
  CHECK(rat_equal_up_to_units(b.value, direct.value));
}

TEST_CASE("verification on six strands crosses the elimination-determinant path") {
  // (n-1)k = 10 here, so both torsion determinants go through Bareiss
  // elimination rather than cofactor expansion.
  selftest::Rng rng(7);
  ColoredBraidWord braid = parse_braid("s1^3 s3 s2^-1 s3 s5^2 s4 s4", {1, 1, 1, 1, 1, 1});
  REQUIRE(preserves_colors(braid));
  Representation rho = selftest::random_commuting_representation(rng, braid, 2);
  REQUIRE(rho.dim() == 2);
  REQUIRE(extends_to_closure(rho, braid).extends);
  VerificationReport report = verify_main_theorem(rho, braid);
  CHECK(report.pass);
  CHECK(verify_main_theorem(Representation::trivial(6, 1), braid).pass);
}

TEST_CASE("split closures have vanishing torsion") {
  // The closure of s1^3 in B_3 is a trefoil plus a disjoint unknot.
  TorsionResult t = torsion_from_burau(Representation::trivial(3, 1),
                                       parse_braid("s1^3", {1, 1, 1}));
  CHECK(t.zero);
  CHECK(t.value.numerator.is_zero());
}
