#include <doctest.h>

#include "tburau/errors.hpp"
#include "tburau/laurent.hpp"

using namespace tburau;

namespace {

RegistryPtr ts_registry() { return color_registry(1, {"s"}); }

LaurentPoly p(const std::string& text, const RegistryPtr& reg) { return parse_poly(text, reg); }

}  // namespace

TEST_CASE("monomial arithmetic and lexicographic order") {
  Monomial t = Monomial::variable(0, 1);
  Monomial s2 = Monomial::variable(1, 2);
  Monomial m = t * s2;
  CHECK(m.exponent(0) == 1);
  CHECK(m.exponent(1) == 2);
  CHECK((m * m.inverse()).is_one());
  CHECK(lex_compare(t, s2) > 0);  // variable 0 dominates
  CHECK(lex_compare(Monomial::variable(0, -1), Monomial()) < 0);
  CHECK(lex_compare(m, m) == 0);
  CHECK(Monomial::variable(1, 1).divides(s2));
  CHECK(!s2.divides(Monomial::variable(1, 1)));
}

TEST_CASE("polynomial ring operations") {
  RegistryPtr reg = ts_registry();
  LaurentPoly one = p("1", reg);
  LaurentPoly t = p("t", reg);

  CHECK((p("1 - t", reg) * p("1 + s*t", reg) == p("1 + s*t - t - s*t^2", reg)));
  CHECK((t * p("t^-1", reg) == one));
  // Exercised also as the 2x2 determinant value in the knot example.
  LaurentPoly expanded = p("1 - t", reg) * p("1 + s*t", reg) * p("1 - s*t^2", reg);
  CHECK(expanded == p("1 - t + s*t - 2*s*t^2 + s*t^3 - s^2*t^3 + s^2*t^4", reg));
  CHECK((p("1 - t", reg) - p("1 - t", reg)).is_zero());
  CHECK((-p("t - 1", reg) == p("1 - t", reg)));
  CHECK(p("t", reg).pow(-3) == p("t^-3", reg));
  CHECK_THROWS_AS(p("1 + t", reg).pow(-1), std::invalid_argument);
}

TEST_CASE("registry mismatch is rejected") {
  RegistryPtr a = make_registry({"t", "s"});
  RegistryPtr b = make_registry({"u"});
  LaurentPoly pa = LaurentPoly::variable(a, 0);
  LaurentPoly pb = LaurentPoly::variable(b, 0);
  CHECK_THROWS_AS(pa * pb, std::invalid_argument);
  CHECK_THROWS_AS(pa + pb, std::invalid_argument);
  // Constants carry no registry and combine with anything.
  CHECK((pa + LaurentPoly(1)) == parse_poly("t + 1", a));
}

TEST_CASE("parser accepts the grammar and reports errors") {
  RegistryPtr reg = ts_registry();
  CHECK(p("1 - s*t^2", reg).str() == "1 - s*t^2");
  CHECK(p("s^-1", reg) == LaurentPoly::variable(reg, 1, -1));
  CHECK(p("(1 - t)*(1 + s*t)", reg) == p("1 - t", reg) * p("1 + s*t", reg));
  CHECK(p("-t^2", reg) == -p("t^2", reg));
  CHECK(p("2*-3", reg) == LaurentPoly(-6));
  CHECK(p("0", reg).is_zero());
  CHECK(p(" 12", reg) == LaurentPoly(12));

  CHECK_THROWS_AS(p("1 +", reg), ParseError);
  CHECK_THROWS_AS(p("q", reg), ParseError);
  CHECK_THROWS_AS(p("t t", reg), ParseError);   // implicit multiplication
  CHECK_THROWS_AS(p("2 t", reg), ParseError);
  CHECK_THROWS_AS(p("t^", reg), ParseError);
  CHECK_THROWS_AS(p("(1", reg), ParseError);
  try {
    p("1 + q", reg);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("exact division") {
  RegistryPtr reg = ts_registry();
  LaurentPoly product = p("1 - t", reg) * p("1 + s*t", reg) * p("1 - s*t^2", reg);
  auto q = exact_divide(product, p("1 - t", reg) * p("1 + s*t", reg));
  REQUIRE(q);
  CHECK(*q == p("1 - s*t^2", reg));

  auto q2 = exact_divide(p("1 - s^3*t^6", reg), p("1 + s*t^2 + s^2*t^4", reg));
  REQUIRE(q2);
  CHECK(*q2 == p("1 - s*t^2", reg));

  CHECK(*exact_divide(p("1 - s*t^2", reg), p("1", reg)) == p("1 - s*t^2", reg));
  CHECK(!exact_divide(p("1 + t", reg), p("1 - t", reg)));
  CHECK(!exact_divide(p("t^2 + 1", reg), p("2", reg)));  // coefficient divisibility
  CHECK(*exact_divide(p("2*t^2 + 2", reg), p("2", reg)) == p("t^2 + 1", reg));
  // Laurent shifts are handled by clearing.
  CHECK(*exact_divide(p("t^-1 - t^-2", reg), p("t^-2", reg)) == p("t - 1", reg));
  CHECK_THROWS_AS(exact_divide(p("1", reg), LaurentPoly()), std::invalid_argument);
}

TEST_CASE("equality up to units") {
  RegistryPtr reg = ts_registry();
  std::vector<LaurentPoly> gens = {p("-s", reg)};

  SUBCASE("monomial scalings are recognized with a valid witness") {
    LaurentPoly a = p("1 - s*t^2", reg);
    LaurentPoly b = p("-s^3*t^4 + s^4*t^6", reg);  // -s^3 t^4 (1 - s t^2)
    auto w = equal_up_to_units(b, a, gens);
    REQUIRE(w);
    CHECK(a.scaled(w->monomial, Int(w->sign)) == b);
  }
  SUBCASE("identical polynomials have the trivial witness") {
    LaurentPoly a = p("1 - s*t^2", reg);
    auto w = equal_up_to_units(a, a, gens);
    REQUIRE(w);
    CHECK(w->sign == 1);
    CHECK(w->monomial.is_one());
  }
  SUBCASE("sign-pattern differences are detected") {
    CHECK(!equal_up_to_units(p("1 - s*t^2", reg), p("1 + s*t^2", reg), gens));
  }
  SUBCASE("non-monomial unit generators are rejected") {
    CHECK_THROWS_AS(equal_up_to_units(p("1", reg), p("1", reg), {p("1 + t", reg)}),
                    std::invalid_argument);
  }
  SUBCASE("zero compares only to zero") {
    CHECK(equal_up_to_units(LaurentPoly(), LaurentPoly(), gens));
    CHECK(!equal_up_to_units(LaurentPoly(), p("t", reg), gens));
  }
}

TEST_CASE("rational comparison cross-multiplies") {
  RegistryPtr reg = ts_registry();
  RationalFunction a{p("1 - s*t^2", reg), p("1", reg)};
  RationalFunction b{p("1 - s^3*t^6", reg), p("1 + s*t^2 + s^2*t^4", reg)};
  CHECK(rat_equal_up_to_units(a, b));
  CHECK(rat_equal_up_to_units(a, a));
  RationalFunction c{p("1", reg), p("1", reg)};
  RationalFunction d{p("t", reg), p("1", reg)};
  auto w = rat_equal_up_to_units(c, d);
  REQUIRE(w);  // monomials are units
  CHECK(!rat_equal_up_to_units(a, c));
}

TEST_CASE("substitution") {
  RegistryPtr reg = ts_registry();
  CHECK(substitute(p("1 + s*t - s*t^2", reg),
                   std::map<std::string, LaurentPoly>{{"t", LaurentPoly(1)}}) == p("1", reg));

  RegistryPtr reg2 = color_registry(2);
  LaurentPoly q = parse_poly("t1*t2 - 1", reg2);
  CHECK(substitute(q, std::map<std::string, LaurentPoly>{{"t2", LaurentPoly(1)}}) ==
        parse_poly("t1 - 1", reg2));

  // A variable with a negative exponent needs a unit image.
  CHECK_THROWS_AS(substitute(p("t^-1", reg),
                             std::map<std::string, LaurentPoly>{{"t", p("1 + s", reg)}}),
                  std::invalid_argument);
  CHECK(substitute(p("t^-2", reg), std::map<std::string, LaurentPoly>{{"t", p("-s", reg)}}) ==
        p("s^-2", reg));
}

TEST_CASE("canonical forms and printing") {
  RegistryPtr reg = ts_registry();
  CHECK(LaurentPoly().str() == "0");
  CHECK(p("-1", reg).str() == "-1");
  CHECK(p("-t - 1", reg).str() == "-1 - t");
  CHECK(p("3*s^2*t^3", reg).str() == "3*s^2*t^3");

  CanonicalParts parts = canonical_unit_form(p("-s^3*t^4 + s^4*t^6", reg));
  CHECK(parts.canonical == p("s*t^2 - 1", reg));  // greatest-term-positive rule

  CanonicalParts display =
      canonical_unit_form(p("-s^3*t^4 + s^4*t^6", reg), SignRule::kLeastTermPositive);
  CHECK(display.canonical == p("1 - s*t^2", reg));
  // Both decompositions reproduce the input.
  for (const CanonicalParts* c : {&parts, &display})
    CHECK(c->canonical.scaled(c->shift, Int(c->sign)) == p("-s^3*t^4 + s^4*t^6", reg));
}

TEST_CASE("registry conversion by variable name") {
  RegistryPtr small = color_registry(1);
  RegistryPtr big = color_registry(1, {"s"});
  LaurentPoly q = parse_poly("1 - t", small);
  LaurentPoly converted = convert_registry(q, big);
  CHECK(converted == parse_poly("1 - t", big));
  CHECK_THROWS_AS(convert_registry(parse_poly("s", big), small), std::invalid_argument);
}
