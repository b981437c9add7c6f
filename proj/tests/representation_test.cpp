#include <doctest.h>

#include "tburau/errors.hpp"
#include "tburau/representation.hpp"
#include "tburau/selftest.hpp"

using namespace tburau;

namespace {
Word w(int rank, std::vector<std::int32_t> letters) { return Word(rank, std::move(letters)); }
}  // namespace

TEST_CASE("loading the knot example representation") {
  Representation rho = selftest::trefoil_representation();
  CHECK(rho.rank() == 2);
  CHECK(rho.dim() == 2);
  CHECK(rho.name() == "trefoil");
  RegistryPtr reg = rho.registry();
  CHECK(rho.image_determinant(1) == parse_poly("-s", reg));
  CHECK(rho.image_determinant(2) == parse_poly("-s", reg));
  CHECK(mat_equal(RingMatrix(rho.image(1) * rho.image_inverse(1)), identity_matrix(2)));
}

TEST_CASE("loader rejects malformed representations") {
  CHECK_THROWS_AS(load_representation("{", 1), std::invalid_argument);
  CHECK_THROWS_AS(load_representation(R"({"n": 1, "k": 1, "images": [[["1 + t"]]]})", 1),
                  std::invalid_argument);  // color variable in an image
  CHECK_THROWS_AS(
      load_representation(R"({"n": 1, "k": 1, "variables": ["s"], "images": [[["1 + s"]]]})", 1),
      std::invalid_argument);  // determinant 1 + s is not a unit
  CHECK_THROWS_AS(
      load_representation(R"({"n": 2, "k": 2, "images": [[["1"]]]})", 1),
      std::invalid_argument);  // wrong shapes
  // A valid one-dimensional representation.
  Representation ok = load_representation(R"({"n": 1, "k": 1, "images": [[["1"]]]})", 1);
  CHECK(ok.dim() == 1);
}

TEST_CASE("trivial representation") {
  Representation rho = Representation::trivial(3, 2);
  CHECK(rho.dim() == 1);
  CHECK(rho.image(2)(0, 0).is_one());
  CHECK(evaluate(rho, w(3, {1, -2, 3}))(0, 0).is_one());
}

TEST_CASE("evaluation is multiplicative") {
  Representation rho = selftest::trefoil_representation();
  RegistryPtr reg = rho.registry();
  auto q = [&](const std::string& text) { return parse_poly(text, reg); };
  RingMatrix x1x2 = evaluate(rho, w(2, {1, 2}));
  RingMatrix expected(2, 2);
  expected << q("0"), q("-s"), q("s"), q("-s");
  CHECK(mat_equal(x1x2, expected));
  CHECK(mat_equal(evaluate(rho, w(2, {})), identity_matrix(2)));
  CHECK(mat_equal(evaluate(rho, w(2, {1, -1})), identity_matrix(2)));
  CHECK(mat_equal(evaluate(rho, w(2, {1}) * w(2, {2})),
                  RingMatrix(evaluate(rho, w(2, {1})) * evaluate(rho, w(2, {2})))));
  CHECK_THROWS_AS(evaluate(rho, w(3, {1})), std::invalid_argument);
}

TEST_CASE("twisted evaluation matches the knot example matrices") {
  Representation rho = selftest::trefoil_representation();
  RegistryPtr reg = rho.registry();
  auto q = [&](const std::string& text) { return parse_poly(text, reg); };
  ColorMap colors({1, 1});

  GroupRingElement a = GroupRingElement::one(2) - GroupRingElement::from_word(w(2, {2})) +
                       GroupRingElement::from_word(w(2, {1, 2}));
  RingMatrix m = twisted_evaluate(rho, colors, a);
  RingMatrix expected(2, 2);
  expected << q("1 - t"), q("-s*t^2"), q("-s*t + s*t^2"), q("1 + s*t - s*t^2");
  CHECK(mat_equal(m, expected));

  GroupRingElement b = GroupRingElement::one(2) - GroupRingElement::from_word(w(2, {1}));
  RingMatrix mb = twisted_evaluate(rho, colors, b);
  RingMatrix expected_b(2, 2);
  expected_b << q("1 + s*t"), q("-t"), q("0"), q("1 - t");
  CHECK(mat_equal(mb, expected_b));

  CHECK(is_zero_matrix(twisted_evaluate(rho, colors, GroupRingElement(2))));

  // Ring homomorphism and inverse consistency.
  Word u = w(2, {1, 2, -1});
  Word v = w(2, {-2, 1});
  CHECK(mat_equal(twisted_evaluate(rho, colors, u * v),
                  RingMatrix(twisted_evaluate(rho, colors, u) * twisted_evaluate(rho, colors, v))));
  CHECK(mat_equal(RingMatrix(twisted_evaluate(rho, colors, u) *
                             twisted_evaluate(rho, colors, u.inverse())),
                  identity_matrix(2)));
}

TEST_CASE("color monomials follow the coloring") {
  RegistryPtr reg = color_registry(2);
  ColorMap colors({1, 2, 1});
  CHECK(color_monomial(reg, colors, w(3, {1, 2, 3})) == parse_poly("t1^2*t2", reg));
  CHECK(color_monomial(reg, colors, w(3, {1, -3})).is_one());
  // psi is invariant under color-preserving braids.
  ColoredBraidWord braid = parse_braid("s1 s1 s3^-2", {1, 2, 1, 1});
  REQUIRE(preserves_colors(braid));
  RegistryPtr reg2 = color_registry(2);
  ColorMap colors2(braid.colors_top());
  for (int i = 1; i <= 4; ++i)
    CHECK(color_monomial(reg2, colors2, apply_braid(braid, Word::generator(4, i))) ==
          color_monomial(reg2, colors2, Word::generator(4, i)));
}

TEST_CASE("pullback composes contravariantly with braid composition") {
  Representation rho = selftest::trefoil_representation();
  ColoredBraidWord id = ColoredBraidWord::identity({1, 1});
  CHECK(mat_equal(pullback(rho, id).image(1), rho.image(1)));

  ColoredBraidWord s1 = parse_braid("s1", {1, 1});
  Representation pulled = pullback(rho, s1);
  CHECK(mat_equal(pulled.image(1), evaluate(rho, w(2, {1, 2, -1}))));
  CHECK(mat_equal(pulled.image(2), rho.image(1)));

  Representation trivial = Representation::trivial(2, 1);
  CHECK(mat_equal(pullback(trivial, s1).image(1), trivial.image(1)));

  // (beta gamma)_* rho = beta_* (gamma_* rho).
  ColoredBraidWord beta = parse_braid("s1 s1^-1 s1", {1, 1});
  ColoredBraidWord gamma = parse_braid("s1^3", {1, 1});
  Representation lhs = pullback(rho, beta * gamma);
  Representation rhs = pullback(pullback(rho, gamma), beta);
  for (int i = 1; i <= 2; ++i) CHECK(mat_equal(lhs.image(i), rhs.image(i)));
}

TEST_CASE("closure extension check") {
  Representation rho = selftest::trefoil_representation();
  CHECK(extends_to_closure(rho, parse_braid("s1^3", {1, 1})).extends);
  ExtensionReport bad = extends_to_closure(rho, parse_braid("s1", {1, 1}));
  CHECK(!bad.extends);
  CHECK(bad.failing_generators == std::vector<int>{1, 2});
  CHECK(extends_to_closure(Representation::trivial(2, 1), parse_braid("s1", {1, 1})).extends);
}

TEST_CASE("relator trick at the twisted level") {
  // For a closure relation r = s (with rho extending), the twisted image of
  // d(r s^-1) equals the twisted image of d(r - s).
  Representation rho = selftest::trefoil_representation();
  ColoredBraidWord braid = parse_braid("s1^3", {1, 1});
  ColorMap colors({1, 1});
  for (int i = 1; i <= 2; ++i) {
    Word r = apply_braid(braid, Word::generator(2, i));
    Word s = Word::generator(2, i);
    GroupRingElement difference = GroupRingElement::from_word(r) - GroupRingElement::from_word(s);
    for (int j = 1; j <= 2; ++j) {
      RingMatrix via_quotient = twisted_evaluate(rho, colors, fox_derivative(r * s.inverse(), j));
      RingMatrix via_difference = twisted_evaluate(rho, colors, fox_derivative(difference, j));
      CHECK(mat_equal(via_quotient, via_difference));
    }
  }
}
