#include <doctest.h>

#include "tburau/matrix.hpp"

using namespace tburau;

namespace {
RegistryPtr reg() { return color_registry(2, {"s"}); }
LaurentPoly p(const std::string& text) { return parse_poly(text, reg()); }
}  // namespace

TEST_CASE("basic matrix operations over the Laurent ring") {
  RingMatrix m(2, 2);
  m << p("1 - t1"), p("t2"), p("1"), p("0");
  CHECK(mat_equal(RingMatrix(identity_matrix(2) * m), m));
  CHECK(is_zero_matrix(RingMatrix(m - m)));

  RingMatrix other(2, 2);
  other << p("1 - t2"), p("t1"), p("1"), p("0");
  RingMatrix product = m * other;
  RingMatrix expected(2, 2);
  expected << p("1 - t1 + t1*t2"), p("t1*(1 - t1)"), p("1 - t2"), p("t1");
  CHECK(mat_equal(product, expected));
}

TEST_CASE("block assembly and extraction") {
  RingMatrix a = identity_matrix(2);
  RingMatrix b = zero_matrix(2, 2);
  RingMatrix assembled = assemble_blocks({{a, b}, {b, a}});
  CHECK(mat_equal(assembled, identity_matrix(4)));
  CHECK(mat_equal(extract_block(assembled, 1, 1, 2), a));
  CHECK(mat_equal(assemble_blocks({{a}}), a));
  RingMatrix wrong(1, 1);
  wrong << p("1");
  CHECK_THROWS_AS(assemble_blocks({{a, wrong}}), std::invalid_argument);
}

TEST_CASE("determinants of the knot example matrices") {
  RingMatrix m(2, 2);
  RegistryPtr r = color_registry(1, {"s"});
  auto q = [&](const std::string& text) { return parse_poly(text, r); };
  m << q("1 - t"), q("-s*t^2"), q("-s*t + s*t^2"), q("1 + s*t - s*t^2");
  CHECK(determinant(m) == q("(1 - t)*(1 + s*t)*(1 - s*t^2)"));

  RingMatrix d(2, 2);
  d << q("1 + s*t"), q("-t"), q("0"), q("1 - t");
  CHECK(determinant(d) == q("(1 - t)*(1 + s*t)"));

  CHECK(determinant(identity_matrix(3)).is_one());
  CHECK(determinant(RingMatrix(0, 0)).is_one());
  CHECK_THROWS_AS(determinant(zero_matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant with Laurent entries and row swaps") {
  RegistryPtr r = color_registry(1, {"s"});
  auto q = [&](const std::string& text) { return parse_poly(text, r); };
  RingMatrix m(2, 2);
  m << q("0"), q("t^-1"), q("s^-2"), q("1 - t");
  CHECK(determinant(m) == q("-t^-1*s^-2"));
}

TEST_CASE("unit inverse via adjugate") {
  RegistryPtr r = color_registry(1, {"s"});
  auto q = [&](const std::string& text) { return parse_poly(text, r); };
  RingMatrix m(2, 2);
  m << q("-s"), q("1"), q("0"), q("1");
  RingMatrix inv = unit_inverse(m);
  CHECK(mat_equal(RingMatrix(m * inv), identity_matrix(2)));
  CHECK(mat_equal(RingMatrix(inv * m), identity_matrix(2)));

  RingMatrix singularish(2, 2);
  singularish << q("1 + t"), q("0"), q("0"), q("1");
  CHECK_THROWS_AS(unit_inverse(singularish), std::invalid_argument);
}

TEST_CASE("bareiss path agrees with cofactor expansion") {
  RegistryPtr r = color_registry(1, {"s"});
  auto q = [&](const std::string& text) { return parse_poly(text, r); };
  // Block diagonal 9x9 exercises the elimination path (size > 8).
  RingMatrix big = zero_matrix(9, 9);
  RingMatrix top(5, 5);
  top << q("t"), q("1"), q("0"), q("s"), q("1 - t"),
         q("0"), q("t^-1"), q("1"), q("0"), q("2"),
         q("1"), q("0"), q("s^-1"), q("t"), q("0"),
         q("0"), q("3*t"), q("0"), q("1"), q("s"),
         q("1"), q("1"), q("t"), q("0"), q("1 + s*t");
  RingMatrix bottom(4, 4);
  bottom << q("1 - t"), q("s"), q("0"), q("t^2"),
            q("1"), q("0"), q("t"), q("0"),
            q("0"), q("s^-2"), q("1"), q("1"),
            q("t"), q("0"), q("0"), q("1 - s");
  big.block(0, 0, 5, 5) = top;
  big.block(5, 5, 4, 4) = bottom;
  LaurentPoly expected = determinant(top) * determinant(bottom);
  // Determinant-preserving row update mixes the blocks.
  for (int j = 0; j < 9; ++j) big(1, j) += q("t - s") * big(7, j);
  CHECK(determinant(big) == expected);
}
