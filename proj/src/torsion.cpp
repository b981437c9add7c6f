#include "tburau/torsion.hpp"

#include <chrono>
#include <stdexcept>

#include "tburau/errors.hpp"
#include "tburau/group_ring.hpp"

namespace tburau {

namespace {

void require_color_preserving(const ColoredBraidWord& braid) {
  if (!preserves_colors(braid))
    throw std::invalid_argument(
        "the braid does not preserve its coloring, so its closure is not a colored link "
        "with this coloring");
}

void require_extendable(const Representation& rho, const ColoredBraidWord& braid) {
  ExtensionReport report = extends_to_closure(rho, braid);
  if (!report.extends) {
    std::string msg = "representation does not extend to the closure; rho(x_i beta) != rho(x_i) for i =";
    for (int i : report.failing_generators) msg += " " + std::to_string(i);
    throw NonExtendableError(msg, report.failing_generators);
  }
}

// det((rho (x) psi_c)(x_j - 1)).
LaurentPoly wada_denominator(const Representation& rho, const ColorMap& colors, int j) {
  RingMatrix m = twisted_evaluate(rho, colors, Word::generator(rho.rank(), j)) -
                 identity_matrix(rho.dim());
  return determinant(m);
}

// det(rho(x_1..x_n) t_{c_1}..t_{c_n} - I_k).
LaurentPoly theorem_denominator_poly(const Representation& rho, const ColorMap& colors) {
  Word full = g_element(rho.rank(), rho.rank());
  RingMatrix m = twisted_evaluate(rho, colors, full) - identity_matrix(rho.dim());
  return determinant(m);
}

TorsionResult make_torsion(LaurentPoly numerator, LaurentPoly denominator, std::string route,
                           const Representation& rho) {
  if (denominator.is_zero())
    throw std::runtime_error("torsion denominator vanished on route '" + route + "'");
  TorsionResult t;
  t.zero = numerator.is_zero();
  t.value = make_rational(std::move(numerator), std::move(denominator));
  t.route = std::move(route);
  t.unit_group = rho.image_determinants();
  if (auto q = exact_divide(t.value.numerator, t.value.denominator)) {
    t.exact_quotient = *q;
    t.normalized = canonical_unit_form(*q, SignRule::kLeastTermPositive).canonical;
  }
  return t;
}

}  // namespace

RingMatrix closure_fox_matrix(const Representation& rho, const ColoredBraidWord& braid) {
  require_color_preserving(braid);
  if (rho.rank() != braid.strands())
    throw std::invalid_argument("representation rank does not match strand count");
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  ColorMap colors(braid.colors_top());
  RingMatrix m(n * k, n * k);
  for (int i = 1; i <= n; ++i) {
    Word generator = Word::generator(n, i);
    GroupRingElement relator = GroupRingElement::from_word(apply_braid(braid, generator)) -
                               GroupRingElement::from_word(generator);
    for (int j = 1; j <= n; ++j)
      m.block((i - 1) * k, (j - 1) * k, k, k) =
          twisted_evaluate(rho, colors, fox_derivative(relator, j));
  }
  RingMatrix cross = burau_unreduced(rho, braid).matrix - identity_matrix(n * k);
  if (!mat_equal(m, cross))
    throw std::logic_error("closure Fox matrix differs from burau - I; internal fault");
  return m;
}

TorsionResult wada_invariant(const Representation& rho, const ColoredBraidWord& braid,
                             int drop_relator, int drop_column) {
  int n = braid.strands();
  if (drop_relator < 1 || drop_relator > n) throw std::invalid_argument("dropped relator out of range");
  if (drop_column < 1 || drop_column > n) throw std::invalid_argument("dropped column out of range");
  require_color_preserving(braid);
  require_extendable(rho, braid);

  Eigen::Index k = rho.dim();
  RingMatrix full = closure_fox_matrix(rho, braid);
  Eigen::Index size = static_cast<Eigen::Index>(n - 1) * k;
  RingMatrix sub(size, size);
  for (int bi = 0, ri = 0; bi < n; ++bi) {
    if (bi == drop_relator - 1) continue;
    for (int bj = 0, rj = 0; bj < n; ++bj) {
      if (bj == drop_column - 1) continue;
      sub.block(ri * k, rj * k, k, k) = extract_block(full, bi, bj, k);
      ++rj;
    }
    ++ri;
  }
  LaurentPoly numerator = determinant(sub);
  ColorMap colors(braid.colors_top());
  LaurentPoly denominator = wada_denominator(rho, colors, drop_column);
  if (denominator.is_zero())
    throw std::runtime_error("Wada denominator det((rho x psi)(x_j - 1)) is zero for j = " +
                             std::to_string(drop_column));
  TorsionResult t = make_torsion(std::move(numerator), std::move(denominator), "wada", rho);
  t.notes.push_back("dropped relator " + std::to_string(drop_relator) + ", column " +
                    std::to_string(drop_column));
  return t;
}

TorsionResult torsion_from_burau(const Representation& rho, const ColoredBraidWord& braid) {
  require_color_preserving(braid);
  require_extendable(rho, braid);
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  BurauMatrix reduced = burau_reduced(rho, braid);
  LaurentPoly numerator =
      determinant(reduced.matrix - identity_matrix(static_cast<Eigen::Index>(n - 1) * k));
  ColorMap colors(braid.colors_top());
  LaurentPoly denominator = theorem_denominator_poly(rho, colors);
  return make_torsion(std::move(numerator), std::move(denominator), "burau", rho);
}

VerificationReport verify_main_theorem(const Representation& rho, const ColoredBraidWord& braid,
                                       int drop_relator, int drop_column) {
  int n = braid.strands();
  if (drop_relator < 0) drop_relator = n;
  if (drop_column < 0) drop_column = n;

  VerificationReport report;
  report.unit_group = rho.image_determinants();
  report.colors_preserved = preserves_colors(braid);
  if (!report.colors_preserved) {
    report.notes.push_back("braid does not preserve its coloring");
    return report;
  }
  ExtensionReport ext = extends_to_closure(rho, braid);
  if (!ext.extends) {
    report.failing_generators = ext.failing_generators;
    report.notes.push_back("representation does not extend to the closure");
    return report;
  }
  report.applicable = true;

  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  report.wada = wada_invariant(rho, braid, drop_relator, drop_column);
  auto t1 = clock::now();
  report.wada_seconds = std::chrono::duration<double>(t1 - t0).count();

  ColorMap colors(braid.colors_top());
  LaurentPoly den = theorem_denominator_poly(rho, colors);
  report.theorem_denominator = den;
  Eigen::Index k = rho.dim();
  BurauMatrix reduced = burau_reduced(rho, braid);
  LaurentPoly reduced_det =
      determinant(reduced.matrix - identity_matrix(static_cast<Eigen::Index>(n - 1) * k));
  auto t2 = clock::now();
  report.burau_seconds = std::chrono::duration<double>(t2 - t1).count();

  if (den.is_zero()) {
    // The identity is stated as a product; with a vanishing factor both
    // cross products must vanish together.
    report.notes.push_back("identity degenerate: denominator vanishes; comparing products");
  } else {
    report.burau = make_torsion(reduced_det, den, "burau", rho);
  }

  // Compare  wada * den == det(reduced - I)  up to units, cross-multiplied:
  // lhs = (wada.num * den) / wada.den, rhs = reduced_det / 1.
  report.lhs = RationalFunction{report.wada.value.numerator * den, report.wada.value.denominator};
  report.rhs = RationalFunction{reduced_det, LaurentPoly(1)};

  std::vector<LaurentPoly> generators = report.unit_group;
  for (const LaurentPoly& g : generators) {
    if (!g.is_unit()) {
      report.notes.push_back(
          "indeterminacy group not monomial; falling back to comparison up to +-monomials only");
      generators.clear();
      break;
    }
  }
  report.witness = rat_equal_up_to_units(report.lhs, report.rhs, generators);
  report.pass = report.witness.has_value();
  return report;
}

TorsionResult alexander_untwisted(const ColoredBraidWord& braid) {
  require_color_preserving(braid);
  int mu = braid.color_count();
  Representation rho = Representation::trivial(braid.strands(), mu);
  TorsionResult torsion = torsion_from_burau(rho, braid);
  if (mu >= 2) {
    torsion.notes.push_back("multivariable alexander polynomial (equals the torsion)");
    return torsion;
  }
  LaurentPoly t_minus_1 =
      LaurentPoly::variable(rho.registry(), 0) - LaurentPoly::constant(rho.registry(), 1);
  TorsionResult alex = make_torsion(torsion.value.numerator * t_minus_1,
                                    torsion.value.denominator, torsion.route, rho);
  alex.notes.push_back("alexander polynomial: torsion times (t - 1)");
  return alex;
}

}  // namespace tburau
