#include "tburau/burau.hpp"

#include <stdexcept>
#include <utility>

#include "tburau/group_ring.hpp"

namespace tburau {

namespace {

void check_compatible(const Representation& rho, const ColoredBraidWord& braid) {
  if (rho.rank() != braid.strands())
    throw std::invalid_argument("representation rank does not match strand count");
}

std::vector<int> swap_at(std::vector<int> colors, int i) {
  std::swap(colors[static_cast<std::size_t>(i - 1)], colors[static_cast<std::size_t>(i)]);
  return colors;
}

// sigma_i block in the x-basis: identity outside rows/cols i, i+1 and
//   [ I_k - rho(x_i x_{i+1} x_i^{-1}) t_{c'_{i+1}}   rho(x_i) t_{c'_i} ]
//   [ I_k                                            0                 ]
RingMatrix positive_block_x(const BraidLetter& letter, const Representation& rho,
                            const ColorMap& bottom) {
  int n = rho.rank();
  Eigen::Index k = rho.dim();
  int i = letter.index;
  Word conjugate(n, {i, i + 1, -i});
  RingMatrix m = identity_matrix(n * k);
  m.block((i - 1) * k, (i - 1) * k, k, k) =
      identity_matrix(k) - twisted_evaluate(rho, bottom, conjugate);
  m.block((i - 1) * k, i * k, k, k) =
      twisted_evaluate(rho, bottom, Word::generator(n, i));
  m.block(i * k, (i - 1) * k, k, k) = identity_matrix(k);
  m.block(i * k, i * k, k, k) = zero_matrix(k, k);
  return m;
}

// Reduced sigma_i block per the closed forms: the only non-identity blocks
// involve X = rho(g_{i+1} g_i^{-1}) t_{c'_{i+1}}.
RingMatrix positive_block_reduced(const BraidLetter& letter, const Representation& rho,
                                  const ColorMap& bottom) {
  int n = rho.rank();
  Eigen::Index k = rho.dim();
  int i = letter.index;
  Word g_ratio = g_element(n, i + 1) * g_element(n, i).inverse();
  RingMatrix x = twisted_evaluate(rho, bottom, g_ratio);
  RingMatrix m = identity_matrix(static_cast<Eigen::Index>(n - 1) * k);
  // Row i (1-based blocks): g_i maps to g_{i+1} g_i^{-1} g_{i-1}.
  m.block((i - 1) * k, (i - 1) * k, k, k) = RingMatrix(-x);
  if (i >= 2) m.block((i - 1) * k, (i - 2) * k, k, k) = x;
  if (i <= n - 2) m.block((i - 1) * k, i * k, k, k) = identity_matrix(k);
  return m;
}

ColoredBraidWord single_letter_braid(const BraidLetter& letter, const std::vector<int>& colors_top) {
  return ColoredBraidWord({letter}, colors_top);
}

BurauMatrix tag(RingMatrix m, BurauBasis basis, const Representation& rho,
                const ColoredBraidWord& braid) {
  BurauMatrix b;
  b.matrix = std::move(m);
  b.basis = basis;
  b.strands = braid.strands();
  b.dim = rho.dim();
  b.colors_top = braid.colors_top();
  b.colors_bottom = propagate_colors(braid);
  return b;
}

}  // namespace

RingMatrix burau_generator_block(const BraidLetter& letter, const Representation& rho,
                                 const std::vector<int>& colors_bottom, BurauBasis basis) {
  int n = rho.rank();
  if (letter.index < 1 || letter.index >= n)
    throw std::invalid_argument("generator index out of range");
  if (static_cast<int>(colors_bottom.size()) != n)
    throw std::invalid_argument("coloring length does not match strand count");
  if (basis == BurauBasis::kGBasis)
    throw std::invalid_argument("generator blocks exist in the x-basis and reduced basis only");

  if (letter.sign > 0) {
    ColorMap bottom(colors_bottom);
    return basis == BurauBasis::kXBasis ? positive_block_x(letter, rho, bottom)
                                        : positive_block_reduced(letter, rho, bottom);
  }

  // Inverse letter delta = sigma_i^{-1} viewed as (c, c') with c' the given
  // bottom coloring and c = c' with positions i, i+1 swapped. From the
  // cocycle law applied to sigma_i delta = id:
  //   B_rho(delta) = B_{delta_* rho}(sigma_i as (c', c) braid)^{-1},
  // where the sigma_i block is evaluated at delta's top coloring c.
  std::vector<int> colors_top = swap_at(colors_bottom, letter.index);
  Representation pulled = pullback(rho, single_letter_braid(letter, colors_top));
  BraidLetter positive{letter.index, +1};
  ColorMap bottom_of_sigma(colors_top);
  if (basis == BurauBasis::kXBasis) {
    // Invert [[A, B], [I, 0]] in place: the inverse is [[0, I], [B^{-1}, -B^{-1} A]].
    int i = letter.index;
    Eigen::Index k = rho.dim();
    Word conjugate(n, {i, i + 1, -i});
    RingMatrix a = identity_matrix(k) - twisted_evaluate(pulled, bottom_of_sigma, conjugate);
    RingMatrix b_inv = pulled.image_inverse(i) *
                       color_monomial(rho.registry(), bottom_of_sigma,
                                      Word::generator(n, i)).unit_inverse();
    RingMatrix m = identity_matrix(n * k);
    m.block((i - 1) * k, (i - 1) * k, k, k) = zero_matrix(k, k);
    m.block((i - 1) * k, i * k, k, k) = identity_matrix(k);
    m.block(i * k, (i - 1) * k, k, k) = b_inv;
    m.block(i * k, i * k, k, k) = RingMatrix(-(b_inv * a));
    return m;
  }
  return unit_inverse(positive_block_reduced(positive, pulled, bottom_of_sigma));
}

BurauMatrix burau_unreduced(const Representation& rho, const ColoredBraidWord& braid) {
  check_compatible(rho, braid);
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  ColorMap bottom(propagate_colors(braid));
  RingMatrix m(n * k, n * k);
  for (int i = 1; i <= n; ++i) {
    Word acted = apply_braid(braid, Word::generator(n, i));
    for (int j = 1; j <= n; ++j)
      m.block((i - 1) * k, (j - 1) * k, k, k) =
          twisted_evaluate(rho, bottom, fox_derivative(acted, j));
  }
  return tag(std::move(m), BurauBasis::kXBasis, rho, braid);
}

namespace {

// Shared scaffold of the letterwise routes: multiply generator blocks left to
// right, attaching to the p-th letter the representation pulled back along
// the letters below it and the letter's own bottom coloring.
RingMatrix letterwise_product(const Representation& rho, const ColoredBraidWord& braid,
                              BurauBasis basis) {
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  Eigen::Index size = basis == BurauBasis::kXBasis ? n * k : (n - 1) * k;
  const auto& letters = braid.letters();
  std::size_t m = letters.size();
  std::vector<std::vector<int>> steps = color_steps(braid);

  std::vector<Representation> rep_at(m, rho);
  for (std::size_t p = m; p-- > 1;)
    rep_at[p - 1] = pullback(rep_at[p], single_letter_braid(letters[p], steps[p]));

  RingMatrix result = identity_matrix(size);
  for (std::size_t p = 0; p < m; ++p)
    result = result * burau_generator_block(letters[p], rep_at[p], steps[p + 1], basis);
  return result;
}

}  // namespace

BurauMatrix burau_by_letters(const Representation& rho, const ColoredBraidWord& braid) {
  check_compatible(rho, braid);
  return tag(letterwise_product(rho, braid, BurauBasis::kXBasis), BurauBasis::kXBasis, rho, braid);
}

BurauMatrix burau_reduced_by_letters(const Representation& rho, const ColoredBraidWord& braid) {
  check_compatible(rho, braid);
  return tag(letterwise_product(rho, braid, BurauBasis::kReduced), BurauBasis::kReduced, rho,
             braid);
}

BurauMatrix burau_gbasis(const Representation& rho, const ColoredBraidWord& braid) {
  check_compatible(rho, braid);
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  ColorMap bottom(propagate_colors(braid));
  RingMatrix m(n * k, n * k);
  for (int i = 1; i <= n; ++i) {
    Word acted_g = to_g_alphabet(apply_braid(braid, g_element(n, i)));
    for (int j = 1; j <= n; ++j)
      m.block((i - 1) * k, (j - 1) * k, k, k) =
          twisted_evaluate_g(rho, bottom, fox_derivative(acted_g, j));
  }
  // g_n is fixed by every braid, so the bottom block row must be (0 .. 0 I_k).
  for (int j = 1; j <= n; ++j) {
    RingMatrix blk = extract_block(m, n - 1, j - 1, k);
    bool ok = j == n ? mat_equal(blk, identity_matrix(k)) : is_zero_matrix(blk);
    if (!ok) throw std::logic_error("g-basis bottom block row is not (0 .. 0 I); internal fault");
  }
  return tag(std::move(m), BurauBasis::kGBasis, rho, braid);
}

BurauMatrix burau_reduced(const Representation& rho, const ColoredBraidWord& braid) {
  BurauMatrix full = burau_gbasis(rho, braid);
  int n = braid.strands();
  Eigen::Index k = rho.dim();
  BurauMatrix reduced;
  reduced.matrix = full.matrix.topLeftCorner(static_cast<Eigen::Index>(n - 1) * k,
                                             static_cast<Eigen::Index>(n - 1) * k);
  reduced.basis = BurauBasis::kReduced;
  reduced.strands = full.strands;
  reduced.dim = full.dim;
  reduced.colors_top = full.colors_top;
  reduced.colors_bottom = full.colors_bottom;
  return reduced;
}

RingMatrix g_change_of_basis(const Representation& rho, const ColorMap& colors) {
  int n = rho.rank();
  Eigen::Index k = rho.dim();
  RingMatrix m(n * k, n * k);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m.block((i - 1) * k, (j - 1) * k, k, k) =
          twisted_evaluate(rho, colors, fox_derivative(g_element(n, i), j));
  return m;
}

}  // namespace tburau
