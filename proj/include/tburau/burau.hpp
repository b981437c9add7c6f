#pragma once

#include <vector>

#include "tburau/braid.hpp"
#include "tburau/matrix.hpp"
#include "tburau/representation.hpp"

namespace tburau {

enum class BurauBasis {
  kXBasis,   // good basis x_1..x_n, nk x nk
  kGBasis,   // basis g_i = x_1..x_i, nk x nk, bottom block row (0 .. 0 I_k)
  kReduced,  // top-left (n-1)k x (n-1)k corner of the g-basis matrix
};

struct BurauMatrix {
  RingMatrix matrix;
  BurauBasis basis = BurauBasis::kXBasis;
  int strands = 0;  // n
  int dim = 0;      // k
  std::vector<int> colors_top;
  std::vector<int> colors_bottom;
};

// Twisted Burau matrix via Fox calculus: block (i, j) is
// (rho (x) psi_{c'})(d(x_i beta)/dx_j) with c' the bottom coloring.
BurauMatrix burau_unreduced(const Representation& rho, const ColoredBraidWord& braid);

// The same matrix assembled letter by letter from closed-form generator
// blocks through the cocycle law B(beta gamma) = B_{gamma_* rho}(beta) B(gamma),
// with per-letter pullbacks and propagated colorings. Agrees exactly with
// burau_unreduced.
BurauMatrix burau_by_letters(const Representation& rho, const ColoredBraidWord& braid);

// Full nk x nk matrix in the g-alphabet basis. The bottom block row is
// asserted to be (0 ... 0 I_k); failure is an internal error.
BurauMatrix burau_gbasis(const Representation& rho, const ColoredBraidWord& braid);

// Reduced twisted Burau matrix: the top-left (n-1)k corner of the g-basis
// matrix, computed by Fox calculus directly in the g-alphabet.
BurauMatrix burau_reduced(const Representation& rho, const ColoredBraidWord& braid);

// Reduced matrix assembled letter by letter; cross-check of burau_reduced.
BurauMatrix burau_reduced_by_letters(const Representation& rho, const ColoredBraidWord& braid);

// Closed-form block of a single Artin letter, given the letter's own bottom
// coloring. Inverse letters are handled by exact inversion of the positive
// block evaluated on pulled-back data. Basis must be kXBasis or kReduced.
RingMatrix burau_generator_block(const BraidLetter& letter, const Representation& rho,
                                 const std::vector<int>& colors_bottom, BurauBasis basis);

// Change-of-basis matrix from the g-alphabet basis to the x-basis: block
// (i, j) is (rho (x) psi_c)(dg_i/dx_j). Block lower-triangular with unit
// diagonal determinants, hence invertible.
RingMatrix g_change_of_basis(const Representation& rho, const ColorMap& colors);

}  // namespace tburau
