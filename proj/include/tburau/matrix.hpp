#pragma once

#include <Eigen/Core>
#include <vector>

#include "tburau/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<tburau::LaurentPoly> : GenericNumTraits<tburau::LaurentPoly> {
  typedef tburau::LaurentPoly Real;
  typedef tburau::LaurentPoly NonInteger;
  typedef tburau::LaurentPoly Nested;
  typedef tburau::LaurentPoly Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 64,
    MulCost = 128
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace tburau {

// Dense matrix over the Laurent ring. All Eigen expression machinery
// (sums, products, blocks) applies; anything needing division or pivoting
// lives in the free functions below instead.
using RingMatrix = Eigen::Matrix<LaurentPoly, Eigen::Dynamic, Eigen::Dynamic>;

RingMatrix identity_matrix(Eigen::Index size);
RingMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);

bool mat_equal(const RingMatrix& a, const RingMatrix& b);
bool is_zero_matrix(const RingMatrix& m);

// Row-major placement of a grid of equally sized square blocks.
RingMatrix assemble_blocks(const std::vector<std::vector<RingMatrix>>& grid);
RingMatrix extract_block(const RingMatrix& m, Eigen::Index block_row, Eigen::Index block_col,
                         Eigen::Index block_size);

// Exact determinant. Cofactor expansion with memoization over column subsets
// up to size 8; beyond that, fraction-free Bareiss elimination after clearing
// each row's negative exponents by a tracked monomial factor. The empty
// matrix has determinant 1.
LaurentPoly determinant(const RingMatrix& m);

// Inverse of a matrix whose determinant is a unit (+- monomial), computed as
// adjugate over determinant; throws std::invalid_argument otherwise.
RingMatrix unit_inverse(const RingMatrix& m);

}  // namespace tburau
