#include "tburau/matrix.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace tburau {

RingMatrix identity_matrix(Eigen::Index size) {
  RingMatrix m = zero_matrix(size, size);
  for (Eigen::Index i = 0; i < size; ++i) m(i, i) = LaurentPoly(1);
  return m;
}

RingMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return RingMatrix::Constant(rows, cols, LaurentPoly());
}

bool mat_equal(const RingMatrix& a, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero_matrix(const RingMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

RingMatrix assemble_blocks(const std::vector<std::vector<RingMatrix>>& grid) {
  if (grid.empty()) return RingMatrix(0, 0);
  Eigen::Index rows = static_cast<Eigen::Index>(grid.size());
  Eigen::Index cols = static_cast<Eigen::Index>(grid[0].size());
  Eigen::Index k = grid[0][0].rows();
  for (const auto& row : grid) {
    if (static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument("ragged block grid");
    for (const RingMatrix& blk : row)
      if (blk.rows() != k || blk.cols() != k)
        throw std::invalid_argument("inconsistent block size");
  }
  RingMatrix m = zero_matrix(rows * k, cols * k);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      m.block(i * k, j * k, k, k) = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

RingMatrix extract_block(const RingMatrix& m, Eigen::Index block_row, Eigen::Index block_col,
                         Eigen::Index block_size) {
  if ((block_row + 1) * block_size > m.rows() || (block_col + 1) * block_size > m.cols())
    throw std::invalid_argument("block indices out of range");
  return m.block(block_row * block_size, block_col * block_size, block_size, block_size);
}

namespace {

// Laplace expansion over the rows still to be used, memoized on the set of
// available columns. Fine up to 8x8; the subset count is 2^n.
LaurentPoly cofactor_determinant(const RingMatrix& m) {
  Eigen::Index n = m.rows();
  std::unordered_map<std::uint32_t, LaurentPoly> memo;
  auto rec = [&](auto&& self, std::uint32_t colmask) -> LaurentPoly {
    if (colmask == 0) return LaurentPoly(1);
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    Eigen::Index row = n - static_cast<Eigen::Index>(__builtin_popcount(colmask));
    LaurentPoly det;
    int parity = 0;
    for (Eigen::Index col = 0; col < n; ++col) {
      std::uint32_t bit = 1u << col;
      if (!(colmask & bit)) continue;
      const LaurentPoly& entry = m(row, col);
      if (!entry.is_zero()) {
        LaurentPoly minor = self(self, colmask & ~bit);
        det += parity % 2 == 0 ? entry * minor : -(entry * minor);
      }
      ++parity;
    }
    memo.emplace(colmask, det);
    return det;
  };
  return rec(rec, n >= 32 ? 0 : (1u << n) - 1);
}

// Fraction-free Bareiss elimination. Entries must be ordinary polynomials
// (no negative exponents); every division is exact over the polynomial ring.
LaurentPoly bareiss_determinant(RingMatrix m) {
  Eigen::Index n = m.rows();
  LaurentPoly prev(1);
  int sign = 1;
  for (Eigen::Index p = 0; p < n - 1; ++p) {
    if (m(p, p).is_zero()) {
      Eigen::Index swap_row = -1;
      for (Eigen::Index r = p + 1; r < n; ++r)
        if (!m(r, p).is_zero()) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return LaurentPoly();
      m.row(p).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < n; ++i) {
      for (Eigen::Index j = p + 1; j < n; ++j) {
        LaurentPoly num = m(i, j) * m(p, p) - m(i, p) * m(p, j);
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("Bareiss division was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, p) = LaurentPoly();
    }
    prev = m(p, p);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace

LaurentPoly determinant(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Eigen::Index n = m.rows();
  if (n == 0) return LaurentPoly(1);
  if (n <= 8) return cofactor_determinant(m);

  // Clear each row to non-negative exponents by a monomial factor and track
  // the factors: det(M) = prod(shifts) * det(cleared).
  RingMatrix cleared = m;
  LaurentPoly shift_product(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Monomial row_shift;
    std::map<std::int32_t, std::int64_t> min_exp;
    RegistryPtr reg;
    for (Eigen::Index j = 0; j < n; ++j) {
      reg = unify_registries(reg, cleared(i, j).registry());
      for (const auto& [mono, c] : cleared(i, j).terms())
        for (const auto& [v, e] : mono.entries())
          if (e < 0) {
            auto it = min_exp.find(v);
            if (it == min_exp.end() || e < it->second) min_exp[v] = e;
          }
    }
    for (const auto& [v, e] : min_exp) row_shift = row_shift * Monomial::variable(v, e);
    if (!row_shift.is_one()) {
      for (Eigen::Index j = 0; j < n; ++j)
        cleared(i, j) = cleared(i, j).scaled(row_shift.inverse(), Int(1));
      shift_product *= LaurentPoly::from_monomial(reg, row_shift, Int(1));
    }
  }
  return shift_product * bareiss_determinant(std::move(cleared));
}

RingMatrix unit_inverse(const RingMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Eigen::Index n = m.rows();
  LaurentPoly det = determinant(m);
  if (!det.is_unit())
    throw std::invalid_argument("matrix determinant is not a unit: " + det.str());
  LaurentPoly det_inv = det.unit_inverse();
  RingMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      // Adjugate entry (i, j) is the (j, i) cofactor.
      RingMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      LaurentPoly cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv(i, j) = cof * det_inv;
    }
  }
  return inv;
}

}  // namespace tburau
