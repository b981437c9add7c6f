#pragma once

#include <map>
#include <string>
#include <vector>

#include "tburau/bigint.hpp"
#include "tburau/word.hpp"

namespace tburau {

// Element of the integer group ring Z[F_n]: a finite sum of freely reduced
// words with nonzero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(int rank) : rank_(rank) {}

  static GroupRingElement from_word(const Word& w, const Int& coefficient = Int(1));
  static GroupRingElement one(int rank) { return from_word(Word(rank)); }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Int>& terms() const { return terms_; }

  GroupRingElement operator-() const;
  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;
  GroupRingElement operator*(const GroupRingElement& other) const;
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  GroupRingElement scaled(const Int& c) const;

  bool operator==(const GroupRingElement& other) const = default;

  std::string str() const;

 private:
  void add_term(const Word& w, const Int& c);
  static int common_rank(const GroupRingElement& a, const GroupRingElement& b);

  int rank_ = 0;
  std::map<Word, Int> terms_;
};

// Fox free derivative d/dx_j, the linear map on Z[F_n] determined by
//   dx_i/dx_j = delta_ij,  dx_i^{-1}/dx_j = -delta_ij x_i^{-1},
//   d(uv)/dx_j = du/dx_j + u dv/dx_j.
GroupRingElement fox_derivative(const Word& w, int j);
GroupRingElement fox_derivative(const GroupRingElement& a, int j);

// All n partial derivatives of one word.
std::vector<GroupRingElement> fox_jacobian_row(const Word& w);

}  // namespace tburau
