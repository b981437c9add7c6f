#include "tburau/group_ring.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tburau {

GroupRingElement GroupRingElement::from_word(const Word& w, const Int& coefficient) {
  GroupRingElement e(w.rank());
  e.add_term(w, coefficient);
  return e;
}

int GroupRingElement::common_rank(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("group ring rank mismatch");
  return a.rank_;
}

void GroupRingElement::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  GroupRingElement r(common_rank(*this, other));
  r.terms_ = terms_;
  for (const auto& [w, c] : other.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
  return *this + (-other);
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& other) const {
  GroupRingElement r(common_rank(*this, other));
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : other.terms_) r.add_term(u * v, cu * cv);
  return r;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  return *this = *this + other;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  return *this = *this - other;
}

GroupRingElement GroupRingElement::scaled(const Int& c) const {
  GroupRingElement r(rank_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [w, coeff] : r.terms_) coeff *= c;
  return r;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (w.empty()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << w.str();
    }
  }
  return out.str();
}

GroupRingElement fox_derivative(const Word& w, int j) {
  if (j < 1 || j > w.rank()) throw std::invalid_argument("derivative index out of range");
  GroupRingElement result(w.rank());
  std::vector<std::int32_t> prefix;
  prefix.reserve(w.size());
  for (std::int32_t l : w.letters()) {
    // The prefix here is already reduced (a prefix of a reduced word).
    if (l == j) {
      result += GroupRingElement::from_word(Word(w.rank(), prefix));
    } else if (l == -j) {
      std::vector<std::int32_t> with_inverse = prefix;
      with_inverse.push_back(l);
      result -= GroupRingElement::from_word(Word(w.rank(), std::move(with_inverse)));
    }
    prefix.push_back(l);
  }
  return result;
}

GroupRingElement fox_derivative(const GroupRingElement& a, int j) {
  GroupRingElement result(a.rank());
  for (const auto& [w, c] : a.terms()) result += fox_derivative(w, j).scaled(c);
  return result;
}

std::vector<GroupRingElement> fox_jacobian_row(const Word& w) {
  std::vector<GroupRingElement> row;
  row.reserve(static_cast<std::size_t>(w.rank()));
  for (int j = 1; j <= w.rank(); ++j) row.push_back(fox_derivative(w, j));
  return row;
}

}  // namespace tburau
