#include "tburau/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace tburau {

std::vector<std::int32_t> free_reduce(const std::vector<std::int32_t>& letters) {
  std::vector<std::int32_t> out;
  out.reserve(letters.size());
  for (std::int32_t l : letters) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(int rank, std::vector<std::int32_t> letters) : rank_(rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  for (std::int32_t l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw std::invalid_argument("letter index out of range 1.." + std::to_string(rank));
  }
  letters_ = free_reduce(std::move(letters));
}

Word Word::generator(int rank, int index, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  return Word(rank, {sign > 0 ? index : -index});
}

Word Word::inverse() const {
  Word r;
  r.rank_ = rank_;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(-*it);
  return r;
}

Word Word::operator*(const Word& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("free group rank mismatch");
  std::vector<std::int32_t> cat = letters_;
  cat.insert(cat.end(), other.letters_.begin(), other.letters_.end());
  Word r;
  r.rank_ = rank_;
  r.letters_ = free_reduce(std::move(cat));
  return r;
}

std::string Word::str(const char* symbol) const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::int32_t l : letters_) {
    if (!first) out << "*";
    first = false;
    out << symbol << std::abs(l);
    if (l < 0) out << "^-1";
  }
  return out.str();
}

Word g_element(int rank, int i) {
  if (i < 0 || i > rank) throw std::invalid_argument("g index out of range");
  std::vector<std::int32_t> letters;
  for (int j = 1; j <= i; ++j) letters.push_back(j);
  return Word(rank, std::move(letters));
}

Word to_g_alphabet(const Word& w) {
  // x_i = g_{i-1}^{-1} g_i, with g_0 the empty word.
  std::vector<std::int32_t> out;
  for (std::int32_t l : w.letters()) {
    std::int32_t i = l > 0 ? l : -l;
    if (l > 0) {
      if (i > 1) out.push_back(-(i - 1));
      out.push_back(i);
    } else {
      out.push_back(-i);
      if (i > 1) out.push_back(i - 1);
    }
  }
  return Word(w.rank(), std::move(out));
}

Word from_g_alphabet(const Word& w) {
  // g_i = x_1 x_2 ... x_i.
  std::vector<std::int32_t> out;
  for (std::int32_t l : w.letters()) {
    std::int32_t i = l > 0 ? l : -l;
    if (l > 0) {
      for (std::int32_t j = 1; j <= i; ++j) out.push_back(j);
    } else {
      for (std::int32_t j = i; j >= 1; --j) out.push_back(-j);
    }
  }
  return Word(w.rank(), std::move(out));
}

}  // namespace tburau
