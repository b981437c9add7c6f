#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tburau {

// A freely reduced word in the free group F_n. Letters are signed 1-based
// generator indices: +i stands for x_i and -i for x_i^{-1}. Words are
// immutable once built and reduction is eager, so no adjacent pair i, -i
// ever survives construction.
class Word {
 public:
  Word() = default;  // empty word in F_0
  explicit Word(int rank) : rank_(rank) {}
  Word(int rank, std::vector<std::int32_t> letters);

  static Word generator(int rank, int index, int sign = +1);

  int rank() const { return rank_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<std::int32_t>& letters() const { return letters_; }

  Word inverse() const;
  Word operator*(const Word& other) const;

  bool operator==(const Word& other) const = default;
  auto operator<=>(const Word& other) const = default;

  // Diagnostic form, e.g. "x1*x2^-1"; the empty word prints as "1".
  std::string str(const char* symbol = "x") const;

 private:
  int rank_ = 0;
  std::vector<std::int32_t> letters_;
};

// Cancels adjacent inverse pairs with a single stack scan.
std::vector<std::int32_t> free_reduce(const std::vector<std::int32_t>& letters);

// Rewrites a word over x_1..x_n in the alphabet g_i = x_1 x_2 ... x_i
// (substituting x_i = g_{i-1}^{-1} g_i) and back. Both directions return
// freely reduced words over the same rank.
Word to_g_alphabet(const Word& w);
Word from_g_alphabet(const Word& w);

// The element g_i = x_1 x_2 ... x_i as a word in the x-alphabet.
Word g_element(int rank, int i);

}  // namespace tburau
