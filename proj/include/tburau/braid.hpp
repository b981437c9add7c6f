#pragma once

#include <string>
#include <vector>

#include "tburau/word.hpp"

namespace tburau {

// One Artin generator sigma_index^sign.
struct BraidLetter {
  int index = 1;  // 1..n-1
  int sign = 1;   // +1 or -1

  bool operator==(const BraidLetter&) const = default;
};

// A braid word on n strands together with the coloring of its top endpoints.
// Letters are read top to bottom, so textual left-to-right order is the
// composition order of the corresponding automorphisms. The top coloring
// must be surjective onto 1..color_count.
class ColoredBraidWord {
 public:
  ColoredBraidWord(std::vector<BraidLetter> letters, std::vector<int> colors_top);

  static ColoredBraidWord identity(std::vector<int> colors_top) {
    return ColoredBraidWord({}, std::move(colors_top));
  }

  int strands() const { return strands_; }
  int color_count() const { return color_count_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  const std::vector<int>& colors_top() const { return colors_top_; }

  // Inverse braid: reversed letters with flipped signs; its top coloring is
  // this braid's bottom coloring.
  ColoredBraidWord inverse() const;

  // Composition: *this stacked on top of `below`. The bottom coloring of
  // *this must equal the top coloring of `below`.
  ColoredBraidWord operator*(const ColoredBraidWord& below) const;

  bool operator==(const ColoredBraidWord&) const = default;

  std::string str() const;

 private:
  int strands_ = 1;
  int color_count_ = 1;
  std::vector<BraidLetter> letters_;
  std::vector<int> colors_top_;
};

// Image of the generator x_j under one Artin letter acting on the right:
//   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i,        else fixed
//   sigma_i^{-1}: x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}, else fixed
Word artin_letter_image(const BraidLetter& letter, int j, int rank);

// Right action of the whole braid word on a word in F_n, substituting
// homomorphically letter by letter, left to right.
Word apply_braid(const ColoredBraidWord& braid, const Word& w);
Word apply_letter(const BraidLetter& letter, const Word& w);

// Underlying permutation: entry i (1-based) is the bottom position of the
// strand entering at top position i.
std::vector<int> braid_permutation(const ColoredBraidWord& braid);

// Bottom coloring c' with c'_{pi(i)} = c_i.
std::vector<int> propagate_colors(const ColoredBraidWord& braid);

// All intermediate colorings: entry 0 is the top coloring, entry p the
// coloring after the first p letters (so the last entry is the bottom one).
std::vector<std::vector<int>> color_steps(const ColoredBraidWord& braid);

// True when the bottom coloring equals the top one (the braid lies in B_c).
bool preserves_colors(const ColoredBraidWord& braid);

// Parses whitespace-separated tokens `s<i>` or `s<i>^<e>` (e a nonzero
// signed integer) into a braid word on strands = colors_top.size() strands.
ColoredBraidWord parse_braid(const std::string& text, std::vector<int> colors_top);

}  // namespace tburau
