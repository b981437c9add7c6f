#include "tburau/braid.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tburau/errors.hpp"

namespace tburau {

namespace {

void check_surjective(const std::vector<int>& colors, int color_count) {
  std::set<int> seen(colors.begin(), colors.end());
  for (int c : colors)
    if (c < 1 || c > color_count) throw std::invalid_argument("color out of range");
  for (int c = 1; c <= color_count; ++c)
    if (!seen.count(c))
      throw std::invalid_argument("coloring is not surjective: color " + std::to_string(c) +
                                  " is unused");
}

}  // namespace

ColoredBraidWord::ColoredBraidWord(std::vector<BraidLetter> letters, std::vector<int> colors_top)
    : letters_(std::move(letters)), colors_top_(std::move(colors_top)) {
  if (colors_top_.empty()) throw std::invalid_argument("need at least one strand");
  strands_ = static_cast<int>(colors_top_.size());
  color_count_ = *std::max_element(colors_top_.begin(), colors_top_.end());
  check_surjective(colors_top_, color_count_);
  for (const BraidLetter& l : letters_) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (l.index < 1 || l.index >= strands_)
      throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                  " out of range 1.." + std::to_string(strands_ - 1));
  }
}

ColoredBraidWord ColoredBraidWord::inverse() const {
  std::vector<BraidLetter> rev(letters_.rbegin(), letters_.rend());
  for (BraidLetter& l : rev) l.sign = -l.sign;
  return ColoredBraidWord(std::move(rev), propagate_colors(*this));
}

ColoredBraidWord ColoredBraidWord::operator*(const ColoredBraidWord& below) const {
  if (strands_ != below.strands_) throw std::invalid_argument("strand count mismatch");
  if (propagate_colors(*this) != below.colors_top_)
    throw std::invalid_argument("colorings do not compose");
  std::vector<BraidLetter> cat = letters_;
  cat.insert(cat.end(), below.letters_.begin(), below.letters_.end());
  return ColoredBraidWord(std::move(cat), colors_top_);
}

std::string ColoredBraidWord::str() const {
  if (letters_.empty()) return "";
  std::ostringstream out;
  bool first = true;
  for (const BraidLetter& l : letters_) {
    if (!first) out << " ";
    first = false;
    out << "s" << l.index;
    if (l.sign < 0) out << "^-1";
  }
  return out.str();
}

Word artin_letter_image(const BraidLetter& letter, int j, int rank) {
  if (j < 1 || j > rank) throw std::invalid_argument("generator index out of range");
  int i = letter.index;
  if (letter.sign > 0) {
    if (j == i) return Word(rank, {i, i + 1, -i});
    if (j == i + 1) return Word(rank, {i});
  } else {
    if (j == i) return Word(rank, {i + 1});
    if (j == i + 1) return Word(rank, {-(i + 1), i, i + 1});
  }
  return Word(rank, {j});
}

Word apply_letter(const BraidLetter& letter, const Word& w) {
  std::vector<std::int32_t> out;
  for (std::int32_t l : w.letters()) {
    Word image = artin_letter_image(letter, std::abs(l), w.rank());
    if (l < 0) image = image.inverse();
    out.insert(out.end(), image.letters().begin(), image.letters().end());
  }
  return Word(w.rank(), std::move(out));
}

Word apply_braid(const ColoredBraidWord& braid, const Word& w) {
  if (w.rank() != braid.strands()) throw std::invalid_argument("rank does not match strand count");
  Word result = w;
  for (const BraidLetter& l : braid.letters()) result = apply_letter(l, result);
  return result;
}

std::vector<int> braid_permutation(const ColoredBraidWord& braid) {
  int n = braid.strands();
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
  // pos[i] tracks the current position of the strand entering at top i+1.
  for (const BraidLetter& l : braid.letters()) {
    for (int& p : pos) {
      if (p == l.index)
        p = l.index + 1;
      else if (p == l.index + 1)
        p = l.index;
    }
  }
  return pos;
}

std::vector<int> propagate_colors(const ColoredBraidWord& braid) {
  return color_steps(braid).back();
}

std::vector<std::vector<int>> color_steps(const ColoredBraidWord& braid) {
  std::vector<std::vector<int>> steps;
  steps.reserve(braid.letters().size() + 1);
  steps.push_back(braid.colors_top());
  for (const BraidLetter& l : braid.letters()) {
    std::vector<int> next = steps.back();
    std::swap(next[static_cast<std::size_t>(l.index - 1)],
              next[static_cast<std::size_t>(l.index)]);
    steps.push_back(std::move(next));
  }
  return steps;
}

bool preserves_colors(const ColoredBraidWord& braid) {
  return propagate_colors(braid) == braid.colors_top();
}

ColoredBraidWord parse_braid(const std::string& text, std::vector<int> colors_top) {
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t token_start = pos;
    if (text[pos] != 's') throw ParseError("expected a generator token like 's1'", pos);
    ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected a generator index after 's'", token_start);
    int index = std::stoi(text.substr(digits, pos - digits));
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      std::size_t estart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (estart == pos) throw ParseError("expected an exponent after '^'", token_start);
      exponent = std::stoll(text.substr(estart, pos - estart));
      if (negative) exponent = -exponent;
      if (exponent == 0) throw ParseError("exponent must be nonzero", token_start);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("malformed braid token", pos);
    int sign = exponent > 0 ? 1 : -1;
    for (long long r = 0; r < std::abs(exponent); ++r) letters.push_back({index, sign});
  }
  return ColoredBraidWord(std::move(letters), std::move(colors_top));
}

}  // namespace tburau
