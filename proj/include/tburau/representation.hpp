#pragma once

#include <string>
#include <vector>

#include "tburau/braid.hpp"
#include "tburau/group_ring.hpp"
#include "tburau/matrix.hpp"
#include "tburau/word.hpp"

namespace tburau {

// Surjective assignment of a color in 1..color_count to each strand.
class ColorMap {
 public:
  explicit ColorMap(std::vector<int> colors);

  int strands() const { return static_cast<int>(colors_.size()); }
  int color_count() const { return color_count_; }
  int color(int strand) const { return colors_.at(static_cast<std::size_t>(strand - 1)); }
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const ColorMap&) const = default;

 private:
  std::vector<int> colors_;
  int color_count_ = 1;
};

// A representation rho: F_n -> GL_k(R), stored as the images of the free
// generators. Every image must have unit determinant (+- a monomial), which
// makes the cached inverses exact (adjugate over determinant).
class Representation {
 public:
  Representation(RegistryPtr registry, int rank, int dim, std::vector<RingMatrix> images,
                 std::string name = "");

  // One-dimensional representation sending every generator to 1, over the
  // registry holding only the color variables.
  static Representation trivial(int rank, int color_count);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  RegistryPtr registry() const { return registry_; }
  const std::string& name() const { return name_; }
  const RingMatrix& image(int i) const;            // 1-based
  const RingMatrix& image_inverse(int i) const;    // 1-based
  const LaurentPoly& image_determinant(int i) const;
  std::vector<LaurentPoly> image_determinants() const;

 private:
  RegistryPtr registry_;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<RingMatrix> images_;
  std::vector<RingMatrix> inverses_;
  std::vector<LaurentPoly> determinants_;
  std::string name_;
};

// Loads the JSON representation format:
//   { "n": 2, "k": 2, "variables": ["s"], "name": "...",
//     "images": [ [["-s","1"],["0","1"]], [["1","0"],["s","-s"]] ] }
// Entries are polynomial strings; color variables (implied by color_count)
// are reserved and may not appear in images.
Representation load_representation(const std::string& json_text, int color_count);
Representation load_representation_file(const std::string& path, int color_count);

// rho(w): multiplicative evaluation; inverse letters use cached inverses.
RingMatrix evaluate(const Representation& rho, const Word& w);

// psi_c(w) as a Laurent monomial in the color variables.
LaurentPoly color_monomial(const RegistryPtr& registry, const ColorMap& colors, const Word& w);

// (rho (x) psi_c): word w maps to rho(w) * t^{psi_c(w)}, extended Z-linearly
// to the group ring.
RingMatrix twisted_evaluate(const Representation& rho, const ColorMap& colors, const Word& w);
RingMatrix twisted_evaluate(const Representation& rho, const ColorMap& colors,
                            const GroupRingElement& a);

// As above, but for elements written in the g-alphabet (g_i = x_1..x_i):
// every word key is converted back to the x-alphabet before evaluation.
RingMatrix twisted_evaluate_g(const Representation& rho, const ColorMap& colors,
                              const GroupRingElement& g_element);

// (beta_* rho)(x_i) = rho(x_i beta).
Representation pullback(const Representation& rho, const ColoredBraidWord& braid);

struct ExtensionReport {
  bool extends = false;
  std::vector<int> failing_generators;  // 1-based indices i with rho(x_i beta) != rho(x_i)
};

// Checks rho(x_i beta) = rho(x_i) exactly for every generator; when this
// holds, rho factors through the fundamental group of the closure.
ExtensionReport extends_to_closure(const Representation& rho, const ColoredBraidWord& braid);

}  // namespace tburau
