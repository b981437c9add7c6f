#include "tburau/representation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tburau {

ColorMap::ColorMap(std::vector<int> colors) : colors_(std::move(colors)) {
  if (colors_.empty()) throw std::invalid_argument("empty coloring");
  color_count_ = *std::max_element(colors_.begin(), colors_.end());
  std::set<int> seen(colors_.begin(), colors_.end());
  for (int c : colors_)
    if (c < 1) throw std::invalid_argument("colors must be positive");
  for (int c = 1; c <= color_count_; ++c)
    if (!seen.count(c))
      throw std::invalid_argument("coloring is not surjective: color " + std::to_string(c) +
                                  " is unused");
}

Representation::Representation(RegistryPtr registry, int rank, int dim,
                               std::vector<RingMatrix> images, std::string name)
    : registry_(std::move(registry)), rank_(rank), dim_(dim), name_(std::move(name)) {
  if (rank_ < 1) throw std::invalid_argument("rank must be at least 1");
  if (dim_ < 1) throw std::invalid_argument("dimension must be at least 1");
  if (static_cast<int>(images.size()) != rank_)
    throw std::invalid_argument("expected " + std::to_string(rank_) + " generator images");
  images_ = std::move(images);
  inverses_.reserve(images_.size());
  determinants_.reserve(images_.size());
  for (int i = 0; i < rank_; ++i) {
    const RingMatrix& m = images_[static_cast<std::size_t>(i)];
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("image of x" + std::to_string(i + 1) + " is not " +
                                  std::to_string(dim_) + "x" + std::to_string(dim_));
    LaurentPoly det = determinant(m);
    if (!det.is_unit())
      throw std::invalid_argument("image of x" + std::to_string(i + 1) +
                                  " has non-unit determinant " + det.str());
    determinants_.push_back(det);
    inverses_.push_back(unit_inverse(m));
  }
}

Representation Representation::trivial(int rank, int color_count) {
  RegistryPtr reg = color_registry(color_count);
  std::vector<RingMatrix> images(static_cast<std::size_t>(rank), identity_matrix(1));
  return Representation(std::move(reg), rank, 1, std::move(images), "trivial");
}

const RingMatrix& Representation::image(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
  return images_[static_cast<std::size_t>(i - 1)];
}

const RingMatrix& Representation::image_inverse(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
  return inverses_[static_cast<std::size_t>(i - 1)];
}

const LaurentPoly& Representation::image_determinant(int i) const {
  if (i < 1 || i > rank_) throw std::invalid_argument("generator index out of range");
  return determinants_[static_cast<std::size_t>(i - 1)];
}

std::vector<LaurentPoly> Representation::image_determinants() const { return determinants_; }

Representation load_representation(const std::string& json_text, int color_count) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("representation file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("representation document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("representation needs an integer field 'n'");
  if (!doc.contains("k") || !doc["k"].is_number_integer())
    throw std::invalid_argument("representation needs an integer field 'k'");
  int n = doc["n"].get<int>();
  int k = doc["k"].get<int>();
  std::vector<std::string> extra;
  if (doc.contains("variables")) {
    for (const auto& v : doc["variables"]) {
      if (!v.is_string()) throw std::invalid_argument("'variables' must hold strings");
      extra.push_back(v.get<std::string>());
    }
  }
  std::string name = doc.value("name", std::string());
  RegistryPtr reg = color_registry(color_count, extra);

  if (!doc.contains("images") || !doc["images"].is_array() ||
      static_cast<int>(doc["images"].size()) != n)
    throw std::invalid_argument("'images' must be an array of n matrices");

  // Color variables may not appear inside generator images.
  auto check_no_color = [&](const LaurentPoly& p, const std::string& where) {
    for (const auto& [m, c] : p.terms())
      for (const auto& [v, e] : m.entries())
        if (v < color_count)
          throw std::invalid_argument("color variable '" + reg->name(v) + "' used in " + where);
  };

  std::vector<RingMatrix> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& rows = doc["images"][static_cast<std::size_t>(i)];
    if (!rows.is_array() || static_cast<int>(rows.size()) != k)
      throw std::invalid_argument("image of x" + std::to_string(i + 1) + " must be a " +
                                  std::to_string(k) + "x" + std::to_string(k) + " matrix");
    RingMatrix m = zero_matrix(k, k);
    for (int r = 0; r < k; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != k)
        throw std::invalid_argument("image of x" + std::to_string(i + 1) + " must be a " +
                                    std::to_string(k) + "x" + std::to_string(k) + " matrix");
      for (int c = 0; c < k; ++c) {
        const auto& cell = row[static_cast<std::size_t>(c)];
        if (!cell.is_string())
          throw std::invalid_argument("matrix entries must be polynomial strings");
        LaurentPoly p = parse_poly(cell.get<std::string>(), reg);
        check_no_color(p, "the image of x" + std::to_string(i + 1));
        m(r, c) = std::move(p);
      }
    }
    images.push_back(std::move(m));
  }
  return Representation(std::move(reg), n, k, std::move(images), std::move(name));
}

Representation load_representation_file(const std::string& path, int color_count) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open representation file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_representation(buffer.str(), color_count);
}

namespace {

// The first color_count registry entries must be the color variables this
// map indexes; anything else silently mixes colors with ring variables.
void check_color_registry(const RegistryPtr& registry, const ColorMap& colors) {
  if (!registry) throw std::invalid_argument("twisted evaluation needs a registry");
  int mu = colors.color_count();
  if (registry->size() < mu)
    throw std::invalid_argument("registry has fewer variables than colors");
  for (int c = 1; c <= mu; ++c)
    if (registry->name(c - 1) != VariableRegistry::color_name(c, mu))
      throw std::invalid_argument("registry variable '" + registry->name(c - 1) +
                                  "' does not match color variable '" +
                                  VariableRegistry::color_name(c, mu) + "'");
}

}  // namespace

RingMatrix evaluate(const Representation& rho, const Word& w) {
  if (w.rank() != rho.rank()) throw std::invalid_argument("word rank does not match representation");
  RingMatrix result = identity_matrix(rho.dim());
  for (std::int32_t l : w.letters()) {
    const RingMatrix& factor = l > 0 ? rho.image(l) : rho.image_inverse(-l);
    result = result * factor;
  }
  return result;
}

LaurentPoly color_monomial(const RegistryPtr& registry, const ColorMap& colors, const Word& w) {
  if (w.rank() != colors.strands())
    throw std::invalid_argument("word rank does not match coloring");
  check_color_registry(registry, colors);
  Monomial m;
  for (std::int32_t l : w.letters()) {
    int color = colors.color(std::abs(l));
    m = m * Monomial::variable(color - 1, l > 0 ? 1 : -1);
  }
  return LaurentPoly::from_monomial(registry, m, Int(1));
}

RingMatrix twisted_evaluate(const Representation& rho, const ColorMap& colors, const Word& w) {
  return evaluate(rho, w) * color_monomial(rho.registry(), colors, w);
}

RingMatrix twisted_evaluate(const Representation& rho, const ColorMap& colors,
                            const GroupRingElement& a) {
  if (a.rank() != rho.rank())
    throw std::invalid_argument("group ring rank does not match representation");
  RingMatrix result = zero_matrix(rho.dim(), rho.dim());
  for (const auto& [w, c] : a.terms())
    result += twisted_evaluate(rho, colors, w) * LaurentPoly(c);
  return result;
}

RingMatrix twisted_evaluate_g(const Representation& rho, const ColorMap& colors,
                              const GroupRingElement& g_element) {
  if (g_element.rank() != rho.rank())
    throw std::invalid_argument("group ring rank does not match representation");
  RingMatrix result = zero_matrix(rho.dim(), rho.dim());
  for (const auto& [w, c] : g_element.terms())
    result += twisted_evaluate(rho, colors, from_g_alphabet(w)) * LaurentPoly(c);
  return result;
}

Representation pullback(const Representation& rho, const ColoredBraidWord& braid) {
  if (braid.strands() != rho.rank())
    throw std::invalid_argument("strand count does not match representation rank");
  std::vector<RingMatrix> images;
  images.reserve(static_cast<std::size_t>(rho.rank()));
  for (int i = 1; i <= rho.rank(); ++i)
    images.push_back(evaluate(rho, apply_braid(braid, Word::generator(rho.rank(), i))));
  return Representation(rho.registry(), rho.rank(), rho.dim(), std::move(images), rho.name());
}

ExtensionReport extends_to_closure(const Representation& rho, const ColoredBraidWord& braid) {
  if (braid.strands() != rho.rank())
    throw std::invalid_argument("strand count does not match representation rank");
  ExtensionReport report;
  for (int i = 1; i <= rho.rank(); ++i) {
    RingMatrix acted = evaluate(rho, apply_braid(braid, Word::generator(rho.rank(), i)));
    if (!mat_equal(acted, rho.image(i))) report.failing_generators.push_back(i);
  }
  report.extends = report.failing_generators.empty();
  return report;
}

}  // namespace tburau
