#include "tburau/registry.hpp"

#include <cctype>
#include <stdexcept>

namespace tburau {

VariableRegistry::VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable registry must not be empty");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& n = names_[static_cast<std::size_t>(i)];
    if (!valid_name(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!index_.emplace(n, i).second)
      throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
}

std::optional<int> VariableRegistry::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool VariableRegistry::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string VariableRegistry::color_name(int color, int color_count) {
  if (color < 1 || color > color_count) throw std::invalid_argument("color out of range");
  if (color_count == 1) return "t";
  return "t" + std::to_string(color);
}

bool VariableRegistry::reserved_color_name(std::string_view name) {
  if (name.empty() || name[0] != 't') return false;
  for (char c : name.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;  // "t" or "t<digits>"
}

RegistryPtr make_registry(std::vector<std::string> names) {
  return std::make_shared<const VariableRegistry>(std::move(names));
}

RegistryPtr color_registry(int color_count, const std::vector<std::string>& extra) {
  if (color_count < 1) throw std::invalid_argument("need at least one color");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(color_count) + extra.size());
  for (int c = 1; c <= color_count; ++c) names.push_back(VariableRegistry::color_name(c, color_count));
  for (const std::string& n : extra) {
    if (VariableRegistry::reserved_color_name(n))
      throw std::invalid_argument("variable name '" + n + "' is reserved for colors");
    names.push_back(n);
  }
  return make_registry(std::move(names));
}

RegistryPtr unify_registries(const RegistryPtr& a, const RegistryPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw std::invalid_argument("variable registry mismatch");
}

}  // namespace tburau
