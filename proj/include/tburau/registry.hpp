#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tburau {

// Ordered list of distinct variable names. Color variables come first
// (named "t" when there is a single color, "t1".."tmu" otherwise), followed
// by any ring variables declared by a representation (such as "s").
// The declared order fixes the lexicographic monomial order.
class VariableRegistry {
 public:
  explicit VariableRegistry(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  bool operator==(const VariableRegistry& other) const { return names_ == other.names_; }
  bool operator!=(const VariableRegistry& other) const { return !(*this == other); }

  // Identifier grammar: [a-zA-Z][a-zA-Z0-9_]*
  static bool valid_name(std::string_view name);
  // "t" for a single color, "t<c>" otherwise; colors are 1-based.
  static std::string color_name(int color, int color_count);
  // Names of the shape "t" or "t<digits>" are reserved for colors.
  static bool reserved_color_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

RegistryPtr make_registry(std::vector<std::string> names);

// Registry with the color variables for `color_count` colors followed by
// `extra` ring variables. Extra names must not collide with reserved color names.
RegistryPtr color_registry(int color_count, const std::vector<std::string>& extra = {});

// Common registry of two operands: null acts as a wildcard (pure constants);
// otherwise the registries must agree. Throws std::invalid_argument on mismatch.
RegistryPtr unify_registries(const RegistryPtr& a, const RegistryPtr& b);

}  // namespace tburau
