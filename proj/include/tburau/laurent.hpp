#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tburau/bigint.hpp"
#include "tburau/registry.hpp"

namespace tburau {

// Exponent vector of a Laurent monomial, stored sparsely: pairs of
// (variable index, nonzero exponent) sorted by variable index.
class Monomial {
 public:
  using Entry = std::pair<std::int32_t, std::int64_t>;

  Monomial() = default;
  static Monomial variable(int index, std::int64_t exponent = 1);

  bool is_one() const { return entries_.empty(); }
  std::int64_t exponent(int variable) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& other) const;
  Monomial inverse() const;
  Monomial pow(std::int64_t e) const;

  // Componentwise exponent comparison, meaningful for ordinary (non-negative)
  // exponent vectors: *this divides m iff every exponent is <= m's.
  bool divides(const Monomial& m) const;
  Monomial divide_by(const Monomial& m) const { return *this * m.inverse(); }

  bool operator==(const Monomial& other) const { return entries_ == other.entries_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Entry> entries_;
};

// Lexicographic order following the registry's declared variable order
// (variable 0 weighs most). Returns <0, 0, >0.
int lex_compare(const Monomial& a, const Monomial& b);

struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) < 0; }
};

// Sparse multivariate Laurent polynomial with integer coefficients.
// Invariants: no zero coefficients are stored; the registry pointer is null
// only for pure integer constants.
class LaurentPoly {
 public:
  using Terms = std::map<Monomial, Int, MonomialLexLess>;

  LaurentPoly() = default;  // zero
  explicit LaurentPoly(long long value);
  explicit LaurentPoly(Int value);
  static LaurentPoly constant(RegistryPtr registry, Int value);
  static LaurentPoly variable(RegistryPtr registry, int index, std::int64_t exponent = 1);
  static LaurentPoly from_monomial(RegistryPtr registry, Monomial m, Int coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Unit of the Laurent ring: a single term with coefficient +-1.
  bool is_unit() const;
  // +- a single monomial with any nonzero integer coefficient.
  bool is_term() const { return terms_.size() == 1; }

  const Terms& terms() const { return terms_; }
  RegistryPtr registry() const { return registry_; }
  std::size_t term_count() const { return terms_.size(); }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  // Equality of values; registries must be compatible.
  bool operator==(const LaurentPoly& other) const;
  bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

  // Multiply by coefficient * monomial (an invertible scaling when the
  // coefficient is +-1).
  LaurentPoly scaled(const Monomial& m, const Int& coefficient) const;

  // Non-negative exponents always; negative exponents require a unit base.
  LaurentPoly pow(std::int64_t exponent) const;

  // Inverse of a unit (+- monomial); throws std::invalid_argument otherwise.
  LaurentPoly unit_inverse() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Int& c);

  RegistryPtr registry_;
  Terms terms_;

  friend LaurentPoly poly_add(const LaurentPoly&, const LaurentPoly&, int sign);
  friend LaurentPoly poly_mul(const LaurentPoly&, const LaurentPoly&);
};

std::string to_string(const LaurentPoly& p);

// Quotient of two Laurent polynomials, kept unreduced. The denominator is
// nonzero by construction.
struct RationalFunction {
  LaurentPoly numerator;
  LaurentPoly denominator = LaurentPoly(1);
};

RationalFunction make_rational(LaurentPoly numerator, LaurentPoly denominator);
std::string to_string(const RationalFunction& f);

// Canonical representative of p modulo +-1 and monomial factors:
// p == sign * shift * canonical, where canonical has every variable's
// minimum exponent equal to zero and a normalized leading sign.
struct CanonicalParts {
  LaurentPoly canonical;
  Monomial shift;
  int sign = 1;
};

enum class SignRule {
  kGreatestTermPositive,  // used by unit-equality decisions
  kLeastTermPositive,     // used for display, keeps small constant terms positive
};

CanonicalParts canonical_unit_form(const LaurentPoly& p,
                                   SignRule rule = SignRule::kGreatestTermPositive);

// Certificate for equality up to units: lhs == sign * monomial *
// prod(generators[i]^unit_exponents[i]) * rhs.
struct UnitWitness {
  int sign = 1;
  Monomial monomial;
  std::vector<std::int64_t> unit_exponents;
};

// Decides p == (+-1) * m * u * q with m a registry monomial and u a product
// of integer powers of the given unit generators (each of which must be
// +- a single monomial; std::invalid_argument otherwise).
std::optional<UnitWitness> equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q,
                                             const std::vector<LaurentPoly>& unit_generators = {});

// Cross-multiplied comparison of two fractions, avoiding any GCD.
std::optional<UnitWitness> rat_equal_up_to_units(const RationalFunction& f,
                                                 const RationalFunction& g,
                                                 const std::vector<LaurentPoly>& unit_generators = {});

// Exact quotient p / q in the Laurent ring, or nullopt when q does not
// divide p. Throws std::invalid_argument when q is zero. Arguments are
// cleared to ordinary polynomials by a monomial shift, then reduced by
// multivariate long division under the lexicographic order.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q);

// Homomorphic evaluation. Variables absent from `images` are kept. A variable
// occurring with a negative exponent must be sent to a unit (+- monomial);
// otherwise std::invalid_argument.
LaurentPoly substitute(const LaurentPoly& p, const std::map<int, LaurentPoly>& images);
LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images);

// Re-expresses p over `target`, matching variables by name. Throws
// std::invalid_argument if a variable in use is missing from the target.
LaurentPoly convert_registry(const LaurentPoly& p, const RegistryPtr& target);

// Parses the grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR ('^' SINT)? | '(' expr ')' | '-' factor
// Implicit multiplication is not accepted. Throws ParseError with position.
LaurentPoly parse_poly(const std::string& text, const RegistryPtr& registry);

}  // namespace tburau
