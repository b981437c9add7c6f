#include "tburau/laurent.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tburau {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(int index, std::int64_t exponent) {
  if (index < 0) throw std::invalid_argument("negative variable index");
  Monomial m;
  if (exponent != 0) m.entries_.push_back({static_cast<std::int32_t>(index), exponent});
  return m;
}

std::int64_t Monomial::exponent(int variable) const {
  for (const Entry& e : entries_)
    if (e.first == variable) return e.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.entries_.reserve(entries_.size() + other.entries_.size());
  std::size_t i = 0, j = 0;
  while (i < entries_.size() || j < other.entries_.size()) {
    if (j == other.entries_.size() ||
        (i < entries_.size() && entries_[i].first < other.entries_[j].first)) {
      r.entries_.push_back(entries_[i++]);
    } else if (i == entries_.size() || other.entries_[j].first < entries_[i].first) {
      r.entries_.push_back(other.entries_[j++]);
    } else {
      std::int64_t e = entries_[i].second + other.entries_[j].second;
      if (e != 0) r.entries_.push_back({entries_[i].first, e});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (Entry& e : r.entries_) e.second = -e.second;
  return r;
}

Monomial Monomial::pow(std::int64_t e) const {
  Monomial r = *this;
  if (e == 0) return Monomial();
  for (Entry& entry : r.entries_) entry.second *= e;
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  for (const Entry& e : entries_)
    if (e.second > m.exponent(e.first)) return false;
  return true;
}

int lex_compare(const Monomial& a, const Monomial& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    std::int32_t va = i < ea.size() ? ea[i].first : std::numeric_limits<std::int32_t>::max();
    std::int32_t vb = j < eb.size() ? eb[j].first : std::numeric_limits<std::int32_t>::max();
    std::int64_t xa = 0, xb = 0;
    if (va <= vb) xa = ea[i].second;
    if (vb <= va) xb = eb[j].second;
    if (xa != xb) return xa < xb ? -1 : 1;
    if (va <= vb) ++i;
    if (vb <= va) ++j;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long long value) {
  if (value != 0) terms_.emplace(Monomial(), Int(value));
}

LaurentPoly::LaurentPoly(Int value) {
  if (value != 0) terms_.emplace(Monomial(), std::move(value));
}

LaurentPoly LaurentPoly::constant(RegistryPtr registry, Int value) {
  LaurentPoly p(std::move(value));
  p.registry_ = std::move(registry);
  return p;
}

LaurentPoly LaurentPoly::variable(RegistryPtr registry, int index, std::int64_t exponent) {
  if (!registry) throw std::invalid_argument("variable needs a registry");
  if (index < 0 || index >= registry->size())
    throw std::invalid_argument("variable index out of registry range");
  LaurentPoly p;
  p.registry_ = std::move(registry);
  p.terms_.emplace(Monomial::variable(index, exponent), Int(1));
  return p;
}

LaurentPoly LaurentPoly::from_monomial(RegistryPtr registry, Monomial m, Int coefficient) {
  LaurentPoly p;
  p.registry_ = std::move(registry);
  if (coefficient != 0) {
    if (!m.is_one() && !p.registry_) throw std::invalid_argument("monomial needs a registry");
    p.terms_.emplace(std::move(m), std::move(coefficient));
  }
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void LaurentPoly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b, int sign) {
  LaurentPoly r;
  r.registry_ = unify_registries(a.registry_, b.registry_);
  r.terms_ = a.terms_;
  for (const auto& [m, c] : b.terms_) r.add_term(m, sign > 0 ? c : Int(-c));
  return r;
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.registry_ = unify_registries(a.registry_, b.registry_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const { return poly_add(*this, other, +1); }
LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return poly_add(*this, other, -1); }
LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const { return poly_mul(*this, other); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return *this = *this + other; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this = *this - other; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  unify_registries(registry_, other.registry_);
  if (terms_.size() != other.terms_.size()) return false;
  return std::equal(terms_.begin(), terms_.end(), other.terms_.begin());
}

LaurentPoly LaurentPoly::scaled(const Monomial& m, const Int& coefficient) const {
  LaurentPoly r;
  r.registry_ = registry_;
  if (coefficient == 0) return r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono * m, c * coefficient);
  return r;
}

LaurentPoly LaurentPoly::pow(std::int64_t exponent) const {
  if (exponent < 0) return unit_inverse().pow(-exponent);
  LaurentPoly result = LaurentPoly::constant(registry_, 1);
  LaurentPoly base = *this;
  for (std::int64_t e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::invalid_argument("not a unit (expected +- a single monomial)");
  const auto& [m, c] = *terms_.begin();
  return from_monomial(registry_, m.inverse(), c);
}

// ---------------------------------------------------------------------------
// Canonicalization and unit equality

CanonicalParts canonical_unit_form(const LaurentPoly& p, SignRule rule) {
  CanonicalParts parts;
  if (p.is_zero()) {
    parts.canonical = p;
    return parts;
  }
  // Per-variable minimum exponent over all terms; a variable missing from
  // some term contributes exponent zero there.
  std::map<std::int32_t, std::int64_t> min_exp;
  std::set<std::int32_t> support;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.entries()) support.insert(v);
  for (std::int32_t v : support) {
    std::int64_t lo = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      std::int64_t e = m.exponent(v);
      lo = first ? e : std::min(lo, e);
      first = false;
    }
    if (lo != 0) min_exp[v] = lo;
  }
  Monomial shift;
  for (const auto& [v, e] : min_exp) shift = shift * Monomial::variable(v, e);
  LaurentPoly base = p.scaled(shift.inverse(), Int(1));
  const Int& lead = rule == SignRule::kGreatestTermPositive ? base.terms().rbegin()->second
                                                            : base.terms().begin()->second;
  int sign = lead < 0 ? -1 : 1;
  parts.canonical = sign < 0 ? -base : base;
  parts.shift = shift;
  parts.sign = sign;
  return parts;
}

std::optional<UnitWitness> equal_up_to_units(const LaurentPoly& p, const LaurentPoly& q,
                                             const std::vector<LaurentPoly>& unit_generators) {
  for (const LaurentPoly& g : unit_generators)
    if (!g.is_unit())
      throw std::invalid_argument("unit generator is not +- a single monomial: " + g.str());
  unify_registries(p.registry(), q.registry());
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero())
      return UnitWitness{1, Monomial(), std::vector<std::int64_t>(unit_generators.size(), 0)};
    return std::nullopt;
  }
  CanonicalParts cp = canonical_unit_form(p);
  CanonicalParts cq = canonical_unit_form(q);
  if (!(cp.canonical == cq.canonical)) return std::nullopt;
  UnitWitness w;
  w.sign = cp.sign * cq.sign;
  w.monomial = cp.shift * cq.shift.inverse();
  w.unit_exponents.assign(unit_generators.size(), 0);
  return w;
}

std::optional<UnitWitness> rat_equal_up_to_units(const RationalFunction& f,
                                                 const RationalFunction& g,
                                                 const std::vector<LaurentPoly>& unit_generators) {
  if (f.denominator.is_zero() || g.denominator.is_zero())
    throw std::invalid_argument("zero denominator");
  return equal_up_to_units(f.numerator * g.denominator, g.numerator * f.denominator,
                           unit_generators);
}

// ---------------------------------------------------------------------------
// Exact division

namespace {

// Shift carrying every variable's minimum exponent, so that p / shift is an
// ordinary polynomial whose minimum exponent per variable is exactly zero.
// The exactness matters: the lowest slice of a product in each variable is
// the product of the factors' lowest slices, so Laurent divisibility turns
// into ordinary divisibility only after both arguments are fully grounded.
Monomial min_exponent_shift(const LaurentPoly& p) {
  std::set<std::int32_t> support;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m.entries()) support.insert(v);
  Monomial shift;
  for (std::int32_t v : support) {
    std::int64_t lo = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
      lo = first ? m.exponent(v) : std::min(lo, m.exponent(v));
      first = false;
    }
    if (lo != 0) shift = shift * Monomial::variable(v, lo);
  }
  return shift;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
  RegistryPtr reg = unify_registries(p.registry(), q.registry());
  if (p.is_zero()) return LaurentPoly::constant(reg, 0);

  Monomial sp = min_exponent_shift(p);
  Monomial sq = min_exponent_shift(q);
  LaurentPoly rem = p.scaled(sp.inverse(), Int(1));
  LaurentPoly div = q.scaled(sq.inverse(), Int(1));

  const auto& [lead_m, lead_c] = *div.terms().rbegin();
  LaurentPoly quotient = LaurentPoly::constant(reg, 0);
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (!lead_m.divides(rm) || rc % lead_c != 0) return std::nullopt;
    Monomial qm = rm.divide_by(lead_m);
    Int qc = rc / lead_c;
    quotient += LaurentPoly::from_monomial(reg, qm, qc);
    rem -= div.scaled(qm, qc);
  }
  // p / q = (rem0 * sp) / (div0 * sq) with quotient = rem0 / div0.
  return quotient.scaled(sp * sq.inverse(), Int(1));
}

// ---------------------------------------------------------------------------
// Substitution and registry conversion

LaurentPoly substitute(const LaurentPoly& p, const std::map<int, LaurentPoly>& images) {
  RegistryPtr reg = p.registry();
  for (const auto& [v, image] : images) reg = unify_registries(reg, image.registry());
  LaurentPoly result = LaurentPoly::constant(reg, 0);
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly factor = LaurentPoly::constant(reg, c);
    for (const auto& [v, e] : m.entries()) {
      auto it = images.find(v);
      if (it == images.end()) {
        factor *= LaurentPoly::variable(reg, v, e);
      } else if (e >= 0) {
        factor *= it->second.pow(e);
      } else {
        if (!it->second.is_unit())
          throw std::invalid_argument("non-unit substitution for variable '" + reg->name(v) +
                                      "' occurring with a negative exponent");
        factor *= it->second.pow(e);
      }
    }
    result += factor;
  }
  return result;
}

LaurentPoly substitute(const LaurentPoly& p, const std::map<std::string, LaurentPoly>& images) {
  if (!p.registry()) {
    if (!images.empty() && p.is_zero()) return p;
    if (!p.is_constant()) throw std::invalid_argument("polynomial has no registry");
    return p;
  }
  std::map<int, LaurentPoly> by_index;
  for (const auto& [name, image] : images) {
    auto idx = p.registry()->find(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
    by_index.emplace(*idx, image);
  }
  return substitute(p, by_index);
}

LaurentPoly convert_registry(const LaurentPoly& p, const RegistryPtr& target) {
  if (!target) throw std::invalid_argument("conversion target registry is null");
  if (!p.registry()) return LaurentPoly::from_monomial(target, Monomial(), Int(0)) + p;
  LaurentPoly result = LaurentPoly::constant(target, 0);
  for (const auto& [m, c] : p.terms()) {
    Monomial mapped;
    for (const auto& [v, e] : m.entries()) {
      auto idx = target->find(p.registry()->name(v));
      if (!idx)
        throw std::invalid_argument("variable '" + p.registry()->name(v) +
                                    "' is missing from the target registry");
      mapped = mapped * Monomial::variable(*idx, e);
    }
    result += LaurentPoly::from_monomial(target, mapped, c);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_monomial(std::ostream& out, const Monomial& m, const RegistryPtr& reg) {
  // Variables are printed by name in alphabetical order (so "s*t^2" rather
  // than registry order), which matches the usual written form.
  std::vector<std::pair<std::string, std::int64_t>> parts;
  for (const auto& [v, e] : m.entries()) parts.push_back({reg->name(v), e});
  std::sort(parts.begin(), parts.end());
  bool first = true;
  for (const auto& [name, e] : parts) {
    if (!first) out << "*";
    first = false;
    out << name;
    if (e != 1) out << "^" << e;
  }
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      print_monomial(out, m, registry_);
    }
  }
  return out.str();
}

std::string to_string(const LaurentPoly& p) { return p.str(); }

RationalFunction make_rational(LaurentPoly numerator, LaurentPoly denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("zero denominator");
  unify_registries(numerator.registry(), denominator.registry());
  return RationalFunction{std::move(numerator), std::move(denominator)};
}

std::string to_string(const RationalFunction& f) {
  return "(" + f.numerator.str() + ") / (" + f.denominator.str() + ")";
}

}  // namespace tburau
