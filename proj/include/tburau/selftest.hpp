#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "tburau/braid.hpp"
#include "tburau/laurent.hpp"
#include "tburau/representation.hpp"

namespace tburau::selftest {

using Rng = std::mt19937_64;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;

  bool pass() const { return failures == 0; }
  void fail(const std::string& message);
};

// Random inputs -------------------------------------------------------------

Word random_word(Rng& rng, int rank, int max_len);
LaurentPoly random_poly(Rng& rng, const RegistryPtr& registry, int max_terms, int max_exp);

// Random braid with a random surjective coloring.
ColoredBraidWord random_braid(Rng& rng, int max_strands, int max_len);
// Random braid colored constantly on each permutation cycle, so it lies in B_c.
ColoredBraidWord random_color_preserving_braid(Rng& rng, int max_strands, int max_len);

// Random representation with unit-determinant images (products of a unit
// lower-triangular and an upper-triangular matrix with +-s^e diagonal).
Representation random_representation(Rng& rng, int rank, int color_count, int max_dim);
// All images are powers of one random matrix, indexed by strand color; such a
// representation extends to the closure of every braid in B_c.
Representation random_commuting_representation(Rng& rng, const ColoredBraidWord& braid,
                                               int max_dim);

// The 2-dimensional GL_2(Z[s^{+-1}]) representation used throughout the knot
// examples, loaded from its JSON text (exercising the loader).
Representation trefoil_representation();
extern const char* const kTrefoilJson;

// Suites ---------------------------------------------------------------------
// Each suite returns the number of checked cases and any failures.

SuiteResult fox_fundamental_identity(Rng& rng, int words, int max_rank, int max_len);
SuiteResult laurent_ring_axioms(Rng& rng, int cases);
SuiteResult parser_roundtrip(Rng& rng, int cases);
SuiteResult word_action_properties(Rng& rng, int cases);
SuiteResult determinant_identities(Rng& rng, int cases);
SuiteResult cocycle_law(Rng& rng, int cases);
SuiteResult route_equivalence(Rng& rng, int cases);
SuiteResult reduced_structure(Rng& rng, int cases);
SuiteResult theorem_verification(Rng& rng, int cases);
SuiteResult untwisted_specialization(Rng& rng, int cases);
SuiteResult wada_choice_independence(Rng& rng, int cases);
SuiteResult markov_conjugation(Rng& rng, int cases);
SuiteResult untwisted_knot_values();
SuiteResult golden_trefoil();
SuiteResult golden_gassner();
SuiteResult hopf_link_case();

struct Summary {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
  int total_cases() const;
};

// Runs every suite; `scale` shrinks or grows the randomized case counts.
Summary run_all(std::uint64_t seed, double scale = 1.0, std::ostream* log = nullptr);

}  // namespace tburau::selftest
