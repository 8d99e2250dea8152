#pragma once

// Random generators shared by the property suites and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "transfinitum/free_oracle.hpp"
#include "transfinitum/hahn.hpp"
#include "transfinitum/surreal.hpp"
#include "transfinitum/tower.hpp"

namespace transfinitum::sample {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
bool coin(Rng& rng, double p = 0.5);

struct OrdinalShape {
  int depth = 3;          // nesting of exponents
  int max_terms = 4;
  unsigned max_coefficient = 50;
};

// Any ordinal in hereditary CNF with the given nesting depth bound.
Ordinal ordinal(Rng& rng, const OrdinalShape& shape = {});
// Below w^(w^w): exponents with natural exponents only.
Ordinal oracle_ordinal(Rng& rng, const OrdinalShape& shape = {});
// Uniform-ish ordinal strictly below a positive bound.
Ordinal below(Rng& rng, const Ordinal& bound, unsigned max_coefficient = 50);

OrdInt ordint(Rng& rng, const OrdinalShape& shape = {});
OrdRat ordrat(Rng& rng, const OrdinalShape& shape = {});

NatPolynomial polynomial(Rng& rng, int max_terms = 4, unsigned max_generator = 3, unsigned max_coefficient = 50);

// Uniform over all expansions of birthday <= max_birthday.
SignExpansion sign_expansion(Rng& rng, unsigned max_birthday);
std::vector<SignExpansion> all_expansions(unsigned max_birthday);
SignExpansion transfinite_expansion(Rng& rng);

Rational rational(Rng& rng, int max_num = 20, int max_den = 12);
HahnSeries hahn(Rng& rng, int max_terms = 4);

}  // namespace transfinitum::sample
