#pragma once

#include <string>
#include <vector>

#include "transfinitum/hahn.hpp"
#include "transfinitum/surreal.hpp"
#include "transfinitum/tower.hpp"

namespace support {

using namespace transfinitum;

inline Ordinal O(const char* text) { return Ordinal::parse(text); }
inline SignExpansion S(const char* text) { return SignExpansion::parse(text); }
inline OrdInt I(const char* text) { return oi_from_ordinal(Ordinal::parse(text)); }
inline OrdInt I(long n) { return OrdInt(n); }
inline HahnSeries T(long coefficient, long exponent) { return HahnSeries::monomial(coefficient, OrdRat(exponent)); }

// Every ordinal sum_{e in exponents} w^e * c with 0 <= c <= max_coefficient.
inline std::vector<Ordinal> small_ordinals(const std::vector<Ordinal>& exponents, unsigned max_coefficient) {
  std::vector<Ordinal> out{Ordinal{}};
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    std::vector<Ordinal> next;
    for (const auto& tail : out)
      for (unsigned c = 0; c <= max_coefficient; ++c) {
        std::vector<Ordinal::Term> terms;
        if (c > 0) terms.push_back({*it, Integer(c)});
        for (const auto& t : tail.terms()) terms.push_back(t);
        next.push_back(Ordinal::from_terms(std::move(terms)));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace support
