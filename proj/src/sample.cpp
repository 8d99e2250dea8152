#include "transfinitum/sample.hpp"

#include <algorithm>

namespace transfinitum::sample {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

Ordinal from_exponents(Rng& rng, std::vector<Ordinal> exponents, unsigned max_coefficient) {
  std::sort(exponents.begin(), exponents.end(), [](const auto& a, const auto& b) { return cmp_ord(a, b) > 0; });
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  std::vector<Ordinal::Term> terms;
  for (auto& e : exponents) terms.push_back({std::move(e), Integer(static_cast<unsigned long>(uniform(rng, 1, max_coefficient)))});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal ordinal(Rng& rng, const OrdinalShape& shape) {
  if (shape.depth <= 0) return Ordinal{static_cast<unsigned long>(uniform(rng, 0, shape.max_coefficient))};
  OrdinalShape inner{shape.depth - 1, std::max(1, shape.max_terms - 1), 6};
  auto n = uniform(rng, 0, static_cast<std::uint64_t>(shape.max_terms));
  std::vector<Ordinal> exponents;
  for (std::uint64_t i = 0; i < n; ++i) exponents.push_back(ordinal(rng, inner));
  return from_exponents(rng, std::move(exponents), shape.max_coefficient);
}

Ordinal oracle_ordinal(Rng& rng, const OrdinalShape& shape) {
  auto n = uniform(rng, 0, static_cast<std::uint64_t>(shape.max_terms));
  std::vector<Ordinal> exponents;
  for (std::uint64_t i = 0; i < n; ++i) {
    // Exponents below w^w: naturals as inner exponents.
    auto k = uniform(rng, 0, static_cast<std::uint64_t>(shape.max_terms - 1));
    std::vector<Ordinal> inner;
    for (std::uint64_t j = 0; j < k; ++j) inner.push_back(Ordinal{static_cast<unsigned long>(uniform(rng, 0, 3))});
    exponents.push_back(from_exponents(rng, std::move(inner), 6));
  }
  return from_exponents(rng, std::move(exponents), shape.max_coefficient);
}

Ordinal below(Rng& rng, const Ordinal& bound, unsigned max_coefficient) {
  if (bound.is_zero()) throw PreconditionFault("nothing lies below zero");
  const auto& terms = bound.terms();
  auto i = uniform(rng, 0, terms.size() - 1);
  std::vector<Ordinal::Term> out(terms.begin(), terms.begin() + static_cast<long>(i));
  const auto& pivot = terms[i];
  Integer c = pivot.coefficient - 1;
  if (c > 0 && coin(rng)) {
    Integer r;
    r = c.fits_ulong_p() ? Integer(static_cast<unsigned long>(uniform(rng, 0, c.get_ui()))) : c;
    c = r;
  }
  if (c > 0) out.push_back({pivot.exponent, c});
  if (!pivot.exponent.is_zero()) {
    auto n = uniform(rng, 0, 3);
    std::vector<Ordinal> exponents;
    for (std::uint64_t j = 0; j < n; ++j) exponents.push_back(below(rng, pivot.exponent, 6));
    Ordinal tail = from_exponents(rng, std::move(exponents), max_coefficient);
    for (const auto& t : tail.terms()) out.push_back(t);
  }
  return Ordinal::from_terms(std::move(out));
}

OrdInt ordint(Rng& rng, const OrdinalShape& shape) {
  std::vector<OrdInt::Term> terms;
  Ordinal magnitude = ordinal(rng, shape);
  for (const auto& t : magnitude.terms())
    terms.push_back({t.exponent, coin(rng) ? t.coefficient : Integer(-t.coefficient)});
  return OrdInt::from_terms(std::move(terms));
}

OrdRat ordrat(Rng& rng, const OrdinalShape& shape) {
  OrdInt den;
  while (den.is_zero()) den = ordint(rng, shape);
  if (den.sign() < 0) den = oi_neg(den);
  return {ordint(rng, shape), den};
}

NatPolynomial polynomial(Rng& rng, int max_terms, unsigned max_generator, unsigned max_coefficient) {
  std::map<Monomial, Integer> coeffs;
  auto n = uniform(rng, 0, static_cast<std::uint64_t>(max_terms));
  for (std::uint64_t i = 0; i < n; ++i) {
    std::map<GeneratorIndex, Integer> powers;
    auto k = uniform(rng, 0, 2);
    for (std::uint64_t j = 0; j < k; ++j)
      powers[uniform(rng, 0, max_generator)] = Integer(static_cast<unsigned long>(uniform(rng, 1, 4)));
    coeffs[Monomial(std::move(powers))] = Integer(static_cast<unsigned long>(uniform(rng, 1, max_coefficient)));
  }
  return NatPolynomial(std::move(coeffs));
}

SignExpansion sign_expansion(Rng& rng, unsigned max_birthday) {
  // 2^(h+1) - 1 expansions of birthday <= h; index i >= 1 encodes its length
  // by the position of the highest set bit.
  std::uint64_t index = uniform(rng, 1, (std::uint64_t{2} << max_birthday) - 1);
  int length = 63 - __builtin_clzll(index);
  std::string s;
  for (int b = length - 1; b >= 0; --b) s += (index >> b) & 1 ? '+' : '-';
  return SignExpansion::from_signs(s);
}

std::vector<SignExpansion> all_expansions(unsigned max_birthday) {
  std::vector<SignExpansion> out;
  for (std::uint64_t index = 1; index < (std::uint64_t{2} << max_birthday); ++index) {
    int length = 63 - __builtin_clzll(index);
    std::string s;
    for (int b = length - 1; b >= 0; --b) s += (index >> b) & 1 ? '+' : '-';
    out.push_back(SignExpansion::from_signs(s));
  }
  return out;
}

SignExpansion transfinite_expansion(Rng& rng) {
  auto n = uniform(rng, 1, 4);
  std::vector<SignRun> runs;
  Sign sign = coin(rng) ? Sign::plus : Sign::minus;
  for (std::uint64_t i = 0; i < n; ++i) {
    Ordinal len;
    while (len.is_zero()) len = ordinal(rng, {2, 2, 3});
    runs.push_back({len, sign});
    sign = flip(sign);
  }
  return SignExpansion::from_runs(std::move(runs));
}

Rational rational(Rng& rng, int max_num, int max_den) {
  auto num = static_cast<long>(uniform(rng, 0, 2 * static_cast<std::uint64_t>(max_num))) - max_num;
  auto den = static_cast<long>(uniform(rng, 1, static_cast<std::uint64_t>(max_den)));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

HahnSeries hahn(Rng& rng, int max_terms) {
  std::vector<HahnTerm> terms;
  auto n = uniform(rng, 0, static_cast<std::uint64_t>(max_terms));
  for (std::uint64_t i = 0; i < n; ++i) {
    OrdRat e = coin(rng, 0.7) ? OrdRat(ordint(rng, {1, 2, 3})) : ordrat(rng, {1, 2, 3});
    terms.push_back({e, rational(rng)});
  }
  return HahnSeries::from_terms(std::move(terms));
}

}  // namespace transfinitum::sample
