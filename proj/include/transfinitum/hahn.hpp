#pragma once

// Finite-support Hahn series: sums of c * t^e with exact rational
// coefficients and ordinal-rational exponents, where t is a fixed positive
// infinite element (the image of w). Ordered by the leading term.

#include <compare>
#include <string>
#include <vector>

#include "transfinitum/tower.hpp"

namespace transfinitum {

struct HahnTerm {
  OrdRat exponent;
  Rational coefficient;
};

class HahnSeries {
 public:
  HahnSeries() = default;
  HahnSeries(long constant);                  // NOLINT
  explicit HahnSeries(const Rational& constant);

  // Sorts by exponent, merges equal exponents and drops zero coefficients.
  static HahnSeries from_terms(std::vector<HahnTerm> terms);
  static HahnSeries monomial(const Rational& coefficient, const OrdRat& exponent);
  // t itself.
  static HahnSeries t();

  const std::vector<HahnTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const HahnTerm& leading() const;
  int sign() const;

  std::string to_string() const;

  friend bool operator==(const HahnSeries& a, const HahnSeries& b);

 private:
  std::vector<HahnTerm> terms_;
};

HahnSeries h_add(const HahnSeries& a, const HahnSeries& b);
HahnSeries h_neg(const HahnSeries& a);
HahnSeries h_sub(const HahnSeries& a, const HahnSeries& b);
HahnSeries h_mul(const HahnSeries& a, const HahnSeries& b);
std::strong_ordering h_cmp(const HahnSeries& a, const HahnSeries& b);

// a = c t^e (1 + u): returns c^-1 t^-e (1 - u + u^2 - ... +- u^(n-1)), so
// that a * result = 1 - (-u)^n.
HahnSeries h_inv_trunc(const HahnSeries& a, unsigned n);

bool commensurate(const HahnSeries& a, const HahnSeries& b);

enum class ArchimedeanClass { infinitesimal, finite, infinite };
ArchimedeanClass archimedean_sign(const HahnSeries& a);
const char* archimedean_name(ArchimedeanClass c);

HahnSeries h_from_ordinal(const Ordinal& a);
HahnSeries h_from_ordint(const OrdInt& a);
HahnSeries h_from_rational(const Rational& q);

}  // namespace transfinitum
