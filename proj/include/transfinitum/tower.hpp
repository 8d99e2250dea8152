#pragma once

// Ordinal integers (integer-coefficient Cantor normal forms, the group
// completion of the natural sum) and ordinal rationals (their fractions).

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "transfinitum/ordinal.hpp"

namespace transfinitum {

struct OrdIntTerm {
  Ordinal exponent;
  Integer coefficient;

  friend bool operator==(const OrdIntTerm&, const OrdIntTerm&) = default;
};

class OrdInt {
 public:
  using Term = OrdIntTerm;

  OrdInt() = default;
  OrdInt(long n);  // NOLINT: integers embed
  explicit OrdInt(const Integer& n);

  static OrdInt from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Sign of the leading coefficient.
  int sign() const;

  std::string to_string() const;

  friend bool operator==(const OrdInt&, const OrdInt&) = default;

 private:
  std::vector<Term> terms_;
};

OrdInt oi_add(const OrdInt& a, const OrdInt& b);
OrdInt oi_neg(const OrdInt& a);
OrdInt oi_sub(const OrdInt& a, const OrdInt& b);
OrdInt oi_mul(const OrdInt& a, const OrdInt& b);
std::strong_ordering oi_cmp(const OrdInt& a, const OrdInt& b);
OrdInt oi_from_ordinal(const Ordinal& a);
std::optional<Ordinal> oi_to_ordinal(const OrdInt& a);

// num/den with den > 0. Construction cancels common integer content and the
// largest common power of omega; equality is still decided semantically.
class OrdRat {
 public:
  OrdRat() : den_(1) {}
  OrdRat(long n) : num_(n), den_(1) {}  // NOLINT
  OrdRat(OrdInt num);                   // NOLINT: integral embedding
  OrdRat(OrdInt num, OrdInt den);

  const OrdInt& num() const noexcept { return num_; }
  const OrdInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  // NUM alone when the denominator is 1, otherwise (NUM)/(DEN).
  std::string to_string() const;

 private:
  OrdInt num_;
  OrdInt den_;
};

OrdRat oq_add(const OrdRat& a, const OrdRat& b);
OrdRat oq_neg(const OrdRat& a);
OrdRat oq_sub(const OrdRat& a, const OrdRat& b);
OrdRat oq_mul(const OrdRat& a, const OrdRat& b);
OrdRat oq_inv(const OrdRat& a);
OrdRat oq_div(const OrdRat& a, const OrdRat& b);
std::strong_ordering oq_cmp(const OrdRat& a, const OrdRat& b);
bool oq_eq(const OrdRat& a, const OrdRat& b);
OrdRat oq_from_ordint(const OrdInt& a);

}  // namespace transfinitum
