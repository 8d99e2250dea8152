#pragma once

// Ordinals below epsilon_0 in hereditary Cantor normal form.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transfinitum/common.hpp"

namespace transfinitum {

struct OrdinalTerm;

class Ordinal {
 public:
  using Term = OrdinalTerm;

  Ordinal() = default;
  Ordinal(unsigned long n);  // NOLINT: naturals are ordinals
  explicit Ordinal(const Integer& n);

  // Validates the CNF invariants: exponents strictly decreasing, coefficients >= 1.
  static Ordinal from_terms(std::vector<Term> terms);
  static Ordinal omega();
  static Ordinal parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  bool is_limit() const;
  std::optional<Integer> as_natural() const;

  // Leading (largest) and trailing (smallest) exponent; the ordinal must be nonzero.
  const Ordinal& leading_exponent() const;
  const Ordinal& trailing_exponent() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  Integer coefficient;

  friend bool operator==(const OrdinalTerm& a, const OrdinalTerm& b) {
    return a.exponent == b.exponent && a.coefficient == b.coefficient;
  }
};

std::strong_ordering cmp_ord(const Ordinal& a, const Ordinal& b);

// Standard (non-commutative) ordinal arithmetic.
Ordinal std_add(const Ordinal& a, const Ordinal& b);
Ordinal std_mul(const Ordinal& a, const Ordinal& b);
// The unique d with std_add(a, d) == b; requires a <= b.
Ordinal std_left_sub(const Ordinal& a, const Ordinal& b);

// Hessenberg natural operations.
Ordinal nat_sum(const Ordinal& a, const Ordinal& b);
Ordinal nat_prod(const Ordinal& a, const Ordinal& b);
// Defined iff every padded coefficient of a dominates the one of b.
std::optional<Ordinal> nat_diff(const Ordinal& a, const Ordinal& b);
// Coefficientwise minimum; the largest d with nat_diff(a, d) and nat_diff(b, d) defined.
Ordinal nat_meet(const Ordinal& a, const Ordinal& b);

Ordinal omega_pow(const Ordinal& x);
bool is_additively_principal(const Ordinal& a);
bool is_principal(const Ordinal& a);

enum class WitnessSide { left, right };

struct SumWitness {
  WitnessSide side;
  Ordinal value;
};

// For z < x (+) y: a w below x with z <= w (+) y (left), or below y with
// z <= x (+) w (right). Left is preferred whenever the construction allows it.
SumWitness cofinal_witness_sum(const Ordinal& z, const Ordinal& x, const Ordinal& y);

struct ProdWitness {
  Ordinal x_below;
  Ordinal y_below;
};

// For z < x (.) y with x, y > 0: x' < x and y' < y such that, in the ordinal
// integers, z <= x.y' + x'.y - x'.y' < x.y.
ProdWitness cofinal_witness_prod(const Ordinal& z, const Ordinal& x, const Ordinal& y);

}  // namespace transfinitum
