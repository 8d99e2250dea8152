#pragma once

// Surreal numbers as sign expansions with ordinal run lengths.
//
// Order, birthdays, the simplicity construction and negation work on any
// expansion; the recursive field operations are exact on finite birthdays
// (where the values are exactly the dyadic rationals).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "transfinitum/ordinal.hpp"

namespace transfinitum {

enum class Sign : char { plus = '+', minus = '-' };

constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

struct SignRun {
  Ordinal length;
  Sign sign;

  friend bool operator==(const SignRun&, const SignRun&) = default;
};

class SignExpansion {
 public:
  SignExpansion() = default;

  // Zero-length runs are dropped and adjacent runs of equal sign merged.
  static SignExpansion from_runs(std::vector<SignRun> runs);
  // "+-+" style; any other character is a ParseError.
  static SignExpansion from_signs(std::string_view signs);
  // Accepts the compact form, run groups "(w:+)(1:-)", or a mix of both.
  static SignExpansion parse(std::string_view text);

  const std::vector<SignRun>& runs() const noexcept { return runs_; }
  bool is_zero() const noexcept { return runs_.empty(); }
  bool is_finite() const;
  // The compact sign string; requires a finite birthday.
  std::string signs() const;
  // Compact form when finite, run groups otherwise. Zero renders as "".
  std::string to_string() const;

  friend bool operator==(const SignExpansion&, const SignExpansion&) = default;
  friend std::strong_ordering operator<=>(const SignExpansion& a, const SignExpansion& b);

 private:
  std::vector<SignRun> runs_;
};

std::strong_ordering s_cmp(const SignExpansion& x, const SignExpansion& y);
Ordinal birthday(const SignExpansion& x);

struct Options {
  std::vector<SignExpansion> left;   // increasing
  std::vector<SignExpansion> right;  // increasing
};

// Prefixes of x followed by a plus (left) or a minus (right).
Options canonical_options(const SignExpansion& x);

// {L | R}: the element of least birthday strictly between L and R.
SignExpansion simplest_between(std::span<const SignExpansion> left, std::span<const SignExpansion> right);

SignExpansion s_neg(const SignExpansion& x);
// Negation through {-R(x) | -L(x)}; finite birthdays only.
SignExpansion s_neg_recursive(const SignExpansion& x);
SignExpansion s_add(const SignExpansion& x, const SignExpansion& y);
SignExpansion s_sub(const SignExpansion& x, const SignExpansion& y);
SignExpansion s_mul(const SignExpansion& x, const SignExpansion& y);

// Defined exactly when the inverse has finite birthday, i.e. x = +-2^k.
std::optional<SignExpansion> s_inv_exact(const SignExpansion& x);

struct InverseBounds {
  SignExpansion lower;
  SignExpansion upper;
};

// Bounds lower < 1/x < upper from `depth` rounds of the inverse option
// recursion, rounded outward to dyadics.
InverseBounds s_inv_approx(const SignExpansion& x, unsigned depth);

Rational to_dyadic(const SignExpansion& x);
SignExpansion from_dyadic(const Rational& q);
bool is_dyadic(const Rational& q);

SignExpansion s_from_ordinal(const Ordinal& a);

constexpr std::uint64_t default_step_budget = 1'000'000;

// Bound on sign steps emitted by one top-level surreal operation.
void set_step_budget(std::uint64_t steps);
std::uint64_t step_budget();

// Drops this thread's memo tables (results never depend on them).
void clear_surreal_memo();
std::size_t surreal_memo_size();

}  // namespace transfinitum
