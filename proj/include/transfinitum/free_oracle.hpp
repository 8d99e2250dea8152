#pragma once

// Commutative polynomials over the naturals in generators g_0, g_1, ...,
// with g_k standing for w^(w^k). An independent re-implementation of the
// Hessenberg operations below w^(w^w) through the free-semiring isomorphism.

#include <cstdint>
#include <map>
#include <string>

#include "transfinitum/ordinal.hpp"

namespace transfinitum {

using GeneratorIndex = std::uint64_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::map<GeneratorIndex, Integer> powers);
  static Monomial generator(GeneratorIndex k, const Integer& multiplicity = 1);

  const std::map<GeneratorIndex, Integer>& powers() const noexcept { return powers_; }
  bool is_unit() const noexcept { return powers_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.powers_ < b.powers_; }

 private:
  std::map<GeneratorIndex, Integer> powers_;
};

class NatPolynomial {
 public:
  NatPolynomial() = default;
  NatPolynomial(unsigned long constant);  // NOLINT
  explicit NatPolynomial(std::map<Monomial, Integer> coeffs);
  static NatPolynomial monomial(const Monomial& m, const Integer& coefficient = 1);

  const std::map<Monomial, Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::string to_string() const;

  friend bool operator==(const NatPolynomial&, const NatPolynomial&) = default;

 private:
  std::map<Monomial, Integer> coeffs_;
};

NatPolynomial poly_add(const NatPolynomial& p, const NatPolynomial& q);
NatPolynomial poly_mul(const NatPolynomial& p, const NatPolynomial& q);

// g_k^n ... maps to w^(w^k*n + ...).
Ordinal iso_to_ordinal(const NatPolynomial& p);
// Throws OutOfOracleRange unless a < w^(w^w).
NatPolynomial iso_from_ordinal(const Ordinal& a);
bool in_oracle_range(const Ordinal& a);

}  // namespace transfinitum
