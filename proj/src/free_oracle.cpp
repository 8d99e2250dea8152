#include "transfinitum/free_oracle.hpp"

#include <algorithm>

namespace transfinitum {

Monomial::Monomial(std::map<GeneratorIndex, Integer> powers) : powers_(std::move(powers)) {
  for (const auto& [k, n] : powers_)
    if (n < 1) throw PreconditionFault("monomial multiplicity must be positive");
}

Monomial Monomial::generator(GeneratorIndex k, const Integer& multiplicity) {
  return Monomial({{k, multiplicity}});
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  auto powers = a.powers_;
  for (const auto& [k, n] : b.powers_) powers[k] += n;
  return Monomial(std::move(powers));
}

NatPolynomial::NatPolynomial(unsigned long constant) {
  if (constant != 0) coeffs_.emplace(Monomial{}, Integer(constant));
}

NatPolynomial::NatPolynomial(std::map<Monomial, Integer> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& [m, c] : coeffs_)
    if (c < 1) throw PreconditionFault("polynomial coefficient must be positive");
}

NatPolynomial NatPolynomial::monomial(const Monomial& m, const Integer& coefficient) {
  return NatPolynomial({{m, coefficient}});
}

std::string NatPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (const auto& [k, n] : m.powers()) {
      if (!mono.empty()) mono += "*";
      mono += "g" + std::to_string(k);
      if (n != 1) mono += "^" + n.get_str();
    }
    if (mono.empty())
      out += c.get_str();
    else
      out += (c == 1 ? "" : c.get_str() + "*") + mono;
  }
  return out;
}

NatPolynomial poly_add(const NatPolynomial& p, const NatPolynomial& q) {
  auto coeffs = p.coeffs();
  for (const auto& [m, c] : q.coeffs()) coeffs[m] += c;
  return NatPolynomial(std::move(coeffs));
}

NatPolynomial poly_mul(const NatPolynomial& p, const NatPolynomial& q) {
  std::map<Monomial, Integer> coeffs;
  for (const auto& [m1, c1] : p.coeffs())
    for (const auto& [m2, c2] : q.coeffs()) coeffs[m1 * m2] += c1 * c2;
  return NatPolynomial(std::move(coeffs));
}

namespace {

Ordinal monomial_exponent(const Monomial& m) {
  std::vector<Ordinal::Term> terms;
  for (auto it = m.powers().rbegin(); it != m.powers().rend(); ++it)
    terms.push_back({Ordinal{static_cast<unsigned long>(it->first)}, it->second});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal iso_to_ordinal(const NatPolynomial& p) {
  std::vector<Ordinal::Term> terms;
  for (const auto& [m, c] : p.coeffs()) terms.push_back({monomial_exponent(m), c});
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return cmp_ord(a.exponent, b.exponent) > 0; });
  return Ordinal::from_terms(std::move(terms));
}

bool in_oracle_range(const Ordinal& a) {
  for (const auto& t : a.terms())
    for (const auto& inner : t.exponent.terms()) {
      auto k = inner.exponent.as_natural();
      if (!k || !k->fits_ulong_p()) return false;
    }
  return true;
}

NatPolynomial iso_from_ordinal(const Ordinal& a) {
  if (!in_oracle_range(a)) throw OutOfOracleRange();
  std::map<Monomial, Integer> coeffs;
  for (const auto& t : a.terms()) {
    std::map<GeneratorIndex, Integer> powers;
    for (const auto& inner : t.exponent.terms()) powers[inner.exponent.as_natural()->get_ui()] = inner.coefficient;
    coeffs.emplace(Monomial(std::move(powers)), t.coefficient);
  }
  return NatPolynomial(std::move(coeffs));
}

}  // namespace transfinitum
