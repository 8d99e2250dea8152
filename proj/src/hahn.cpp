#include "transfinitum/hahn.hpp"

#include <algorithm>
#include <map>

namespace transfinitum {

namespace {

struct ExponentGreater {
  bool operator()(const OrdRat& a, const OrdRat& b) const { return oq_cmp(a, b) > 0; }
};

using TermMap = std::map<OrdRat, Rational, ExponentGreater>;

HahnSeries from_map(TermMap&& m) {
  std::vector<HahnTerm> terms;
  for (auto& [e, c] : m)
    if (c != 0) terms.push_back({e, c});
  return HahnSeries::from_terms(std::move(terms));
}

std::string render_coefficient_times(const Rational& magnitude, const std::string& power) {
  if (power.empty()) return to_string(magnitude);
  if (magnitude == 1) return power;
  return to_string(magnitude) + "*" + power;
}

}  // namespace

HahnSeries::HahnSeries(long constant) : HahnSeries(Rational(constant)) {}

HahnSeries::HahnSeries(const Rational& constant) {
  if (constant != 0) terms_.push_back({OrdRat{}, constant});
}

HahnSeries HahnSeries::from_terms(std::vector<HahnTerm> terms) {
  TermMap m;
  for (auto& t : terms) m[t.exponent] += t.coefficient;
  std::vector<HahnTerm> out;
  for (auto& [e, c] : m)
    if (c != 0) out.push_back({e, c});
  HahnSeries s;
  s.terms_ = std::move(out);
  return s;
}

HahnSeries HahnSeries::monomial(const Rational& coefficient, const OrdRat& exponent) {
  return from_terms({{exponent, coefficient}});
}

HahnSeries HahnSeries::t() { return monomial(1, OrdRat(1)); }

const HahnTerm& HahnSeries::leading() const {
  if (terms_.empty()) throw PreconditionFault("zero series has no leading term");
  return terms_.front();
}

int HahnSeries::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coefficient); }

std::string HahnSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string power;
    if (oq_eq(t.exponent, OrdRat(1)))
      power = "t";
    else if (!t.exponent.is_zero())
      power = "t^(" + t.exponent.to_string() + ")";
    out += render_coefficient_times(abs(t.coefficient), power);
    first = false;
  }
  return out;
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!oq_eq(a.terms_[i].exponent, b.terms_[i].exponent) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

HahnSeries h_add(const HahnSeries& a, const HahnSeries& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<HahnTerm> terms;
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      terms.push_back(ta[i++]);
    } else if (i == ta.size()) {
      terms.push_back(tb[j++]);
    } else {
      auto c = oq_cmp(ta[i].exponent, tb[j].exponent);
      if (c > 0) {
        terms.push_back(ta[i++]);
      } else if (c < 0) {
        terms.push_back(tb[j++]);
      } else {
        Rational sum = ta[i].coefficient + tb[j].coefficient;
        if (sum != 0) terms.push_back({ta[i].exponent, sum});
        ++i;
        ++j;
      }
    }
  }
  return HahnSeries::from_terms(std::move(terms));
}

HahnSeries h_neg(const HahnSeries& a) {
  auto terms = a.terms();
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return HahnSeries::from_terms(std::move(terms));
}

HahnSeries h_sub(const HahnSeries& a, const HahnSeries& b) { return h_add(a, h_neg(b)); }

HahnSeries h_mul(const HahnSeries& a, const HahnSeries& b) {
  TermMap acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[oq_add(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
  return from_map(std::move(acc));
}

std::strong_ordering h_cmp(const HahnSeries& a, const HahnSeries& b) { return to_ordering(h_sub(a, b).sign()); }

HahnSeries h_inv_trunc(const HahnSeries& a, unsigned n) {
  if (a.is_zero()) throw PreconditionFault("inverse of zero series");
  if (n == 0) throw PreconditionFault("h_inv_trunc needs at least one term");
  const auto& lead = a.leading();
  HahnSeries scale = HahnSeries::monomial(1 / lead.coefficient, oq_neg(lead.exponent));
  HahnSeries minus_u = h_sub(HahnSeries(1), h_mul(a, scale));
  HahnSeries sum(1);
  HahnSeries power(1);
  for (unsigned k = 1; k < n; ++k) {
    power = h_mul(power, minus_u);
    sum = h_add(sum, power);
  }
  return h_mul(scale, sum);
}

bool commensurate(const HahnSeries& a, const HahnSeries& b) {
  if (a.is_zero() || b.is_zero()) throw PreconditionFault("commensurate requires nonzero series");
  return oq_eq(a.leading().exponent, b.leading().exponent);
}

ArchimedeanClass archimedean_sign(const HahnSeries& a) {
  if (a.is_zero()) return ArchimedeanClass::finite;
  int s = a.leading().exponent.sign();
  if (s < 0) return ArchimedeanClass::infinitesimal;
  if (s > 0) return ArchimedeanClass::infinite;
  return ArchimedeanClass::finite;
}

const char* archimedean_name(ArchimedeanClass c) {
  switch (c) {
    case ArchimedeanClass::infinitesimal: return "infinitesimal";
    case ArchimedeanClass::finite: return "finite";
    case ArchimedeanClass::infinite: return "infinite";
  }
  return "finite";
}

HahnSeries h_from_ordinal(const Ordinal& a) { return h_from_ordint(oi_from_ordinal(a)); }

HahnSeries h_from_ordint(const OrdInt& a) {
  std::vector<HahnTerm> terms;
  for (const auto& t : a.terms()) terms.push_back({oq_from_ordint(oi_from_ordinal(t.exponent)), Rational(t.coefficient)});
  return HahnSeries::from_terms(std::move(terms));
}

HahnSeries h_from_rational(const Rational& q) { return HahnSeries(q); }

}  // namespace transfinitum
