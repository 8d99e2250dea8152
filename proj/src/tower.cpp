#include "transfinitum/tower.hpp"

#include <map>

namespace transfinitum {

namespace {

struct Greater {
  bool operator()(const Ordinal& a, const Ordinal& b) const { return cmp_ord(a, b) > 0; }
};

std::string render_monomial(const Ordinal& exponent, const Integer& magnitude) {
  if (exponent.is_zero()) return magnitude.get_str();
  std::string out = "w";
  if (exponent != Ordinal{1}) out += "^(" + exponent.to_string() + ")";
  if (magnitude != 1) out += "*" + magnitude.get_str();
  return out;
}

}  // namespace

OrdInt::OrdInt(long n) {
  if (n != 0) terms_.push_back({Ordinal{}, Integer(n)});
}

OrdInt::OrdInt(const Integer& n) {
  if (n != 0) terms_.push_back({Ordinal{}, n});
}

OrdInt OrdInt::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw PreconditionFault("OrdInt coefficient must be nonzero");
    if (i > 0 && cmp_ord(terms[i - 1].exponent, terms[i].exponent) <= 0)
      throw PreconditionFault("OrdInt exponents must be strictly decreasing");
  }
  OrdInt r;
  r.terms_ = std::move(terms);
  return r;
}

int OrdInt::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coefficient); }

std::string OrdInt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coefficient < 0;
    Integer magnitude = abs(t.coefficient);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += render_monomial(t.exponent, magnitude);
    first = false;
  }
  return out;
}

OrdInt oi_add(const OrdInt& a, const OrdInt& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<OrdInt::Term> terms;
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      terms.push_back(ta[i++]);
    } else if (i == ta.size()) {
      terms.push_back(tb[j++]);
    } else {
      auto c = cmp_ord(ta[i].exponent, tb[j].exponent);
      if (c > 0) {
        terms.push_back(ta[i++]);
      } else if (c < 0) {
        terms.push_back(tb[j++]);
      } else {
        Integer sum = ta[i].coefficient + tb[j].coefficient;
        if (sum != 0) terms.push_back({ta[i].exponent, sum});
        ++i;
        ++j;
      }
    }
  }
  return OrdInt::from_terms(std::move(terms));
}

OrdInt oi_neg(const OrdInt& a) {
  auto terms = a.terms();
  for (auto& t : terms) t.coefficient = -t.coefficient;
  return OrdInt::from_terms(std::move(terms));
}

OrdInt oi_sub(const OrdInt& a, const OrdInt& b) { return oi_add(a, oi_neg(b)); }

OrdInt oi_mul(const OrdInt& a, const OrdInt& b) {
  std::map<Ordinal, Integer, Greater> acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[nat_sum(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
  std::vector<OrdInt::Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({e, c});
  return OrdInt::from_terms(std::move(terms));
}

std::strong_ordering oi_cmp(const OrdInt& a, const OrdInt& b) { return to_ordering(oi_sub(a, b).sign()); }

OrdInt oi_from_ordinal(const Ordinal& a) {
  std::vector<OrdInt::Term> terms;
  for (const auto& t : a.terms()) terms.push_back({t.exponent, t.coefficient});
  return OrdInt::from_terms(std::move(terms));
}

std::optional<Ordinal> oi_to_ordinal(const OrdInt& a) {
  std::vector<Ordinal::Term> terms;
  for (const auto& t : a.terms()) {
    if (t.coefficient < 0) return std::nullopt;
    terms.push_back({t.exponent, t.coefficient});
  }
  return Ordinal::from_terms(std::move(terms));
}

OrdRat::OrdRat(OrdInt num) : num_(std::move(num)), den_(1) {}

OrdRat::OrdRat(OrdInt num, OrdInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw PreconditionFault("OrdRat denominator is zero");
  if (num_.is_zero()) {
    den_ = OrdInt(1);
    return;
  }
  Integer content = 0;
  std::optional<Ordinal> shared;
  for (const auto* part : {&num_, &den_})
    for (const auto& t : part->terms()) {
      content = gcd(content, t.coefficient);
      shared = shared ? nat_meet(*shared, t.exponent) : t.exponent;
    }
  if (den_.sign() < 0) content = -content;
  if (content == 1 && shared->is_zero()) return;
  auto reduce = [&](const OrdInt& v) {
    std::vector<OrdInt::Term> terms;
    for (const auto& t : v.terms()) terms.push_back({*nat_diff(t.exponent, *shared), t.coefficient / content});
    return OrdInt::from_terms(std::move(terms));
  };
  num_ = reduce(num_);
  den_ = reduce(den_);
}

std::string OrdRat::to_string() const {
  if (den_ == OrdInt(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

OrdRat oq_add(const OrdRat& a, const OrdRat& b) {
  if (a.den() == b.den()) return {oi_add(a.num(), b.num()), a.den()};
  return {oi_add(oi_mul(a.num(), b.den()), oi_mul(b.num(), a.den())), oi_mul(a.den(), b.den())};
}

OrdRat oq_neg(const OrdRat& a) { return {oi_neg(a.num()), a.den()}; }

OrdRat oq_sub(const OrdRat& a, const OrdRat& b) { return oq_add(a, oq_neg(b)); }

OrdRat oq_mul(const OrdRat& a, const OrdRat& b) { return {oi_mul(a.num(), b.num()), oi_mul(a.den(), b.den())}; }

OrdRat oq_inv(const OrdRat& a) {
  if (a.is_zero()) throw PreconditionFault("oq_inv of zero");
  return {a.den(), a.num()};
}

OrdRat oq_div(const OrdRat& a, const OrdRat& b) { return oq_mul(a, oq_inv(b)); }

std::strong_ordering oq_cmp(const OrdRat& a, const OrdRat& b) {
  return oi_cmp(oi_mul(a.num(), b.den()), oi_mul(b.num(), a.den()));
}

bool oq_eq(const OrdRat& a, const OrdRat& b) { return oq_cmp(a, b) == 0; }

OrdRat oq_from_ordint(const OrdInt& a) { return OrdRat(a); }

}  // namespace transfinitum
