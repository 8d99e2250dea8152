#include "transfinitum/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace transfinitum {

namespace {

struct Greater {
  bool operator()(const Ordinal& a, const Ordinal& b) const { return cmp_ord(a, b) > 0; }
};

using TermMap = std::map<Ordinal, Integer, Greater>;

Ordinal from_map(const TermMap& m) {
  std::vector<Ordinal::Term> terms;
  terms.reserve(m.size());
  for (const auto& [e, c] : m)
    if (c != 0) terms.push_back({e, c});
  return Ordinal::from_terms(std::move(terms));
}

// Common exponent set of several ordinals, decreasing, with each ordinal's
// coefficient vector padded by zeros.
struct Padded {
  std::vector<Ordinal> exponents;
  std::vector<std::vector<Integer>> coefficients;
};

Padded pad(std::initializer_list<const Ordinal*> values) {
  TermMap all;
  for (const auto* v : values)
    for (const auto& t : v->terms()) all.emplace(t.exponent, 0);
  Padded p;
  for (const auto& [e, c] : all) p.exponents.push_back(e);
  for (const auto* v : values) {
    std::vector<Integer> coef(p.exponents.size(), 0);
    std::size_t i = 0;
    for (const auto& t : v->terms()) {
      while (p.exponents[i] != t.exponent) ++i;
      coef[i] = t.coefficient;
    }
    p.coefficients.push_back(std::move(coef));
  }
  return p;
}

Ordinal from_padded(const std::vector<Ordinal>& exponents, const std::vector<Integer>& coef) {
  std::vector<Ordinal::Term> terms;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (coef[i] != 0) terms.push_back({exponents[i], coef[i]});
  return Ordinal::from_terms(std::move(terms));
}

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal r = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  Ordinal parse_sum() {
    std::vector<Ordinal::Term> terms;
    skip_ws();
    if (peek() == '0' && !is_digit_at(pos_ + 1)) {
      ++pos_;
      return {};
    }
    for (;;) {
      std::size_t start = pos_;
      auto term = parse_term();
      if (!terms.empty() && cmp_ord(term.exponent, terms.back().exponent) >= 0) {
        pos_ = start;
        fail("exponents must be strictly decreasing");
      }
      terms.push_back(std::move(term));
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
      skip_ws();
    }
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent{1};
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        expect('(');
        exponent = parse_sum();
        expect(')');
      }
      Integer coef = 1;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        coef = parse_positive();
      }
      return {exponent, coef};
    }
    return {Ordinal{}, parse_positive()};
  }

  Integer parse_positive() {
    std::size_t start = pos_;
    while (is_digit_at(pos_)) ++pos_;
    if (start == pos_) fail("expected a natural number");
    Integer v(std::string(text_.substr(start, pos_ - start)), 10);
    if (v == 0) {
      pos_ = start;
      fail("coefficients must be positive");
    }
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool is_digit_at(std::size_t i) const {
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal::Ordinal(unsigned long n) {
  if (n != 0) terms_.push_back({Ordinal{}, Integer(n)});
}

Ordinal::Ordinal(const Integer& n) {
  if (n < 0) throw PreconditionFault("negative natural");
  if (n != 0) terms_.push_back({Ordinal{}, n});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw PreconditionFault("CNF coefficient must be positive");
    if (i > 0 && cmp_ord(terms[i - 1].exponent, terms[i].exponent) <= 0)
      throw PreconditionFault("CNF exponents must be strictly decreasing");
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal{1}); }

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse_all(); }

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::optional<Integer> Ordinal::as_natural() const {
  if (terms_.empty()) return Integer(0);
  if (!is_finite()) return std::nullopt;
  return terms_[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw PreconditionFault("zero has no leading exponent");
  return terms_.front().exponent;
}

const Ordinal& Ordinal::trailing_exponent() const {
  if (terms_.empty()) throw PreconditionFault("zero has no trailing exponent");
  return terms_.back().exponent;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += t.coefficient.get_str();
      continue;
    }
    out += "w";
    if (t.exponent != Ordinal{1}) out += "^(" + t.exponent.to_string() + ")";
    if (t.coefficient != 1) out += "*" + t.coefficient.get_str();
  }
  return out;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp_ord(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

// Comparing term lists front to back is the lexicographic comparison of the
// padded coefficient vectors: at the first difference, a larger exponent (or
// a larger coefficient at equal exponent) wins.
std::strong_ordering cmp_ord(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto e = cmp_ord(ta[i].exponent, tb[i].exponent);
    if (e != 0) return e;
    int c = cmp(ta[i].coefficient, tb[i].coefficient);
    if (c != 0) return to_ordering(c);
  }
  return ta.size() <=> tb.size();
}

Ordinal std_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.leading_exponent();
  std::vector<Ordinal::Term> terms;
  Integer carry = 0;
  for (const auto& t : a.terms()) {
    auto c = cmp_ord(t.exponent, lead);
    if (c > 0)
      terms.push_back(t);
    else if (c == 0)
      carry = t.coefficient;
  }
  bool first = true;
  for (const auto& t : b.terms()) {
    terms.push_back(t);
    if (first) terms.back().coefficient += carry;
    first = false;
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal std_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Ordinal& lead = a.leading_exponent();
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * n: the leading coefficient multiplies, the tail survives once.
      std::vector<Ordinal::Term> terms = a.terms();
      terms.front().coefficient *= t.coefficient;
      piece = Ordinal::from_terms(std::move(terms));
    } else {
      piece = Ordinal::from_terms({{std_add(lead, t.exponent), t.coefficient}});
    }
    result = std_add(result, piece);
  }
  return result;
}

Ordinal std_left_sub(const Ordinal& a, const Ordinal& b) {
  if (cmp_ord(a, b) > 0) throw PreconditionFault("std_left_sub requires a <= b");
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && ta[i] == tb[i]) ++i;
  if (i == ta.size()) return Ordinal::from_terms({tb.begin() + static_cast<long>(i), tb.end()});
  // First difference: either b has a larger exponent here, or the same
  // exponent with a larger coefficient. The rest of a is absorbed.
  std::vector<Ordinal::Term> rest(tb.begin() + static_cast<long>(i), tb.end());
  if (ta[i].exponent == tb[i].exponent) rest.front().coefficient -= ta[i].coefficient;
  return Ordinal::from_terms(std::move(rest));
}

Ordinal nat_sum(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Ordinal::Term> terms;
  terms.reserve(ta.size() + tb.size());
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
        terms.push_back({ta[i].exponent, ta[i].coefficient + tb[j].coefficient});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal nat_prod(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  TermMap acc;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) acc[nat_sum(s.exponent, t.exponent)] += s.coefficient * t.coefficient;
  return from_map(acc);
}

std::optional<Ordinal> nat_diff(const Ordinal& a, const Ordinal& b) {
  auto p = pad({&a, &b});
  std::vector<Integer> coef(p.exponents.size());
  for (std::size_t i = 0; i < coef.size(); ++i) {
    coef[i] = p.coefficients[0][i] - p.coefficients[1][i];
    if (coef[i] < 0) return std::nullopt;
  }
  return from_padded(p.exponents, coef);
}

Ordinal nat_meet(const Ordinal& a, const Ordinal& b) {
  auto p = pad({&a, &b});
  std::vector<Integer> coef(p.exponents.size());
  for (std::size_t i = 0; i < coef.size(); ++i)
    coef[i] = p.coefficients[0][i] < p.coefficients[1][i] ? p.coefficients[0][i] : p.coefficients[1][i];
  return from_padded(p.exponents, coef);
}

Ordinal omega_pow(const Ordinal& x) { return Ordinal::from_terms({{x, 1}}); }

bool is_additively_principal(const Ordinal& a) {
  return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

bool is_principal(const Ordinal& a) {
  return is_additively_principal(a) && is_additively_principal(a.leading_exponent());
}

SumWitness cofinal_witness_sum(const Ordinal& z, const Ordinal& x, const Ordinal& y) {
  Ordinal total = nat_sum(x, y);
  if (cmp_ord(z, total) >= 0) throw PreconditionFault("cofinal_witness_sum requires z < x (+) y");
  auto p = pad({&z, &x, &y});
  const auto& r = p.coefficients[0];
  const auto& px = p.coefficients[1];
  const auto& qy = p.coefficients[2];
  std::vector<Integer> k(r.size()), lambda(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    k[i] = r[i] > qy[i] ? r[i] : qy[i];
    lambda[i] = r[i] > px[i] ? r[i] : px[i];
  }
  Ordinal z1 = from_padded(p.exponents, k);
  if (cmp_ord(z1, total) < 0) return {WitnessSide::left, *nat_diff(z1, y)};
  Ordinal z2 = from_padded(p.exponents, lambda);
  if (cmp_ord(z2, total) < 0) return {WitnessSide::right, *nat_diff(z2, x)};
  throw PreconditionFault("cofinal_witness_sum: both majorants reach x (+) y");
}

// With e, f the trailing exponents of x and y, every z < x.y splits as a part
// with exponents >= e (+) f (strictly below that part of x.y) and a tail w
// below w^(e (+) f). Writing x' = x - w^e + s and y' = y - w^f + u, the
// expression x.y' + x'.y - x'.y' equals x.y - (w^e - s)(w^f - u), so it is
// enough to choose s < w^e, u < w^f with (w^e - s)(w^f - u) <= w^(e(+)f) - w.
// The sum witness on the exponents tells which factor can absorb w.
ProdWitness cofinal_witness_prod(const Ordinal& z, const Ordinal& x, const Ordinal& y) {
  if (x.is_zero() || y.is_zero()) throw PreconditionFault("cofinal_witness_prod requires x, y > 0");
  if (cmp_ord(z, nat_prod(x, y)) >= 0) throw PreconditionFault("cofinal_witness_prod requires z < x (.) y");

  const Ordinal& ex = x.trailing_exponent();
  const Ordinal& ey = y.trailing_exponent();
  Ordinal floor_exp = nat_sum(ex, ey);

  std::vector<Ordinal::Term> tail;
  for (const auto& t : z.terms())
    if (cmp_ord(t.exponent, floor_exp) < 0) tail.push_back(t);
  Ordinal w = Ordinal::from_terms(std::move(tail));

  Ordinal s, u;
  if (!w.is_zero()) {
    if (ex.is_zero()) {
      u = w;
    } else if (ey.is_zero()) {
      s = w;
    } else {
      const auto& lead = w.terms().front();
      auto wit = cofinal_witness_sum(lead.exponent, ex, ey);
      Ordinal absorb = Ordinal::from_terms({{wit.value, lead.coefficient + 1}});
      (wit.side == WitnessSide::left ? s : u) = absorb;
    }
  }
  Ordinal x_below = nat_sum(*nat_diff(x, omega_pow(ex)), s);
  Ordinal y_below = nat_sum(*nat_diff(y, omega_pow(ey)), u);
  return {x_below, y_below};
}

}  // namespace transfinitum
