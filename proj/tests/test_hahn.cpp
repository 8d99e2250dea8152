#include <doctest.h>

#include "support.hpp"
#include "transfinitum/sample.hpp"

using namespace support;

namespace {

HahnSeries t_to(const OrdRat& e, const Rational& c = 1) { return HahnSeries::monomial(c, e); }

}  // namespace

TEST_CASE("rendering") {
  auto s = h_add(h_add(T(2, 1), HahnSeries(3)), T(-5, -1));
  CHECK(s.to_string() == "2*t + 3 - 5*t^(-1)");
  CHECK(HahnSeries{}.to_string() == "0");
  CHECK(h_neg(HahnSeries::t()).to_string() == "-t");
  CHECK(t_to(oq_inv(OrdRat(I("w"))), Rational(1, 2)).to_string() == "1/2*t^((1)/(w))");
}

TEST_CASE("ring operations") {
  auto t = HahnSeries::t();
  CHECK(h_mul(h_add(t, 1), h_sub(t, 1)) == h_sub(T(1, 2), 1));
  auto a = h_add(T(3, 2), T(-1, -3));
  CHECK(h_add(a, h_neg(a)).is_zero());
  OrdRat inv_w = oq_inv(OrdRat(I("w")));
  CHECK(h_mul(t_to(inv_w, 3), t_to(inv_w, 2)) == t_to(OrdRat(2, I("w")), 6));
  // Exponents compare semantically: 2/(2w) and 1/w are one exponent.
  CHECK(h_add(t_to(OrdRat(2, I("w*2"))), t_to(inv_w)) == t_to(inv_w, 2));
}

TEST_CASE("order") {
  CHECK(h_cmp(HahnSeries::t(), HahnSeries(1000000000)) > 0);
  CHECK(h_cmp(T(1, -1), 0) > 0);
  for (long q : {1L, 1000L}) CHECK(h_cmp(T(1, -1), HahnSeries(Rational(1, q))) < 0);
  CHECK(h_cmp(h_add(HahnSeries::t(), 1), h_add(HahnSeries::t(), 2)) < 0);
  CHECK(h_cmp(t_to(OrdRat(I("w"))), T(1, 1000)) > 0);
}

TEST_CASE("truncated inverse") {
  auto a = h_sub(1, T(1, -1));
  auto inv = h_inv_trunc(a, 3);
  CHECK(inv == h_add(h_add(1, T(1, -1)), T(1, -2)));
  CHECK(h_mul(a, inv) == h_sub(1, T(1, -3)));
  CHECK(h_inv_trunc(HahnSeries(2), 1) == HahnSeries(Rational(1, 2)));
  CHECK(h_inv_trunc(HahnSeries::t(), 1) == T(1, -1));
  CHECK_THROWS_AS(h_inv_trunc(HahnSeries{}, 2), PreconditionFault);
  CHECK_THROWS_AS(h_inv_trunc(HahnSeries::t(), 0), PreconditionFault);
}

TEST_CASE("truncated inverse residual on random series") {
  sample::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    auto a = sample::hahn(rng);
    if (a.is_zero()) continue;
    for (unsigned n = 1; n <= 3; ++n) {
      auto r = h_sub(h_mul(a, h_inv_trunc(a, n)), 1);
      if (r.is_zero()) continue;
      const auto& lead = a.leading();
      auto u = h_sub(h_mul(a, t_to(oq_neg(lead.exponent), 1 / lead.coefficient)), 1);
      REQUIRE(u.leading().exponent.sign() < 0);
      REQUIRE(oq_cmp(r.leading().exponent, oq_mul(OrdRat(long(n)), u.leading().exponent)) <= 0);
    }
  }
}

TEST_CASE("Archimedean classes") {
  CHECK(commensurate(h_add(T(5, 1), 1), HahnSeries::t()));
  CHECK_FALSE(commensurate(HahnSeries::t(), T(1, 2)));
  CHECK_THROWS_AS(commensurate(HahnSeries{}, HahnSeries::t()), PreconditionFault);
  CHECK(archimedean_sign(T(7, -1)) == ArchimedeanClass::infinitesimal);
  CHECK(archimedean_sign(HahnSeries{}) == ArchimedeanClass::finite);
  CHECK(archimedean_sign(h_add(3, T(1, -2))) == ArchimedeanClass::finite);
  CHECK(archimedean_sign(T(-1, 1)) == ArchimedeanClass::infinite);
  CHECK(std::string(archimedean_name(ArchimedeanClass::infinitesimal)) == "infinitesimal");
}

TEST_CASE("embeddings") {
  CHECK(h_from_ordinal(O("w*2 + 3")) == h_add(T(2, 1), 3));
  CHECK(h_from_ordinal(O("w^(w)")) == t_to(OrdRat(I("w"))));
  CHECK(h_from_ordint(oi_sub(I("w"), 1)) == h_sub(HahnSeries::t(), 1));
  CHECK(h_from_rational(Rational(-3, 7)) == HahnSeries(Rational(-3, 7)));
  CHECK(h_from_ordinal(Ordinal{}).is_zero());
}
