#include <doctest.h>

#include "support.hpp"
#include "transfinitum/free_oracle.hpp"
#include "transfinitum/sample.hpp"

using namespace support;

namespace {

NatPolynomial g(GeneratorIndex k, unsigned power = 1, unsigned coefficient = 1) {
  return NatPolynomial::monomial(Monomial::generator(k, power), coefficient);
}

}  // namespace

TEST_CASE("polynomial semiring") {
  auto p = poly_add(g(0, 2), g(1));
  CHECK(poly_add(NatPolynomial{}, p) == p);
  CHECK(poly_add(g(0, 1, 2), g(0, 1, 3)) == g(0, 1, 5));
  CHECK(p.coeffs().size() == 2);
  CHECK(poly_mul(NatPolynomial{1}, p) == p);
  CHECK(poly_mul(p, NatPolynomial{}).is_zero());
  auto x1 = poly_add(g(0), NatPolynomial{1});
  CHECK(poly_mul(x1, x1) == poly_add(poly_add(g(0, 2), g(0, 1, 2)), NatPolynomial{1}));
}

TEST_CASE("isomorphism onto ordinals below w^(w^w)") {
  CHECK(iso_to_ordinal(g(0)) == O("w"));
  CHECK(iso_to_ordinal(g(1)) == O("w^(w)"));
  auto p = poly_add(g(0, 2, 2), NatPolynomial{3});
  CHECK(iso_to_ordinal(p) == O("w^(2)*2 + 3"));
  CHECK(iso_from_ordinal(O("w^(2)*2 + 3")) == p);
  CHECK(iso_from_ordinal(Ordinal{}).is_zero());
  CHECK(iso_to_ordinal(poly_mul(g(2, 1), g(0, 3))) == O("w^(w^(2) + 3)"));
  CHECK(in_oracle_range(O("w^(w^(5)*2 + w + 1)")));
  CHECK_FALSE(in_oracle_range(O("w^(w^(w))")));
  CHECK_THROWS_AS(iso_from_ordinal(O("w^(w^(w))")), OutOfOracleRange);
  CHECK_THROWS_WITH(iso_from_ordinal(O("w^(w^(w) + 1)")), "out of oracle range");
}

TEST_CASE("oracle homomorphism") {
  sample::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto a = sample::oracle_ordinal(rng), b = sample::oracle_ordinal(rng);
    auto p = iso_from_ordinal(a), q = iso_from_ordinal(b);
    REQUIRE(iso_to_ordinal(p) == a);
    REQUIRE(iso_to_ordinal(poly_add(p, q)) == nat_sum(a, b));
    REQUIRE(iso_to_ordinal(poly_mul(p, q)) == nat_prod(a, b));
  }
}

TEST_CASE("rendering") {
  CHECK(NatPolynomial{}.to_string() == "0");
  CHECK(poly_add(g(0, 2, 3), NatPolynomial{1}).to_string().find("g0^2") != std::string::npos);
}
