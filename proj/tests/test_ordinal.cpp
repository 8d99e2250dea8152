#include <doctest.h>

#include "support.hpp"
#include "transfinitum/free_oracle.hpp"
#include "transfinitum/sample.hpp"

using namespace support;

TEST_CASE("rendering and parsing") {
  CHECK(Ordinal{}.to_string() == "0");
  CHECK(Ordinal{42}.to_string() == "42");
  CHECK(Ordinal::omega().to_string() == "w");
  CHECK(O("w^(w)*2 + w^(3)*5 + 7").to_string() == "w^(w)*2 + w^(3)*5 + 7");
  CHECK(O(" w^( w ) *2+w^(3)*5+7 ") == O("w^(w)*2 + w^(3)*5 + 7"));
  CHECK(O("w^(1)") == Ordinal::omega());
  CHECK(O("w^(0)*3").to_string() == "3");
  CHECK(O("w^(w^(w))").to_string() == "w^(w^(w))");
  CHECK(O("123456789012345678901234567890").to_string() == "123456789012345678901234567890");

  CHECK_THROWS_AS(O("w + w^(2)"), ParseError);  // increasing exponents
  CHECK_THROWS_AS(O("w + w"), ParseError);      // repeated exponent
  CHECK_THROWS_AS(O("w*0"), ParseError);
  CHECK_THROWS_AS(O("w^2"), ParseError);
  CHECK_THROWS_AS(O(""), ParseError);
  try {
    O("w + x");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("comparison") {
  CHECK(cmp_ord(O("w"), O("1000")) > 0);
  CHECK(cmp_ord(O("w^(2)"), O("w*1000 + 5")) > 0);
  CHECK(cmp_ord(O("w*2"), O("w + 9")) > 0);
  CHECK(cmp_ord(O("w + 1"), O("w + 1")) == 0);
  CHECK(cmp_ord(O("w^(w)"), O("w^(w) + 1")) < 0);
  CHECK(cmp_ord(Ordinal{}, Ordinal{1}) < 0);
}

TEST_CASE("natural sum") {
  CHECK(nat_sum(1, Ordinal::omega()) == O("w + 1"));
  CHECK(std_add(1, Ordinal::omega()) == Ordinal::omega());
  CHECK(nat_sum(O("w^(w) + w"), O("w*2 + 3")) == O("w^(w) + w*3 + 3"));
  CHECK(nat_sum(Ordinal{}, O("w^(2) + 4")) == O("w^(2) + 4"));
}

TEST_CASE("natural product") {
  CHECK(nat_prod(O("w"), O("w")) == O("w^(2)"));
  CHECK(nat_prod(O("w + 1"), O("w + 1")) == O("w^(2) + w*2 + 1"));
  CHECK(nat_prod(O("w^(w) + 3"), 1) == O("w^(w) + 3"));
  CHECK(nat_prod(O("w^(w)"), O("w")) == O("w^(w + 1)"));
  CHECK(std_mul(O("w"), O("w^(w)")) == O("w^(w)"));
  CHECK(nat_prod(O("w*2"), Ordinal{}) == Ordinal{});
}

TEST_CASE("natural difference") {
  CHECK(nat_diff(O("w + 5"), 5) == O("w"));
  CHECK_FALSE(nat_diff(O("w"), 1));
  CHECK(nat_diff(O("w*3 + 2"), O("w*3 + 2")) == Ordinal{});
  CHECK(nat_meet(O("w*3 + 2"), O("w^(2) + w + 7")) == O("w + 2"));
}

TEST_CASE("powers and principal ordinals") {
  CHECK(omega_pow(0) == Ordinal{1});
  CHECK(omega_pow(1) == Ordinal::omega());
  CHECK(omega_pow(Ordinal::omega()) == O("w^(w)"));
  CHECK(is_additively_principal(O("w")));
  CHECK_FALSE(is_additively_principal(O("w*2")));
  CHECK(is_additively_principal(O("w^(w)")));
  CHECK_FALSE(is_additively_principal(Ordinal{}));
  CHECK(is_principal(O("w")));
  CHECK_FALSE(is_principal(O("w^(2)")));
  CHECK(is_principal(O("w^(w)")));
  CHECK_FALSE(is_principal(Ordinal{}));
  CHECK_FALSE(is_principal(Ordinal{1}));
}

TEST_CASE("standard arithmetic") {
  CHECK(std_add(O("w + 3"), O("w")) == O("w*2"));
  CHECK(std_add(O("w^(2)"), O("w + 1")) == O("w^(2) + w + 1"));
  CHECK(std_mul(O("w + 1"), 2) == O("w*2 + 1"));
  CHECK(std_mul(2, O("w")) == O("w"));
  CHECK(std_left_sub(O("w"), O("w^(2) + 3")) == O("w^(2) + 3"));
  CHECK(std_left_sub(O("w*2"), O("w*2 + 5")) == O("5"));
  CHECK_THROWS_AS(std_left_sub(O("w + 1"), O("w")), PreconditionFault);
}

namespace {

bool sum_witness_valid(const Ordinal& z, const Ordinal& x, const Ordinal& y, const SumWitness& w) {
  bool left = w.side == WitnessSide::left;
  Ordinal reached = left ? nat_sum(w.value, y) : nat_sum(x, w.value);
  return cmp_ord(w.value, left ? x : y) < 0 && cmp_ord(z, reached) <= 0 && cmp_ord(reached, nat_sum(x, y)) < 0;
}

bool prod_witness_valid(const Ordinal& z, const Ordinal& x, const Ordinal& y, const ProdWitness& w) {
  OrdInt X = oi_from_ordinal(x), Y = oi_from_ordinal(y);
  OrdInt Xp = oi_from_ordinal(w.x_below), Yp = oi_from_ordinal(w.y_below);
  OrdInt mid = oi_sub(oi_add(oi_mul(X, Yp), oi_mul(Xp, Y)), oi_mul(Xp, Yp));
  return cmp_ord(w.x_below, x) < 0 && cmp_ord(w.y_below, y) < 0 && oi_cmp(oi_from_ordinal(z), mid) <= 0 &&
         oi_cmp(mid, oi_mul(X, Y)) < 0;
}

}  // namespace

TEST_CASE("sum witnesses") {
  auto w = cofinal_witness_sum(O("w + 3"), O("w"), O("w"));
  CHECK(w.side == WitnessSide::left);
  CHECK(w.value == Ordinal{3});
  w = cofinal_witness_sum(0, 1, 1);
  CHECK(w.side == WitnessSide::left);
  CHECK(w.value == Ordinal{});
  // The construction majorizes coordinatewise: k = max(5, 4) = 5, and 5 (-) 4 = 1.
  w = cofinal_witness_sum(5, 3, 4);
  CHECK(w.side == WitnessSide::left);
  CHECK(w.value == Ordinal{1});
  CHECK(sum_witness_valid(5, 3, 4, w));
  // Nothing below x = 0, so the witness must come from the right.
  w = cofinal_witness_sum(O("w*2"), 0, O("w*3"));
  CHECK(w.side == WitnessSide::right);
  CHECK(sum_witness_valid(O("w*2"), 0, O("w*3"), w));

  CHECK_THROWS_AS(cofinal_witness_sum(O("w*2"), O("w"), O("w")), PreconditionFault);
  CHECK_THROWS_AS(cofinal_witness_sum(0, 0, 0), PreconditionFault);
}

TEST_CASE("sum witnesses agree with exhaustive search over small ordinals") {
  auto pool = small_ordinals({Ordinal{2}, Ordinal{1}, Ordinal{}}, 2);
  for (const auto& x : pool)
    for (const auto& y : pool) {
      if (x.is_zero() && y.is_zero()) continue;
      for (const auto& z : pool) {
        if (cmp_ord(z, nat_sum(x, y)) >= 0) continue;
        auto w = cofinal_witness_sum(z, x, y);
        INFO(z.to_string(), " ", x.to_string(), " ", y.to_string());
        REQUIRE(sum_witness_valid(z, x, y, w));
      }
    }
}

TEST_CASE("product witnesses") {
  auto w = cofinal_witness_prod(0, O("w"), O("w"));
  CHECK(w.x_below == Ordinal{});
  CHECK(w.y_below == Ordinal{});
  w = cofinal_witness_prod(5, 2, 3);
  CHECK(w.x_below == Ordinal{1});
  CHECK(w.y_below == Ordinal{2});
  w = cofinal_witness_prod(O("w*3 + 1"), O("w"), O("w"));
  CHECK(prod_witness_valid(O("w*3 + 1"), O("w"), O("w"), w));
  CHECK_THROWS_AS(cofinal_witness_prod(1, O("w"), 0), PreconditionFault);
  CHECK_THROWS_AS(cofinal_witness_prod(O("w^(2)"), O("w"), O("w")), PreconditionFault);
}

TEST_CASE("product witnesses agree with exhaustive search for naturals") {
  for (unsigned x = 1; x <= 8; ++x)
    for (unsigned y = 1; y <= 8; ++y)
      for (unsigned z = 0; z < x * y; ++z) {
        bool exists = false;
        for (unsigned a = 0; a < x && !exists; ++a)
          for (unsigned b = 0; b < y && !exists; ++b) {
            long mid = long(x) * b + long(a) * y - long(a) * b;
            exists = long(z) <= mid && mid < long(x * y);
          }
        REQUIRE(exists);
        REQUIRE(prod_witness_valid(z, x, y, cofinal_witness_prod(z, x, y)));
      }
}

TEST_CASE("product witnesses on random inputs") {
  sample::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Ordinal x, y;
    while (x.is_zero()) x = sample::ordinal(rng, {2, 3, 9});
    while (y.is_zero()) y = sample::ordinal(rng, {2, 3, 9});
    Ordinal z = sample::below(rng, nat_prod(x, y));
    INFO(z.to_string(), " ", x.to_string(), " ", y.to_string());
    REQUIRE(prod_witness_valid(z, x, y, cofinal_witness_prod(z, x, y)));
  }
}

TEST_CASE("Hessenberg laws exhaustively over small ordinals") {
  auto pool = small_ordinals({Ordinal::omega(), Ordinal{1}, Ordinal{}}, 1);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      REQUIRE(nat_sum(a, b) == nat_sum(b, a));
      REQUIRE(nat_prod(a, b) == nat_prod(b, a));
      REQUIRE(nat_diff(nat_sum(a, b), b) == a);
      for (const auto& c : pool) {
        REQUIRE(nat_sum(nat_sum(a, b), c) == nat_sum(a, nat_sum(b, c)));
        REQUIRE(nat_prod(nat_prod(a, b), c) == nat_prod(a, nat_prod(b, c)));
        REQUIRE(nat_prod(a, nat_sum(b, c)) == nat_sum(nat_prod(a, b), nat_prod(a, c)));
        if (cmp_ord(a, b) < 0) REQUIRE(cmp_ord(nat_sum(a, c), nat_sum(b, c)) < 0);
      }
    }
}

TEST_CASE("natural product matches the polynomial oracle") {
  sample::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    auto p = sample::polynomial(rng), q = sample::polynomial(rng);
    REQUIRE(nat_prod(iso_to_ordinal(p), iso_to_ordinal(q)) == iso_to_ordinal(poly_mul(p, q)));
  }
}

TEST_CASE("inductive rule for naturals") {
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned m = 0; m <= 20; ++m) CHECK(nat_sum(n, m) == Ordinal{n + m});
}
