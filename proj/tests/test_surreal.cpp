#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "transfinitum/sample.hpp"

using namespace support;

namespace {

SignExpansion D(long p, long q = 1) { return from_dyadic(Rational(p, q)); }

bool strictly_between(const std::vector<SignExpansion>& left, const std::vector<SignExpansion>& right,
                      const SignExpansion& x) {
  return std::all_of(left.begin(), left.end(), [&](const auto& l) { return s_cmp(l, x) < 0; }) &&
         std::all_of(right.begin(), right.end(), [&](const auto& r) { return s_cmp(x, r) < 0; });
}

// Second route to {L | R}: walk down the tree one sign at a time.
SignExpansion greedy_simplest(const std::vector<SignExpansion>& left, const std::vector<SignExpansion>& right) {
  std::string signs;
  for (;;) {
    auto x = SignExpansion::from_signs(signs);
    if (strictly_between(left, right, x)) return x;
    bool go_up = std::any_of(left.begin(), left.end(), [&](const auto& l) { return s_cmp(l, x) >= 0; });
    signs += go_up ? '+' : '-';
  }
}

}  // namespace

TEST_CASE("order") {
  CHECK(s_cmp(S("+"), S("")) > 0);
  CHECK(s_cmp(S("+-"), S("+")) < 0);
  CHECK(s_cmp(S("-"), S("+")) < 0);
  CHECK(s_cmp(S("(w:+)"), S("+++++")) > 0);
  CHECK(s_cmp(S("(w:+)(1:-)"), S("(w:+)")) < 0);
  CHECK(s_cmp(S("(w:+)(1:-)"), S("+++")) > 0);
  CHECK(s_cmp(S("(w:-)"), S("-")) < 0);
}

TEST_CASE("run-length form") {
  CHECK(S("++(w:+)") == S("(w:+)"));  // 2 + w = w
  CHECK(S("(w:+)++") == SignExpansion::from_runs({{O("w + 2"), Sign::plus}}));
  CHECK(S("(w:+)(1:-)").to_string() == "(w:+)(1:-)");
  CHECK(S("+-+").to_string() == "+-+");
  CHECK(S("").to_string().empty());
  CHECK_THROWS_AS(S("+x"), ParseError);
  CHECK_THROWS_AS(S("(w:*)"), ParseError);
  CHECK_THROWS_AS(S("(0:+)"), ParseError);
}

TEST_CASE("birthdays") {
  CHECK(birthday(S("")) == Ordinal{});
  CHECK(birthday(S("+-+")) == Ordinal{3});
  CHECK(birthday(S("(w:+)(1:-)")) == O("w + 1"));
}

TEST_CASE("canonical options") {
  auto o = canonical_options(S(""));
  CHECK(o.left.empty());
  CHECK(o.right.empty());
  o = canonical_options(S("++"));
  CHECK(o.left == std::vector<SignExpansion>{S(""), S("+")});
  CHECK(o.right.empty());
  o = canonical_options(S("+-"));
  CHECK(o.left == std::vector<SignExpansion>{S("")});
  CHECK(o.right == std::vector<SignExpansion>{S("+")});
  CHECK_THROWS_AS(canonical_options(S("(w:+)")), TransfiniteOptions);
  CHECK_THROWS_WITH(canonical_options(S("(w:+)")), "transfinite options");
}

TEST_CASE("simplest element of a cut") {
  CHECK(simplest_between({}, {}) == S(""));
  std::vector<SignExpansion> l{S("")}, r{S("+")};
  CHECK(simplest_between(l, r) == S("+-"));
  l = {S("+-")}, r = {S("++")};
  CHECK(simplest_between(l, r) == S("+"));
  l = {S("+++")}, r = {};
  CHECK(simplest_between(l, r) == S("++++"));
  l = {S("(w:+)")};
  CHECK(simplest_between(l, r) == S("(w:+)(1:+)"));
  l = {}, r = {S("(w:+)")};
  CHECK(simplest_between(l, r) == S(""));
  l = {S("+++")}, r = {S("(w:+)")};
  CHECK(simplest_between(l, r) == S("++++"));
  l = {S("(w:+)")}, r = {S("(w:+)(1:+)")};
  CHECK(simplest_between(l, r) == S("(w:+)(1:+)(1:-)"));
  l = {S("+")}, r = {S("+")};
  CHECK_THROWS_AS(simplest_between(l, r), OverlappingCut);
  CHECK_THROWS_WITH(simplest_between(l, r), "overlapping cut");
}

TEST_CASE("simplicity agrees with exhaustive enumeration and the greedy walk") {
  auto universe = sample::all_expansions(5);
  sample::Rng rng(17);
  for (int i = 0; i < 400; ++i) {
    std::vector<SignExpansion> pool;
    auto k = sample::uniform(rng, 0, 6);
    for (std::uint64_t j = 0; j < k; ++j) pool.push_back(universe[sample::uniform(rng, 0, universe.size() - 1)]);
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto cut = pool.empty() ? 0 : sample::uniform(rng, 0, pool.size());
    std::vector<SignExpansion> left(pool.begin(), pool.begin() + long(cut)), right(pool.begin() + long(cut), pool.end());
    auto x = simplest_between(left, right);
    REQUIRE(strictly_between(left, right, x));
    REQUIRE(x == greedy_simplest(left, right));
    std::size_t at_height = 0;
    for (const auto& v : universe) {
      if (!strictly_between(left, right, v)) continue;
      REQUIRE(cmp_ord(birthday(v), birthday(x)) >= 0);
      if (birthday(v) == birthday(x)) ++at_height;
    }
    if (cmp_ord(birthday(x), Ordinal{5}) <= 0) REQUIRE(at_height == 1);
  }
}

TEST_CASE("step budget") {
  CHECK(step_budget() == default_step_budget);
  set_step_budget(20);
  std::vector<SignExpansion> l{D(1000)}, r;
  CHECK_THROWS_AS(simplest_between(l, r), StepBudgetExceeded);
  CHECK_THROWS_WITH(simplest_between(l, r), "step budget exceeded");
  set_step_budget(default_step_budget);
  CHECK(simplest_between(l, r) == D(1001));
}

TEST_CASE("field operations") {
  CHECK(s_add(D(1, 2), D(1, 2)) == D(1));
  CHECK(s_neg(S("+-")) == S("-+"));
  CHECK(s_neg_recursive(S("+-")) == S("-+"));
  CHECK(s_mul(D(2), D(1, 2)) == D(1));
  CHECK(s_mul(D(3), D(-3, 4)) == D(-9, 4));
  CHECK(s_sub(D(3, 8), D(5, 4)) == D(-7, 8));
  CHECK(s_add(D(5), D(-5)) == S(""));
  CHECK_THROWS_AS(s_add(S("(w:+)"), S("+")), TransfiniteOptions);
  CHECK(s_neg(S("(w:+)(1:-)")) == S("(w:-)(1:+)"));
}

TEST_CASE("field operations match dyadic values") {
  auto xs = sample::all_expansions(4);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      REQUIRE(to_dyadic(s_add(x, y)) == to_dyadic(x) + to_dyadic(y));
      REQUIRE(to_dyadic(s_mul(x, y)) == to_dyadic(x) * to_dyadic(y));
    }
}

TEST_CASE("memoization never changes results") {
  auto a = D(7, 8), b = D(-5, 4);
  auto first = s_mul(a, b);
  CHECK(surreal_memo_size() > 0);
  clear_surreal_memo();
  CHECK(surreal_memo_size() == 0);
  CHECK(s_mul(a, b) == first);
}

TEST_CASE("inverses") {
  CHECK(s_inv_exact(D(2)) == D(1, 2));
  CHECK(s_inv_exact(D(-1, 4)) == D(-4));
  CHECK_FALSE(s_inv_exact(D(3)));
  CHECK_THROWS_AS(s_inv_exact(S("")), PreconditionFault);
  for (unsigned depth = 1; depth <= 4; ++depth) {
    for (auto x : {D(3), D(3, 4), D(-5, 2), D(7, 16)}) {
      auto b = s_inv_approx(x, depth);
      CHECK(s_cmp(b.lower, b.upper) < 0);
      Rational v = to_dyadic(x);
      CHECK(to_dyadic(b.lower) < 1 / v);
      CHECK(1 / v < to_dyadic(b.upper));
      if (v > 0) {
        CHECK(s_cmp(s_mul(x, b.lower), D(1)) < 0);
        CHECK(s_cmp(D(1), s_mul(x, b.upper)) < 0);
      }
    }
  }
  // More rounds never loosen the bounds.
  auto coarse = s_inv_approx(D(3), 2), fine = s_inv_approx(D(3), 4);
  CHECK(to_dyadic(fine.upper) - to_dyadic(fine.lower) <= to_dyadic(coarse.upper) - to_dyadic(coarse.lower));
  CHECK_THROWS_AS(s_inv_approx(S(""), 3), PreconditionFault);
}

TEST_CASE("dyadic bijection") {
  CHECK(to_dyadic(S("")) == 0);
  CHECK(to_dyadic(S("+-+")) == Rational(3, 4));
  CHECK(from_dyadic(Rational(-5, 8)) == S("-+-+"));
  CHECK(to_dyadic(S("-+--")) == Rational(-7, 8));
  CHECK(from_dyadic(Rational(3, 4)) == S("+-+"));
  CHECK_THROWS_AS(from_dyadic(Rational(1, 3)), PreconditionFault);
  CHECK_THROWS_AS(to_dyadic(S("(w:+)")), PreconditionFault);
  auto all = sample::all_expansions(6);
  std::sort(all.begin(), all.end());
  for (const auto& x : all) REQUIRE(from_dyadic(to_dyadic(x)) == x);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(to_dyadic(all[i]) < to_dyadic(all[i + 1]));
}

TEST_CASE("ordinals inside the surreals") {
  CHECK(s_from_ordinal(0) == S(""));
  CHECK(s_from_ordinal(3) == S("+++"));
  CHECK(s_from_ordinal(O("w")) == S("(w:+)"));
}
