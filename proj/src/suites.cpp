#include "transfinitum/suites.hpp"

#include <algorithm>
#include <functional>

#include "transfinitum/free_oracle.hpp"
#include "transfinitum/hahn.hpp"
#include "transfinitum/sample.hpp"
#include "transfinitum/surreal.hpp"
#include "transfinitum/tower.hpp"
#include "transfinitum/unify.hpp"

namespace transfinitum {

namespace {

using sample::Rng;

// Runs `body` once per case with a per-law generator, recording faults as failures.
Report law(const std::string& name, std::size_t cases, std::uint64_t seed,
           const std::function<void(Rng&, Report&)>& body) {
  Report r{name};
  Rng rng(seed ^ std::hash<std::string>{}(name));
  for (std::size_t i = 0; i < cases; ++i) {
    try {
      body(rng, r);
    } catch (const std::exception& e) {
      r.record(false, "case " + std::to_string(i), "no fault", e.what());
    }
  }
  return r;
}

std::string str(const Ordinal& a) { return a.to_string(); }
std::string str(const OrdInt& a) { return a.to_string(); }
std::string str(const OrdRat& a) { return a.to_string(); }
std::string str(const SignExpansion& a) { return "\"" + a.to_string() + "\""; }
std::string str(const HahnSeries& a) { return a.to_string(); }

template <typename... T>
std::string args(const T&... v) {
  std::string out;
  ((out += (out.empty() ? "" : ", ") + str(v)), ...);
  return out;
}

template <typename T>
void expect_eq(Report& r, const std::string& inputs, const T& want, const T& got) {
  r.record(want == got, inputs, str(want), str(got));
}

// ---------------------------------------------------------------------------

Report ordinal_suite(std::size_t n, std::uint64_t seed) {
  Report s{"ordinal"};
  auto ord = [](Rng& g) { return sample::ordinal(g); };

  s.absorb(law("natural sum/product commutative", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g);
    expect_eq(r, args(a, b), nat_sum(a, b), nat_sum(b, a));
    expect_eq(r, args(a, b), nat_prod(a, b), nat_prod(b, a));
  }));
  s.absorb(law("natural sum/product associative", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g), c = ord(g);
    expect_eq(r, args(a, b, c), nat_sum(nat_sum(a, b), c), nat_sum(a, nat_sum(b, c)));
    expect_eq(r, args(a, b, c), nat_prod(nat_prod(a, b), c), nat_prod(a, nat_prod(b, c)));
  }));
  s.absorb(law("natural product distributes over natural sum", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g), c = ord(g);
    expect_eq(r, args(a, b, c), nat_prod(a, nat_sum(b, c)), nat_sum(nat_prod(a, b), nat_prod(a, c)));
  }));
  s.absorb(law("units 0 and 1", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g);
    expect_eq(r, args(a), a, nat_sum(a, Ordinal{}));
    expect_eq(r, args(a), a, nat_prod(a, Ordinal{1}));
    expect_eq(r, args(a), Ordinal{}, nat_prod(a, Ordinal{}));
  }));
  s.absorb(law("cancellation", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = sample::coin(g) ? ord(g) : a, c = ord(g);
    r.record((nat_sum(a, c) == nat_sum(b, c)) == (a == b), args(a, b, c), "sum cancels", "sum does not cancel");
    if (!c.is_zero())
      r.record((nat_prod(a, c) == nat_prod(b, c)) == (a == b), args(a, b, c), "product cancels",
               "product does not cancel");
  }));
  s.absorb(law("strict monotonicity", n, seed, [&](Rng& g, Report& r) {
    Ordinal x = ord(g), xp = ord(g);
    Ordinal y = x.is_zero() ? x : sample::below(g, x), yp = xp.is_zero() ? xp : sample::below(g, xp);
    if (x.is_zero() || xp.is_zero()) return r.record(true);
    r.record(cmp_ord(nat_sum(x, xp), nat_sum(y, yp)) > 0, args(x, xp, y, yp), "x(+)x' > y(+)y'", "not greater");
    auto lhs = nat_sum(nat_prod(x, xp), nat_prod(y, yp));
    auto rhs = nat_sum(nat_prod(x, yp), nat_prod(y, xp));
    r.record(cmp_ord(lhs, rhs) > 0, args(x, xp, y, yp), "xx'+yy' > xy'+yx'", args(lhs, rhs));
  }));
  s.absorb(law("order compatible with natural sum", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g), c = ord(g);
    auto o = cmp_ord(a, b);
    r.record(cmp_ord(nat_sum(a, c), nat_sum(b, c)) == o, args(a, b, c), ordering_name(o), "differs");
    r.record(cmp_ord(b, a) == (0 <=> o), args(a, b), "antisymmetric", "not antisymmetric");
  }));
  s.absorb(law("restriction to naturals", n, seed, [&](Rng& g, Report& r) {
    auto p = sample::uniform(g, 0, 1u << 20), q = sample::uniform(g, 0, 1u << 20);
    expect_eq(r, std::to_string(p) + ", " + std::to_string(q), Ordinal{p + q}, nat_sum(Ordinal{p}, Ordinal{q}));
    expect_eq(r, std::to_string(p) + ", " + std::to_string(q), Ordinal{p * q}, nat_prod(Ordinal{p}, Ordinal{q}));
  }));
  s.absorb(law("natural difference inverts natural sum", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g);
    auto d = nat_diff(nat_sum(a, b), b);
    r.record(d && *d == a, args(a, b), str(a), d ? str(*d) : "undefined");
    if (auto e = nat_diff(a, b)) expect_eq(r, args(a, b), a, nat_sum(*e, b));
  }));
  s.absorb(law("inductive rule for the natural sum of naturals", std::min<std::size_t>(n, 65), seed,
               [&, k = 0u](Rng&, Report& r) mutable {
                 unsigned nn = k++;
                 for (unsigned m = 0; m <= 64; ++m) {
                   // least ordinal above every n'+m and n+m'
                   unsigned long mex = 0;
                   for (unsigned np = 0; np < nn; ++np)
                     mex = std::max<unsigned long>(mex, nat_sum(Ordinal{np}, Ordinal{m}).as_natural()->get_ui() + 1);
                   for (unsigned mp = 0; mp < m; ++mp)
                     mex = std::max<unsigned long>(mex, nat_sum(Ordinal{nn}, Ordinal{mp}).as_natural()->get_ui() + 1);
                   expect_eq(r, std::to_string(nn) + ", " + std::to_string(m), Ordinal{mex},
                             nat_sum(Ordinal{nn}, Ordinal{m}));
                 }
               }));
  s.absorb(law("sum witnesses", n, seed, [&](Rng& g, Report& r) {
    Ordinal x = ord(g), y = ord(g);
    if (x.is_zero() && y.is_zero()) y = Ordinal{1};
    Ordinal total = nat_sum(x, y);
    Ordinal z = sample::below(g, total);
    auto w = cofinal_witness_sum(z, x, y);
    bool left = w.side == WitnessSide::left;
    Ordinal reached = left ? nat_sum(w.value, y) : nat_sum(x, w.value);
    bool ok = cmp_ord(w.value, left ? x : y) < 0 && cmp_ord(z, reached) <= 0 && cmp_ord(reached, total) < 0;
    r.record(ok, args(z, x, y), "valid witness", (left ? "left " : "right ") + str(w.value));
  }));
  s.absorb(law("product witnesses", n, seed, [&](Rng& g, Report& r) {
    Ordinal x, y;
    while (x.is_zero()) x = sample::ordinal(g, {2, 3, 9});
    while (y.is_zero()) y = sample::ordinal(g, {2, 3, 9});
    OrdInt xy = oi_from_ordinal(nat_prod(x, y));
    Ordinal z = sample::below(g, nat_prod(x, y));
    auto w = cofinal_witness_prod(z, x, y);
    OrdInt X = oi_from_ordinal(x), Y = oi_from_ordinal(y);
    OrdInt Xp = oi_from_ordinal(w.x_below), Yp = oi_from_ordinal(w.y_below);
    OrdInt mid = oi_sub(oi_add(oi_mul(X, Yp), oi_mul(Xp, Y)), oi_mul(Xp, Yp));
    bool ok = cmp_ord(w.x_below, x) < 0 && cmp_ord(w.y_below, y) < 0 && oi_cmp(oi_from_ordinal(z), mid) <= 0 &&
              oi_cmp(mid, xy) < 0;
    r.record(ok, args(z, x, y), "valid witness", args(w.x_below, w.y_below));
  }));
  s.absorb(law("standard operations", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g), b = ord(g), c = ord(g);
    expect_eq(r, args(a, b, c), std_add(std_add(a, b), c), std_add(a, std_add(b, c)));
    expect_eq(r, args(a, b, c), std_mul(a, std_add(b, c)), std_add(std_mul(a, b), std_mul(a, c)));
    r.record(cmp_ord(std_add(a, b), nat_sum(a, b)) <= 0, args(a, b), "a+b <= a(+)b", "greater");
    expect_eq(r, args(a, std_add(a, b)), b, std_left_sub(a, std_add(a, b)));
  }));
  s.absorb(law("text round trip", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = ord(g);
    expect_eq(r, args(a), a, Ordinal::parse(a.to_string()));
  }));
  return s;
}

// ---------------------------------------------------------------------------

Report oracle_suite(std::size_t n, std::uint64_t seed) {
  Report s{"oracle"};
  s.absorb(law("free-semiring homomorphism", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = sample::oracle_ordinal(g), b = sample::oracle_ordinal(g);
    auto p = iso_from_ordinal(a), q = iso_from_ordinal(b);
    expect_eq(r, args(a, b), iso_to_ordinal(poly_add(p, q)), nat_sum(a, b));
    expect_eq(r, args(a, b), iso_to_ordinal(poly_mul(p, q)), nat_prod(a, b));
  }));
  s.absorb(law("isomorphism round trips", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = sample::oracle_ordinal(g);
    expect_eq(r, args(a), a, iso_to_ordinal(iso_from_ordinal(a)));
    auto p = sample::polynomial(g);
    r.record(iso_from_ordinal(iso_to_ordinal(p)) == p, p.to_string(), "identity", "differs");
  }));
  s.absorb(law("injectivity", n, seed, [&](Rng& g, Report& r) {
    auto p = sample::polynomial(g), q = sample::polynomial(g);
    r.record((p == q) == (iso_to_ordinal(p) == iso_to_ordinal(q)), p.to_string() + ", " + q.to_string(),
             "distinct images", "collision");
  }));
  return s;
}

// ---------------------------------------------------------------------------

Report tower_suite(std::size_t n, std::uint64_t seed) {
  Report s{"tower"};
  auto oi = [](Rng& g) { return sample::ordint(g); };
  auto oq = [](Rng& g) { return sample::ordrat(g, {2, 3, 9}); };

  s.absorb(law("ordinal integers form a commutative ring", n, seed, [&](Rng& g, Report& r) {
    OrdInt a = oi(g), b = oi(g), c = oi(g);
    expect_eq(r, args(a, b), oi_add(a, b), oi_add(b, a));
    expect_eq(r, args(a, b), oi_mul(a, b), oi_mul(b, a));
    expect_eq(r, args(a, b, c), oi_add(oi_add(a, b), c), oi_add(a, oi_add(b, c)));
    expect_eq(r, args(a, b, c), oi_mul(oi_mul(a, b), c), oi_mul(a, oi_mul(b, c)));
    expect_eq(r, args(a, b, c), oi_mul(a, oi_add(b, c)), oi_add(oi_mul(a, b), oi_mul(a, c)));
    expect_eq(r, args(a), OrdInt{}, oi_add(a, oi_neg(a)));
    expect_eq(r, args(a), a, oi_mul(a, OrdInt(1)));
  }));
  s.absorb(law("no zero divisors", n, seed, [&](Rng& g, Report& r) {
    OrdInt a = oi(g), b = oi(g);
    r.record(oi_mul(a, b).is_zero() == (a.is_zero() || b.is_zero()), args(a, b), "ab = 0 iff a = 0 or b = 0",
             str(oi_mul(a, b)));
  }));
  s.absorb(law("ordered ring", n, seed, [&](Rng& g, Report& r) {
    OrdInt a = oi(g), b = oi(g), c = oi(g);
    auto o = oi_cmp(a, b);
    r.record(oi_cmp(oi_add(a, c), oi_add(b, c)) == o, args(a, b, c), "translation invariant", "not invariant");
    if (c.sign() > 0) r.record(oi_cmp(oi_mul(a, c), oi_mul(b, c)) == o, args(a, b, c), "scaling invariant", "not");
    if (a.sign() > 0 && b.sign() > 0)
      r.record(oi_add(a, b).sign() > 0 && oi_mul(a, b).sign() > 0, args(a, b), "positive cone closed", "not");
  }));
  s.absorb(law("ordinal embedding", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = sample::ordinal(g), b = sample::ordinal(g);
    expect_eq(r, args(a, b), oi_from_ordinal(nat_sum(a, b)), oi_add(oi_from_ordinal(a), oi_from_ordinal(b)));
    expect_eq(r, args(a, b), oi_from_ordinal(nat_prod(a, b)), oi_mul(oi_from_ordinal(a), oi_from_ordinal(b)));
    r.record(oi_cmp(oi_from_ordinal(a), oi_from_ordinal(b)) == cmp_ord(a, b), args(a, b), "same order", "differs");
    auto back = oi_to_ordinal(oi_from_ordinal(a));
    r.record(back && *back == a, args(a), "round trip", back ? str(*back) : "undefined");
  }));
  s.absorb(law("difference rule for products", n, seed, [&](Rng& g, Report& r) {
    Ordinal x = sample::ordinal(g), y = sample::ordinal(g), xp = sample::ordinal(g), yp = sample::ordinal(g);
    auto lift = oi_from_ordinal;
    OrdInt lhs = oi_mul(oi_sub(lift(x), lift(y)), oi_sub(lift(xp), lift(yp)));
    OrdInt rhs = oi_sub(lift(nat_sum(nat_prod(x, xp), nat_prod(y, yp))), lift(nat_sum(nat_prod(x, yp), nat_prod(xp, y))));
    expect_eq(r, args(x, y, xp, yp), rhs, lhs);
  }));
  s.absorb(law("ordinal rationals form an ordered field", n, seed, [&](Rng& g, Report& r) {
    OrdRat a = oq(g), b = oq(g), c = oq(g);
    auto eq = [&](const OrdRat& want, const OrdRat& got, const std::string& in) {
      r.record(oq_eq(want, got), in, str(want), str(got));
    };
    eq(oq_add(a, b), oq_add(b, a), args(a, b));
    eq(oq_mul(a, b), oq_mul(b, a), args(a, b));
    eq(oq_add(oq_add(a, b), c), oq_add(a, oq_add(b, c)), args(a, b, c));
    eq(oq_mul(oq_mul(a, b), c), oq_mul(a, oq_mul(b, c)), args(a, b, c));
    eq(oq_mul(a, oq_add(b, c)), oq_add(oq_mul(a, b), oq_mul(a, c)), args(a, b, c));
    eq(OrdRat{}, oq_add(a, oq_neg(a)), args(a));
    if (!a.is_zero()) eq(OrdRat(1), oq_mul(a, oq_inv(a)), args(a));
    auto o = oq_cmp(a, b);
    r.record(oq_cmp(b, a) == (0 <=> o), args(a, b), "antisymmetric", "not");
    r.record(oq_cmp(oq_add(a, c), oq_add(b, c)) == o, args(a, b, c), "translation invariant", "not");
    if (a.sign() > 0 && b.sign() > 0)
      r.record(oq_add(a, b).sign() > 0 && oq_mul(a, b).sign() > 0, args(a, b), "positive cone closed", "not");
    if (oq_cmp(a, b) < 0 && oq_cmp(b, c) < 0) r.record(oq_cmp(a, c) < 0, args(a, b, c), "transitive", "not");
  }));
  return s;
}

// ---------------------------------------------------------------------------

// Cut check shared with the tests: result strictly inside, nothing simpler inside.
bool simplest_is_least(const std::vector<SignExpansion>& left, const std::vector<SignExpansion>& right,
                       const SignExpansion& x, const std::vector<SignExpansion>& universe) {
  auto inside = [&](const SignExpansion& v) {
    return std::all_of(left.begin(), left.end(), [&](const auto& l) { return s_cmp(l, v) < 0; }) &&
           std::all_of(right.begin(), right.end(), [&](const auto& r) { return s_cmp(v, r) < 0; });
  };
  if (!inside(x)) return false;
  auto h = birthday(x);
  for (const auto& v : universe)
    if (cmp_ord(birthday(v), h) < 0 && inside(v)) return false;
  return true;
}

Report surreal_suite(std::size_t n, std::uint64_t seed) {
  Report s{"surreal"};
  const auto universe = sample::all_expansions(5);
  auto small = [](Rng& g) { return sample::sign_expansion(g, 6); };

  s.absorb(law("total order", n, seed, [&](Rng& g, Report& r) {
    auto a = g() % 2 ? small(g) : sample::transfinite_expansion(g);
    auto b = g() % 2 ? small(g) : sample::transfinite_expansion(g);
    auto c = small(g);
    auto o = s_cmp(a, b);
    r.record(s_cmp(b, a) == (0 <=> o), args(a, b), "antisymmetric", "not");
    r.record((o == 0) == (a == b), args(a, b), "EQ iff identical", "not");
    if (s_cmp(a, b) < 0 && s_cmp(b, c) < 0) r.record(s_cmp(a, c) < 0, args(a, b, c), "transitive", "not");
    r.record(s_cmp(s_neg(a), s_neg(b)) == (0 <=> o), args(a, b), "negation reverses order", "not");
    expect_eq(r, args(a), birthday(a), birthday(s_neg(a)));
  }));
  s.absorb(law("negation: sign flip agrees with recursion", n, seed, [&](Rng& g, Report& r) {
    auto a = small(g);
    expect_eq(r, args(a), s_neg(a), s_neg_recursive(a));
  }));
  s.absorb(law("addition matches dyadic values", n, seed, [&](Rng& g, Report& r) {
    auto a = small(g), b = small(g);
    auto sum = s_add(a, b);
    r.record(to_dyadic(sum) == to_dyadic(a) + to_dyadic(b), args(a, b), to_string(Rational(to_dyadic(a) + to_dyadic(b))),
             to_string(to_dyadic(sum)));
    expect_eq(r, args(a), SignExpansion{}, s_add(a, s_neg(a)));
  }));
  s.absorb(law("multiplication matches dyadic values", n, seed, [&](Rng& g, Report& r) {
    auto a = small(g), b = small(g);
    auto prod = s_mul(a, b);
    r.record(to_dyadic(prod) == to_dyadic(a) * to_dyadic(b), args(a, b),
             to_string(Rational(to_dyadic(a) * to_dyadic(b))), to_string(to_dyadic(prod)));
  }));
  s.absorb(law("monotonicity", n, seed, [&](Rng& g, Report& r) {
    auto x = small(g), xp = small(g), y = small(g);
    if (s_cmp(x, xp) > 0) std::swap(x, xp);
    if (x == xp) return r.record(true);
    r.record(s_cmp(s_add(x, y), s_add(xp, y)) < 0, args(x, xp, y), "x+y < x'+y", "not");
    if (s_cmp(y, SignExpansion{}) > 0)
      r.record(s_cmp(s_mul(x, y), s_mul(xp, y)) < 0, args(x, xp, y), "xy < x'y", "not");
  }));
  s.absorb(law("simplicity of cuts", n, seed, [&](Rng& g, Report& r) {
    std::vector<SignExpansion> pool;
    auto k = sample::uniform(g, 0, 6);
    for (std::uint64_t i = 0; i < k; ++i) pool.push_back(sample::sign_expansion(g, 5));
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto split = pool.empty() ? 0 : sample::uniform(g, 0, pool.size());
    std::vector<SignExpansion> left(pool.begin(), pool.begin() + static_cast<long>(split));
    std::vector<SignExpansion> right(pool.begin() + static_cast<long>(split), pool.end());
    auto x = simplest_between(left, right);
    r.record(simplest_is_least(left, right, x, universe), std::to_string(left.size()) + "|" + std::to_string(right.size()),
             "least-birthday element", str(x));
  }));
  s.absorb(law("genetic identities for sums (cut form)", n, seed, [&](Rng& g, Report& r) {
    auto x = sample::sign_expansion(g, 5), y = sample::sign_expansion(g, 5);
    auto z = s_add(x, y);
    auto ox = canonical_options(x), oy = canonical_options(y), oz = canonical_options(z);
    std::vector<SignExpansion> gl, gr;
    for (const auto& l : ox.left) gl.push_back(s_add(l, y));
    for (const auto& l : oy.left) gl.push_back(s_add(x, l));
    for (const auto& v : ox.right) gr.push_back(s_add(v, y));
    for (const auto& v : oy.right) gr.push_back(s_add(x, v));
    // Same cut value, and the canonical options never overshoot the generated ones.
    auto dominated = [](const std::vector<SignExpansion>& a, const std::vector<SignExpansion>& b, bool below) {
      return std::all_of(a.begin(), a.end(), [&](const auto& v) {
        return std::any_of(b.begin(), b.end(), [&](const auto& w) { return below ? v <= w : v >= w; });
      });
    };
    bool ok = simplest_between(gl, gr) == z && simplest_between(oz.left, oz.right) == z &&
              dominated(oz.left, gl, true) && dominated(oz.right, gr, false);
    r.record(ok, args(x, y), "same cut as x+y", str(z));
  }));
  s.absorb(law("inverses", n, seed, [&](Rng& g, Report& r) {
    auto x = small(g);
    if (x.is_zero()) return r.record(true);
    Rational v = to_dyadic(x);
    auto exact = s_inv_exact(x);
    if (exact) expect_eq(r, args(x), SignExpansion::from_signs("+"), s_mul(x, *exact));
    auto depth = static_cast<unsigned>(sample::uniform(g, 1, 4));
    auto b = s_inv_approx(x, depth);
    Rational lo = to_dyadic(b.lower), hi = to_dyadic(b.upper);
    r.record(lo < 1 / v && 1 / v < hi, args(x), "lower < 1/x < upper", args(b.lower, b.upper));
  }));
  s.absorb(law("text round trip", n, seed, [&](Rng& g, Report& r) {
    auto a = g() % 2 ? small(g) : sample::transfinite_expansion(g);
    expect_eq(r, args(a), a, SignExpansion::parse(a.to_string()));
    if (a.is_finite()) expect_eq(r, args(a), a, from_dyadic(to_dyadic(a)));
  }));
  return s;
}

// ---------------------------------------------------------------------------

Report hahn_suite(std::size_t n, std::uint64_t seed) {
  Report s{"hahn"};
  auto h = [](Rng& g) { return sample::hahn(g); };
  s.absorb(law("commutative ring", n, seed, [&](Rng& g, Report& r) {
    auto a = h(g), b = h(g), c = h(g);
    expect_eq(r, args(a, b), h_add(a, b), h_add(b, a));
    expect_eq(r, args(a, b), h_mul(a, b), h_mul(b, a));
    expect_eq(r, args(a, b, c), h_add(h_add(a, b), c), h_add(a, h_add(b, c)));
    expect_eq(r, args(a, b, c), h_mul(h_mul(a, b), c), h_mul(a, h_mul(b, c)));
    expect_eq(r, args(a, b, c), h_mul(a, h_add(b, c)), h_add(h_mul(a, b), h_mul(a, c)));
    expect_eq(r, args(a), HahnSeries{}, h_add(a, h_neg(a)));
  }));
  s.absorb(law("ordered ring", n, seed, [&](Rng& g, Report& r) {
    auto a = h(g), b = h(g), c = h(g);
    auto o = h_cmp(a, b);
    r.record(h_cmp(b, a) == (0 <=> o), args(a, b), "antisymmetric", "not");
    r.record(h_cmp(h_add(a, c), h_add(b, c)) == o, args(a, b, c), "translation invariant", "not");
    if (c.sign() > 0) r.record(h_cmp(h_mul(a, c), h_mul(b, c)) == o, args(a, b, c), "scaling invariant", "not");
    if (!a.is_zero() && !b.is_zero())
      r.record(oq_eq(h_mul(a, b).leading().exponent, oq_add(a.leading().exponent, b.leading().exponent)), args(a, b),
               "valuation additive", "not");
  }));
  s.absorb(law("truncated inverse residual", n, seed, [&](Rng& g, Report& r) {
    auto a = h(g);
    if (a.is_zero()) a = HahnSeries::t();
    auto k = static_cast<unsigned>(sample::uniform(g, 1, 3));
    auto inv = h_inv_trunc(a, k);
    auto residual = h_sub(h_mul(a, inv), HahnSeries(1));
    bool ok = residual.is_zero();
    if (!ok) {
      const auto& lead = a.leading();
      auto u = h_sub(h_mul(a, HahnSeries::monomial(1 / lead.coefficient, oq_neg(lead.exponent))), HahnSeries(1));
      OrdRat depth = oq_mul(OrdRat(static_cast<long>(k)), u.leading().exponent);
      ok = u.leading().exponent.sign() < 0 && oq_cmp(residual.leading().exponent, depth) <= 0;
    }
    r.record(ok, args(a) + ", n=" + std::to_string(k), "residual at depth n", str(residual));
  }));
  s.absorb(law("commensurability is an equivalence", n, seed, [&](Rng& g, Report& r) {
    auto a = h(g), b = h(g), c = h(g);
    if (a.is_zero() || b.is_zero() || c.is_zero()) return r.record(true);
    r.record(commensurate(a, a), args(a), "reflexive", "not");
    r.record(commensurate(a, b) == commensurate(b, a), args(a, b), "symmetric", "not");
    if (commensurate(a, b) && commensurate(b, c)) r.record(commensurate(a, c), args(a, b, c), "transitive", "not");
    r.record(commensurate(a, h_mul(HahnSeries(Rational(7, 3)), a)), args(a), "scaling keeps the class", "not");
  }));
  s.absorb(law("ordinal embedding is a homomorphism", n, seed, [&](Rng& g, Report& r) {
    Ordinal a = sample::ordinal(g), b = sample::ordinal(g);
    expect_eq(r, args(a, b), h_from_ordinal(nat_sum(a, b)), h_add(h_from_ordinal(a), h_from_ordinal(b)));
    expect_eq(r, args(a, b), h_from_ordinal(nat_prod(a, b)), h_mul(h_from_ordinal(a), h_from_ordinal(b)));
    OrdInt c = sample::ordint(g), d = sample::ordint(g);
    expect_eq(r, args(c, d), h_from_ordint(oi_mul(c, d)), h_mul(h_from_ordint(c), h_from_ordint(d)));
    r.record(h_cmp(h_from_ordint(c), h_from_ordint(d)) == oi_cmp(c, d), args(c, d), "same order", "differs");
  }));
  return s;
}

// ---------------------------------------------------------------------------

Report unify_suite(std::size_t n, std::uint64_t seed) {
  Report s{"unify"};
  Rng rng(seed);
  std::vector<Ordinal> samples;
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 200); ++i) samples.push_back(sample::ordinal(rng));
  s.absorb(check_order_embedding(EmbeddingTarget::surreal, samples));
  s.absorb(check_order_embedding(EmbeddingTarget::hahn, samples));
  s.absorb(check_triangle_coherence(std::span(samples).first(std::min<std::size_t>(samples.size(), 60))));
  s.absorb(check_hessenberg_hahn_hom(n, seed));
  s.absorb(check_surreal_naturals(static_cast<unsigned>(std::min<std::size_t>(n, 11)) - (n > 0 ? 1 : 0)));
  if (n == 0) s.parts.back().cases = 0, s.cases -= 1;
  Ordinal w = Ordinal::omega();
  std::size_t per = std::max<std::size_t>(n / 3, n > 0 ? 1 : 0);
  s.absorb(check_cut_characterization(w, w, per, seed));
  s.absorb(check_cut_characterization(nat_prod(w, w), Ordinal{3}, per, seed + 1));
  s.absorb(check_cut_characterization(omega_pow(w), nat_prod(w, Ordinal{2}), per, seed + 2));
  s.absorb(law("finite order types embed with logarithmic birthdays", std::min<std::size_t>(n, 64), seed,
               [k = 1u](Rng&, Report& r) mutable {
                 unsigned count = k++;
                 auto xs = embed_finite_order(count);
                 bool ok = xs.size() == count;
                 unsigned bound = 0;
                 while ((1u << bound) < count + 1) ++bound;
                 for (std::size_t i = 0; ok && i < xs.size(); ++i) {
                   ok = cmp_ord(birthday(xs[i]), Ordinal{bound}) <= 0 && (i == 0 || s_cmp(xs[i - 1], xs[i]) < 0);
                 }
                 r.record(ok, "n=" + std::to_string(count), "increasing, birthday <= " + std::to_string(bound), "violated");
               }));
  s.absorb(law("rational samples embed order-isomorphically", n, seed, [&](Rng& g, Report& r) {
    std::vector<Rational> pts;
    while (pts.size() < 10) {
      auto q = sample::rational(g);
      if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
    }
    auto xs = embed_order_sample(pts);
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j) ok = ok && ((pts[i] < pts[j]) == (s_cmp(xs[i], xs[j]) < 0));
    r.record(ok, "10 points", "order preserved", "violated");
  }));
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ordinal", "oracle", "tower", "surreal", "hahn", "unify", "all"};
  return names;
}

std::optional<Report> run_suite(std::string_view name, std::size_t cases, std::uint64_t seed) {
  using Runner = Report (*)(std::size_t, std::uint64_t);
  const std::vector<std::pair<std::string, Runner>> runners{
      {"ordinal", ordinal_suite}, {"oracle", oracle_suite}, {"tower", tower_suite},
      {"surreal", surreal_suite}, {"hahn", hahn_suite},     {"unify", unify_suite}};
  if (name == "all") {
    Report all{"all"};
    for (const auto& [n, run] : runners) all.absorb(run(cases, seed));
    return all;
  }
  for (const auto& [n, run] : runners)
    if (n == name) return run(cases, seed);
  return std::nullopt;
}

}  // namespace transfinitum
