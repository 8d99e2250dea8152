#include "transfinitum/unify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "transfinitum/sample.hpp"

namespace transfinitum {

namespace {

std::string pair_text(const Ordinal& a, const Ordinal& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

}  // namespace

Report check_order_embedding(EmbeddingTarget target, std::span<const Ordinal> samples) {
  Report r{target == EmbeddingTarget::surreal ? "order embedding into surreals" : "order embedding into Hahn series"};
  std::vector<SignExpansion> surreal;
  std::vector<HahnSeries> hahn;
  for (const auto& a : samples) {
    if (target == EmbeddingTarget::surreal)
      surreal.push_back(s_from_ordinal(a));
    else
      hahn.push_back(h_from_ordinal(a));
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      auto want = cmp_ord(samples[i], samples[j]);
      auto got = target == EmbeddingTarget::surreal ? s_cmp(surreal[i], surreal[j]) : h_cmp(hahn[i], hahn[j]);
      r.record(want == got, pair_text(samples[i], samples[j]), ordering_name(want), ordering_name(got));
    }
  return r;
}

Report check_triangle_coherence(std::span<const Ordinal> samples) {
  Report r{"ordinal / surreal / Hahn order coherence"};
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      const auto& a = samples[i];
      const auto& b = samples[j];
      auto o = cmp_ord(a, b);
      auto s = s_cmp(s_from_ordinal(a), s_from_ordinal(b));
      auto h = h_cmp(h_from_ordinal(a), h_from_ordinal(b));
      r.record(o == s && s == h, pair_text(a, b), ordering_name(o),
               std::string(ordering_name(s)) + "/" + ordering_name(h));
    }
  return r;
}

Report check_hessenberg_hahn_hom(std::size_t n_samples, std::uint64_t seed) {
  Report r{"Hessenberg operations vs Hahn embedding"};
  sample::Rng rng(seed);
  for (std::size_t i = 0; i < n_samples; ++i) {
    Ordinal a = sample::oracle_ordinal(rng);
    Ordinal b = sample::oracle_ordinal(rng);
    HahnSeries ha = h_from_ordinal(a);
    HahnSeries hb = h_from_ordinal(b);
    HahnSeries sum = h_from_ordinal(nat_sum(a, b));
    HahnSeries prod = h_from_ordinal(nat_prod(a, b));
    HahnSeries hsum = h_add(ha, hb);
    HahnSeries hprod = h_mul(ha, hb);
    bool ok_sum = sum == hsum;
    bool ok_prod = prod == hprod;
    if (!ok_sum)
      r.record(false, "sum " + pair_text(a, b), sum.to_string(), hsum.to_string());
    else if (!ok_prod)
      r.record(false, "product " + pair_text(a, b), prod.to_string(), hprod.to_string());
    else
      r.record(true);
  }
  return r;
}

Report check_surreal_naturals(unsigned n_max) {
  Report r{"Conway operations on naturals"};
  for (unsigned n = 0; n <= n_max; ++n)
    for (unsigned m = 0; m <= n_max; ++m) {
      Ordinal a{n}, b{m};
      auto sa = s_from_ordinal(a);
      auto sb = s_from_ordinal(b);
      auto want_sum = s_from_ordinal(nat_sum(a, b));
      auto want_prod = s_from_ordinal(nat_prod(a, b));
      auto got_sum = s_add(sa, sb);
      auto got_prod = s_mul(sa, sb);
      std::string in = std::to_string(n) + ", " + std::to_string(m);
      if (got_sum != want_sum)
        r.record(false, "sum " + in, want_sum.to_string(), got_sum.to_string());
      else if (got_prod != want_prod)
        r.record(false, "product " + in, want_prod.to_string(), got_prod.to_string());
      else
        r.record(true);
    }
  return r;
}

Report check_cut_characterization(const Ordinal& x, const Ordinal& y, std::size_t n_samples, std::uint64_t seed) {
  if (x.is_zero() && y.is_zero()) throw PreconditionFault("check_cut_characterization requires x > 0 or y > 0");
  Report r{"cofinal witnesses below " + nat_sum(x, y).to_string()};
  sample::Rng rng(seed);
  Ordinal total = nat_sum(x, y);
  for (std::size_t i = 0; i < n_samples; ++i) {
    Ordinal z = sample::below(rng, total);
    std::string in = "z=" + z.to_string();
    try {
      auto w = cofinal_witness_sum(z, x, y);
      bool left = w.side == WitnessSide::left;
      const Ordinal& bound = left ? x : y;
      Ordinal reached = left ? nat_sum(w.value, y) : nat_sum(x, w.value);
      bool ok = cmp_ord(w.value, bound) < 0 && cmp_ord(z, reached) <= 0 && cmp_ord(reached, total) < 0;
      r.record(ok, in, "z <= witness sum < x (+) y", std::string(left ? "left " : "right ") + w.value.to_string());
    } catch (const Fault& e) {
      r.record(false, in, "a witness", e.what());
    }
  }
  return r;
}

std::vector<SignExpansion> embed_finite_order(unsigned n) {
  if (n == 0) throw PreconditionFault("embed_finite_order requires n >= 1");
  std::vector<std::optional<SignExpansion>> slots(n);
  // Each median sits strictly between the already placed neighbours of its range.
  std::function<void(unsigned, unsigned, const SignExpansion*, const SignExpansion*)> place =
      [&](unsigned lo, unsigned hi, const SignExpansion* below, const SignExpansion* above) {
        if (lo >= hi) return;
        unsigned mid = lo + (hi - lo) / 2;
        std::vector<SignExpansion> left, right;
        if (below) left.push_back(*below);
        if (above) right.push_back(*above);
        slots[mid] = simplest_between(left, right);
        place(lo, mid, below, &*slots[mid]);
        place(mid + 1, hi, &*slots[mid], above);
      };
  place(0, n, nullptr, nullptr);
  std::vector<SignExpansion> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<SignExpansion> embed_order_sample(std::span<const Rational> points) {
  std::set<Rational> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw PreconditionFault("embed_order_sample: duplicate point " + to_string(p));
  std::vector<SignExpansion> images;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<SignExpansion> left, right;
    for (std::size_t j = 0; j < i; ++j) (points[j] < points[i] ? left : right).push_back(images[j]);
    images.push_back(simplest_between(left, right));
  }
  return images;
}

}  // namespace transfinitum
