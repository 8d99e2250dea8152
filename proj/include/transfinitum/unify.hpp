#pragma once

// Sampled agreement checks between the ordinal, surreal and Hahn-series
// constructions, and embeddings of order types into the sign-expansion tree.

#include <cstdint>
#include <span>
#include <vector>

#include "transfinitum/hahn.hpp"
#include "transfinitum/report.hpp"
#include "transfinitum/surreal.hpp"

namespace transfinitum {

enum class EmbeddingTarget { surreal, hahn };

// Every pair of samples compares the same way before and after embedding.
Report check_order_embedding(EmbeddingTarget target, std::span<const Ordinal> samples);
// Ordinal, surreal image and Hahn image all order every pair identically.
Report check_triangle_coherence(std::span<const Ordinal> samples);
// Random pairs below w^(w^w): natural sum and product map to h_add and h_mul.
Report check_hessenberg_hahn_hom(std::size_t n_samples, std::uint64_t seed);
// Conway addition and multiplication agree with the natural operations on 0..n_max.
Report check_surreal_naturals(unsigned n_max);
// Random z < x (+) y each admit a valid cofinal_witness_sum.
Report check_cut_characterization(const Ordinal& x, const Ordinal& y, std::size_t n_samples, std::uint64_t seed);

// n increasing expansions built by median-first insertion.
std::vector<SignExpansion> embed_finite_order(unsigned n);
// Expansions order-isomorphic to `points`, inserted in the given order.
std::vector<SignExpansion> embed_order_sample(std::span<const Rational> points);

}  // namespace transfinitum
