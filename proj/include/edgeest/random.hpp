#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "edgeest/graph.hpp"

namespace edgeest {

using Rng = std::mt19937_64;

/// Per-trial seed from a master seed: splitmix64 of master + odd stride * (index+1).
/// Documented split rule used by the bench harness and tests.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform double in (0, 1].
double uniform01_open(Rng& rng);

/// Draws each of 0..n-1 independently with probability p. Returns the chosen
/// ids in increasing order. Uses geometric skipping, so the cost is
/// proportional to the sample size rather than n.
std::vector<Vertex> bernoulli_subset(Rng& rng, Vertex n, double p);

/// In-place Fisher-Yates shuffle (own implementation so transcripts do not
/// depend on the standard library's std::shuffle).
template <typename T>
void shuffle_inplace(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace edgeest
