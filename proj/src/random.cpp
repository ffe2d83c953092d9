#include "edgeest/random.hpp"

#include <cmath>
#include <numeric>

namespace edgeest {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master + golden-ratio stride
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

double uniform01_open(Rng& rng) {
  return 1.0 - std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

std::vector<Vertex> bernoulli_subset(Rng& rng, Vertex n, double p) {
  std::vector<Vertex> out;
  if (n == 0 || p <= 0.0) return out;
  if (p >= 1.0) {
    out.resize(n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
  }
  const double inv_log1mp = 1.0 / std::log1p(-p);
  double pos = 0.0;
  while (true) {
    double skip = std::floor(std::log(uniform01_open(rng)) * inv_log1mp);
    pos += skip;
    if (!(pos < static_cast<double>(n))) break;
    out.push_back(static_cast<Vertex>(pos));
    pos += 1.0;
  }
  return out;
}

}  // namespace edgeest
