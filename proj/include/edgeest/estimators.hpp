#pragma once

#include <cstdint>

#include "edgeest/enumeration.hpp"
#include "edgeest/oracle.hpp"
#include "edgeest/tuning.hpp"

namespace edgeest {

/// Degree thresholds derived from the advice. k and k' are real-valued;
/// degree comparisons against them use exact integer-vs-real semantics.
struct Thresholds {
  double k = 0.0;
  double k_prime = 0.0;
  double epsilon = 1.0;
  double m_bar = 1.0;
  Vertex n = 0;
};

/// k = sqrt(2 n sqrt(m_bar) / eps), k' = min(k, m_bar / (eps k)).
Thresholds threshold_for(Vertex n, double epsilon, double m_bar);

/// Thresholds with an explicitly chosen k (the driver overrides k to n-1 or
/// min(m_bar, n-1) in some branches). k' keeps the min(k, m_bar/(eps k)) form.
Thresholds thresholds_with_k(Vertex n, double epsilon, double m_bar, double k);

enum class VertexClass { L1, L2, H };

inline VertexClass classify(std::uint64_t deg, const Thresholds& th) {
  double d = static_cast<double>(deg);
  if (d <= th.k_prime) return VertexClass::L1;
  if (d <= th.k) return VertexClass::L2;
  return VertexClass::H;
}

inline bool is_low(VertexClass c) { return c != VertexClass::H; }

/// Exact edge counts by degree class, computed by brute force over the whole
/// graph (test-side ground truth; no oracle accounting).
struct EdgeClassCounts {
  std::uint64_t ll = 0;    // both endpoints of degree <= k
  std::uint64_t l1h = 0;   // one endpoint <= k', the other > k
  std::uint64_t l2h = 0;   // one endpoint in (k', k], the other > k
  std::uint64_t hh = 0;    // both > k
  std::uint64_t total() const { return ll + l1h + l2h + hh; }
};

EdgeClassCounts edge_class_counts_oracle(const Graph& g, const Thresholds& th);

/// One sparse-sample round: draws S with inclusion probability
/// min(1, 1/sqrt(m_bar)), enumerates the edges induced on S, and counts the
/// ones whose endpoint degrees are both <= k (two degree queries per edge).
/// E[X] = m_LL / m_bar.
std::uint64_t sample_ll_sparse(OracleSession& s, const Thresholds& th,
                               const Tuning& tuning = Tuning::paper());

/// Averages q = ceil(coeff/eps^2 * max(1, k/sqrt(m_bar))) sparse-sample
/// rounds and rescales by m_bar.
double estimate_ll_advice(OracleSession& s, double epsilon, double m_bar, double k,
                          const Tuning& tuning = Tuning::paper());

/// Weighted vertex-neighbor sampling estimator for the count of edges
/// between very-low-degree (<= k') and high-degree (> k) vertices. Returns a
/// nonnegative multiple of n/t, at most n*k'.
double estimate_l1h_advice(OracleSession& s, double epsilon, double m_bar, double k,
                           const Tuning& tuning = Tuning::paper());

}  // namespace edgeest
