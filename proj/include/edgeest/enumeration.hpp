#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "edgeest/oracle.hpp"

namespace edgeest {

/// Worst-case IS-query cost of extract_edge is at most
/// kExtractEdgeCoeff * (1 + ceil(log2 |A|)).
inline constexpr int kExtractEdgeCoeff = 4;

/// Returns an edge with both endpoints in `a`, or nullopt after verifying by
/// IS queries that `a` is independent (exactly one query in that case, zero
/// when |a| < 2).
///
/// The edge found is deterministic: the endpoint u closes the shortest
/// non-independent prefix of `a` in ascending vertex order, and w is u's
/// first neighbor within that prefix. The prefix boundaries are located by
/// exponential probing plus binary refinement, which keeps the queried sets
/// small when the witness sits near the front.
std::optional<Edge> extract_edge_sorted(OracleSession& s, std::span<const Vertex> a);

/// Convenience wrapper that normalizes (sorts, dedupes) the input set.
std::optional<Edge> extract_edge(OracleSession& s, std::vector<Vertex> a);

/// Resumable cross-edge enumeration between two disjoint independent sets.
/// One IS query up front; afterwards pairs certified non-independent are
/// split (halve A while |A| >= 2, else halve B; floor/ceil sizes) on a LIFO
/// stack with the lower half processed first.
class BipartiteCross {
 public:
  BipartiteCross(std::vector<Vertex> a, std::vector<Vertex> b);
  std::optional<Edge> next(OracleSession& s);

 private:
  struct Frame {
    std::vector<Vertex> a, b;
  };
  bool started_ = false;
  std::vector<Vertex> a0_, b0_;
  std::vector<Frame> stack_;
  std::vector<Vertex> ubuf_;
};

/// Drains a BipartiteCross into `sink`; returns the number of cross edges.
/// Zero cross edges costs exactly one IS query.
std::uint64_t enumerate_bipartite(OracleSession& s, std::vector<Vertex> a,
                                  std::vector<Vertex> b,
                                  const std::function<void(Edge)>& sink);

/// Pairwise vertex-disjoint edges whose endpoints cover every edge induced
/// on `a`. Repeatedly extracts an edge and removes its endpoints; the final
/// extract call certifies independence of the remainder.
std::vector<Edge> find_cover(OracleSession& s, std::vector<Vertex> a);

struct ColoringResult {
  std::vector<std::vector<Vertex>> parts;  // disjoint independent sets
  std::vector<Edge> found;                 // edges discovered by rejections
};

/// Greedy first-fit coloring of `order` (the cover endpoints, in a
/// deterministic order). Each vertex goes to the smallest-index part whose
/// union with it passes an IS query; a fresh empty part accepts without a
/// query. Every rejection is turned into an edge via extract_edge.
ColoringResult greedy_color(OracleSession& s, const std::vector<Vertex>& order);

/// Lazy enumeration of the edges induced on a vertex set, realizing the
/// amortized guarantee: the t-th distinct edge appears within
/// O(1 + t log n) oracle queries from stream creation. Phases: vertex cover
/// construction, greedy coloring of the cover endpoints, then cross-pair
/// enumeration over the parts with the final part defined as the input set
/// minus the cover endpoints. Each edge may be discovered up to three times
/// across the phases but is emitted exactly once.
class EdgeStream {
 public:
  enum class Phase { CoverBuild, Coloring, CrossEnum, Done };

  EdgeStream(OracleSession& s, std::vector<Vertex> subset);

  std::optional<Edge> next();
  std::vector<Edge> drain();

  Phase phase() const { return phase_; }
  std::uint64_t emitted() const { return emitted_; }
  int max_discovery_count() const { return max_charge_; }
  const std::vector<std::vector<Vertex>>& parts() const { return parts_; }

 private:
  bool discover(Edge e);  // true when first seen
  void finish_cover_phase();
  void finish_coloring_phase();

  OracleSession* s_;
  Phase phase_ = Phase::CoverBuild;

  std::vector<Vertex> remaining_;  // input minus removed cover endpoints
  std::vector<Edge> cover_;
  std::vector<Vertex> order_;  // coloring queue
  std::size_t color_idx_ = 0;
  std::size_t part_try_ = 0;
  std::vector<std::vector<Vertex>> parts_;
  std::size_t pair_i_ = 0;
  std::size_t pair_j_ = 1;
  std::optional<BipartiteCross> cross_;

  std::unordered_map<std::uint64_t, int> charge_;
  std::uint64_t emitted_ = 0;
  int max_charge_ = 0;
  std::vector<Vertex> ubuf_;
};

inline EdgeStream enumerate_edges(OracleSession& s, std::vector<Vertex> subset) {
  return EdgeStream(s, std::move(subset));
}

}  // namespace edgeest
