#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgeest {

using Vertex = std::uint32_t;

struct SelfLoopError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple undirected graph with sorted adjacency lists.
/// Vertices are ids 0..n-1. Read-only after construction, so any number of
/// sessions may share one instance.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Endpoints must be in [0, n); self-loops are
  /// rejected. Duplicate pairs (in either orientation) collapse to one edge.
  static Graph build(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph build(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(edges));
  }

  Vertex vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::uint32_t degree(Vertex u) const { return static_cast<std::uint32_t>(adj_[u].size()); }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {adj_[u].data(), adj_[u].size()};
  }

  bool has_edge(Vertex u, Vertex v) const;

  std::uint64_t max_degree() const;

  /// Text format: first line "n m", then m lines "u v" (0-based).
  /// The loader tolerates duplicate and reversed lines.
  static Graph load_text(std::istream& in);
  static Graph load_text_file(const std::string& path);
  void save_text(std::ostream& out) const;
  void save_text_file(const std::string& path) const;

  std::vector<Edge> all_edges() const;

 private:
  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

}  // namespace edgeest
