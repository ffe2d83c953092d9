#include "edgeest/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace edgeest {

Graph Graph::build(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::out_of_range("edge endpoint " + std::to_string(a >= n ? a : b) +
                              " not in [0, " + std::to_string(n) + ")");
    }
    if (a == b) {
      throw SelfLoopError("self-loop at vertex " + std::to_string(a));
    }
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  std::uint64_t total = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    total += nb.size();
  }
  g.m_ = total / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  const auto& nb = adj_[degree(u) <= degree(v) ? u : v];
  Vertex other = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

std::uint64_t Graph::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& nb : adj_) d = std::max<std::uint64_t>(d, nb.size());
  return d;
}

Graph Graph::load_text(std::istream& in) {
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("graph text: missing header");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t a = 0, b = 0;
    if (!(in >> a >> b)) throw std::runtime_error("graph text: truncated edge list");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return build(static_cast<Vertex>(n), edges);
}

Graph Graph::load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_text(in);
}

void Graph::save_text(std::ostream& out) const {
  out << n_ << ' ' << m_ << '\n';
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

void Graph::save_text_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  save_text(out);
}

std::vector<Edge> Graph::all_edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace edgeest
