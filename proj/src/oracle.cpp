#include "edgeest/oracle.hpp"

#include <string>

namespace edgeest {

GraphOracle::GraphOracle(const Graph& g) : g_(&g), stamp_(g.vertex_count(), 0) {}

NeighborAnswer GraphOracle::random_neighbor(Vertex u, Rng& rng) {
  auto nb = g_->neighbors(u);
  if (nb.empty()) return std::nullopt;
  return nb[uniform_below(rng, nb.size())];
}

bool GraphOracle::independent(std::span<const Vertex> s, Rng&) {
  ++epoch_;
  if (epoch_ == 0) {  // stamp wrap, practically unreachable
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (Vertex v : s) stamp_[v] = epoch_;
  for (Vertex v : s) {
    for (Vertex w : g_->neighbors(v)) {
      if (stamp_[w] == epoch_) return false;
    }
  }
  return true;
}

OracleSession::OracleSession(const Graph& g, std::uint64_t seed,
                             std::optional<std::uint64_t> budget)
    : backend_(std::make_unique<GraphOracle>(g)), rng_(seed), budget_(budget) {}

OracleSession::OracleSession(std::unique_ptr<OracleBackend> backend, std::uint64_t seed,
                             std::optional<std::uint64_t> budget)
    : backend_(std::move(backend)), rng_(seed), budget_(budget) {}

void OracleSession::charge(std::uint64_t& counter) {
  if (budget_ && ledger_.total() >= *budget_) {
    throw BudgetExhausted("query budget of " + std::to_string(*budget_) + " exhausted");
  }
  ++counter;
}

void OracleSession::check_vertex(Vertex u) const {
  if (u >= backend_->vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(u) + " not in [0, " +
                            std::to_string(backend_->vertex_count()) + ")");
  }
}

std::uint32_t OracleSession::deg_query(Vertex u) {
  check_vertex(u);
  charge(ledger_.deg_count);
  std::uint32_t d = backend_->degree(u, rng_);
  if (answer_log_) answer_log_->push_back(static_cast<std::int64_t>(d));
  return d;
}

NeighborAnswer OracleSession::neigh_query(Vertex u) {
  check_vertex(u);
  charge(ledger_.neigh_count);
  NeighborAnswer a = backend_->random_neighbor(u, rng_);
  if (answer_log_) {
    answer_log_->push_back(a ? static_cast<std::int64_t>(*a) + 1 : 0);
  }
  return a;
}

bool OracleSession::is_query(std::span<const Vertex> s) {
  for (Vertex v : s) check_vertex(v);
  charge(ledger_.is_count);
  bool a = backend_->independent(s, rng_);
  if (answer_log_) answer_log_->push_back(a ? 1 : 0);
  return a;
}

}  // namespace edgeest
