#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgeest/graph.hpp"
#include "edgeest/random.hpp"

namespace edgeest {

struct BudgetExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact per-oracle call counts. Counters never decrease within a session.
struct QueryLedger {
  std::uint64_t deg_count = 0;
  std::uint64_t neigh_count = 0;
  std::uint64_t is_count = 0;
  std::uint64_t total() const { return deg_count + neigh_count + is_count; }
};

/// Random-neighbor answer: a vertex, or nullopt when the vertex is isolated.
using NeighborAnswer = std::optional<Vertex>;

/// Answer source behind a session. Implementations: GraphOracle (direct) and
/// StringOracle (the reduction-graph simulation in hard_instance.hpp).
class OracleBackend {
 public:
  virtual ~OracleBackend() = default;
  virtual Vertex vertex_count() const = 0;
  virtual std::uint32_t degree(Vertex u, Rng& rng) = 0;
  virtual NeighborAnswer random_neighbor(Vertex u, Rng& rng) = 0;
  virtual bool independent(std::span<const Vertex> s, Rng& rng) = 0;
};

/// Direct oracle over a Graph. Owns per-instance scratch, so each session
/// gets its own copy while the graph itself is shared read-only.
class GraphOracle final : public OracleBackend {
 public:
  explicit GraphOracle(const Graph& g);
  Vertex vertex_count() const override { return g_->vertex_count(); }
  std::uint32_t degree(Vertex u, Rng&) override { return g_->degree(u); }
  NeighborAnswer random_neighbor(Vertex u, Rng& rng) override;
  bool independent(std::span<const Vertex> s, Rng& rng) override;

 private:
  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

/// The only access path algorithms may use: binds a backend, a seeded random
/// source, and the query ledger. Every oracle call increments exactly one
/// counter by 1 (an IS query costs 1 regardless of set size). With a budget
/// set, a call that would exceed it throws BudgetExhausted before touching
/// the backend.
class OracleSession {
 public:
  OracleSession(const Graph& g, std::uint64_t seed,
                std::optional<std::uint64_t> budget = std::nullopt);
  OracleSession(std::unique_ptr<OracleBackend> backend, std::uint64_t seed,
                std::optional<std::uint64_t> budget = std::nullopt);

  Vertex vertex_count() const { return backend_->vertex_count(); }

  std::uint32_t deg_query(Vertex u);
  NeighborAnswer neigh_query(Vertex u);
  bool is_query(std::span<const Vertex> s);
  bool is_query(const std::vector<Vertex>& s) {
    return is_query(std::span<const Vertex>(s));
  }

  const QueryLedger& ledger() const { return ledger_; }
  Rng& rng() { return rng_; }
  OracleBackend& backend() { return *backend_; }

  void set_budget(std::optional<std::uint64_t> budget) { budget_ = budget; }
  std::optional<std::uint64_t> budget() const { return budget_; }

  /// Optional flat answer log for coupled-run divergence checks:
  /// deg -> value, neigh -> vertex+1 (0 for none), is -> 0/1.
  void set_answer_log(std::vector<std::int64_t>* log) { answer_log_ = log; }

 private:
  void charge(std::uint64_t& counter);
  void check_vertex(Vertex u) const;

  std::unique_ptr<OracleBackend> backend_;
  Rng rng_;
  QueryLedger ledger_;
  std::optional<std::uint64_t> budget_;
  std::vector<std::int64_t>* answer_log_ = nullptr;
};

}  // namespace edgeest
