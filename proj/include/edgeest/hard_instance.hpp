#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "edgeest/graph.hpp"
#include "edgeest/oracle.hpp"

namespace edgeest {

enum class Symbol : std::uint8_t { A = 0, K = 1, L = 2, H = 3 };

/// Duality map: A and K are self-dual, L and H are dual of each other.
inline Symbol dual(Symbol s) {
  switch (s) {
    case Symbol::L: return Symbol::H;
    case Symbol::H: return Symbol::L;
    default: return s;
  }
}

char symbol_char(Symbol s);
Symbol symbol_from_char(char c);

/// String over {A, K, L, H} with per-symbol position lists.
class LabeledString {
 public:
  LabeledString() = default;
  explicit LabeledString(std::vector<Symbol> labels);
  static LabeledString from_chars(const std::string& text);

  Vertex size() const { return static_cast<Vertex>(labels_.size()); }
  Symbol at(Vertex i) const { return labels_[i]; }
  std::uint64_t count(Symbol s) const {
    return positions_[static_cast<std::size_t>(s)].size();
  }
  const std::vector<Vertex>& positions(Symbol s) const {
    return positions_[static_cast<std::size_t>(s)];
  }
  std::string to_chars() const;

  /// Neighbor index set of position i: empty for A, otherwise the positions
  /// carrying the dual symbol (excluding i itself).
  std::uint64_t neighbor_set_size(Vertex i) const;

 private:
  std::vector<Symbol> labels_;
  std::array<std::vector<Vertex>, 4> positions_;
};

struct FullQueryAnswer {
  Symbol symbol;
  std::uint64_t u_size = 0;
  std::optional<Vertex> neighbor;  // uniform member of U_i, nullopt if empty
};

/// Full string query: symbol, |U_i|, and a uniform member of U_i (or none).
FullQueryAnswer string_full_query(const LabeledString& s, Vertex i, Rng& rng);

/// Derived lower-bound parameters for given (n, n_k, eps):
/// d = n_k^2 / (2n), n_h = ceil(sqrt(eps) n^(1/4) d^(3/4)),
/// n_ell = ceil(sqrt(eps) n^(3/4) d^(1/4)) when n_h >= 2, else ceil(eps n d).
struct LbParams {
  double d = 0.0;
  std::uint64_t n_h = 0;
  std::uint64_t n_ell = 0;
  bool small_d_regime = false;  // n_h == 1, i.e. d <= 1/(eps^(2/3) n^(1/3))
};

LbParams lb_params(std::uint64_t n, std::uint64_t n_k, double epsilon);

/// Coupled pair of labeled strings: s1 uses only {A, K}; s2 agrees on K and
/// relabels n_h + n_ell of the A positions to H and L.
struct HardInstancePair {
  LabeledString s1, s2;
  std::uint64_t n = 0, n_k = 0, n_h = 0, n_ell = 0;
  double d = 0.0;
  double epsilon = 0.0;
  std::vector<Vertex> K, H2, L2;

  std::uint64_t m1() const { return n_k * (n_k - 1) / 2; }
  std::uint64_t m2() const { return m1() + n_ell * n_h; }
};

HardInstancePair draw_hard_pair(Rng& rng, std::uint64_t n, std::uint64_t n_k,
                                double epsilon);

/// Clique on the K positions plus a complete bipartite graph between the L
/// and H positions.
Graph reduction_graph(const LabeledString& s);

/// One simulated graph query: the translated string queries, their count M_t,
/// and the produced answer.
struct SimTraceEntry {
  enum class Kind { Deg, Neigh, Is } kind = Kind::Deg;
  Vertex u = 0;                        // queried vertex for deg/neigh
  std::vector<Vertex> set;             // queried set for IS
  std::vector<Vertex> string_queries;  // I_{t,1..M_t}
  std::int64_t answer = 0;
  std::uint64_t m_t() const { return string_queries.size(); }
};

/// Oracle backend that answers graph queries by querying the string, per the
/// reduction: degree/neighbor via one full query; IS via light queries over a
/// uniformly random permutation of the set, stopping at two K symbols or at
/// an L-H pair. Symbols already revealed (queried, or appearing in a full
/// query's output) are reused without a new string query.
class StringOracle final : public OracleBackend {
 public:
  explicit StringOracle(const LabeledString& s);

  Vertex vertex_count() const override { return s_->size(); }
  std::uint32_t degree(Vertex u) override;
  NeighborAnswer random_neighbor(Vertex u, Rng& rng) override;
  bool independent(std::span<const Vertex> set, Rng& rng) override;

  const std::vector<SimTraceEntry>& trace() const { return trace_; }
  std::uint64_t total_string_queries() const { return total_string_queries_; }
  std::optional<Symbol> revealed(Vertex i) const {
    return revealed_[i] ? std::optional<Symbol>(static_cast<Symbol>(revealed_[i] - 1))
                        : std::nullopt;
  }

 private:
  FullQueryAnswer full_query(Vertex u, Rng& rng, SimTraceEntry& entry);
  void reveal(Vertex i) { revealed_[i] = static_cast<std::uint8_t>(s_->at(i)) + 1; }

  const LabeledString* s_;
  std::vector<std::uint8_t> revealed_;  // 0 = unknown, else symbol + 1
  std::vector<SimTraceEntry> trace_;
  std::uint64_t total_string_queries_ = 0;
};

struct CoupledOutcome {
  std::optional<double> answer1, answer2;
  bool diverged = false;
  std::optional<std::size_t> divergence_index;
  std::uint64_t queries1 = 0, queries2 = 0;
  bool budget_exhausted1 = false, budget_exhausted2 = false;
};

/// Runs `algorithm` twice with identical randomness (both sessions seeded
/// with master_seed, so the PRNG stream acts as the shared tape), once per
/// string of the pair, each through the string simulation. Divergence is the
/// first position where the two answer sequences differ. Budget exhaustion
/// is recorded, not thrown.
CoupledOutcome coupled_distinguish(const std::function<double(OracleSession&)>& algorithm,
                                   const HardInstancePair& pair,
                                   std::uint64_t master_seed, std::uint64_t budget);

}  // namespace edgeest
