#include "edgeest/hard_instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edgeest {

char symbol_char(Symbol s) {
  switch (s) {
    case Symbol::A: return 'A';
    case Symbol::K: return 'K';
    case Symbol::L: return 'L';
    case Symbol::H: return 'H';
  }
  return '?';
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case 'A': return Symbol::A;
    case 'K': return Symbol::K;
    case 'L': return Symbol::L;
    case 'H': return Symbol::H;
    default: throw std::invalid_argument(std::string("bad symbol '") + c + "'");
  }
}

LabeledString::LabeledString(std::vector<Symbol> labels) : labels_(std::move(labels)) {
  for (Vertex i = 0; i < size(); ++i) {
    positions_[static_cast<std::size_t>(labels_[i])].push_back(i);
  }
}

LabeledString LabeledString::from_chars(const std::string& text) {
  std::vector<Symbol> labels;
  labels.reserve(text.size());
  for (char c : text) labels.push_back(symbol_from_char(c));
  return LabeledString(std::move(labels));
}

std::string LabeledString::to_chars() const {
  std::string out;
  out.reserve(labels_.size());
  for (Symbol s : labels_) out.push_back(symbol_char(s));
  return out;
}

std::uint64_t LabeledString::neighbor_set_size(Vertex i) const {
  Symbol s = labels_[i];
  if (s == Symbol::A) return 0;
  std::uint64_t c = count(dual(s));
  return s == Symbol::K ? c - 1 : c;  // K is self-dual; exclude i itself
}

FullQueryAnswer string_full_query(const LabeledString& s, Vertex i, Rng& rng) {
  if (i >= s.size()) throw std::out_of_range("string index out of range");
  FullQueryAnswer ans;
  ans.symbol = s.at(i);
  ans.u_size = s.neighbor_set_size(i);
  if (ans.u_size == 0) return ans;
  const auto& pool = s.positions(dual(ans.symbol));
  if (ans.symbol == Symbol::K) {
    // uniform over the K positions other than i
    std::uint64_t idx = uniform_below(rng, pool.size() - 1);
    Vertex v = pool[idx];
    ans.neighbor = (v == i) ? pool.back() : v;
  } else {
    ans.neighbor = pool[uniform_below(rng, pool.size())];
  }
  return ans;
}

LbParams lb_params(std::uint64_t n, std::uint64_t n_k, double epsilon) {
  if (n_k < 1 || 2 * n_k > n) throw std::domain_error("need 1 <= n_k <= n/2");
  if (!(epsilon > 0.0) || epsilon > 1.0 / 11.0) {
    throw std::domain_error("epsilon must be in (0, 1/11]");
  }
  LbParams p;
  const double nd = static_cast<double>(n);
  // "so that sqrt(2 n d) = n_k"
  p.d = static_cast<double>(n_k) * static_cast<double>(n_k) / (2.0 * nd);
  double nh_raw = std::sqrt(epsilon) * std::pow(nd, 0.25) * std::pow(p.d, 0.75);
  p.n_h = static_cast<std::uint64_t>(std::ceil(nh_raw));
  p.small_d_regime = p.n_h <= 1;
  if (p.n_h >= 2) {
    p.n_ell = static_cast<std::uint64_t>(
        std::ceil(std::sqrt(epsilon) * std::pow(nd, 0.75) * std::pow(p.d, 0.25)));
  } else {
    p.n_ell = static_cast<std::uint64_t>(std::ceil(epsilon * nd * p.d));
  }
  return p;
}

namespace {

// Uniform k-subset of `pool` (consumed); partial Fisher-Yates.
std::vector<Vertex> draw_subset(Rng& rng, std::vector<Vertex>& pool, std::uint64_t k) {
  std::vector<Vertex> out;
  out.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

}  // namespace

HardInstancePair draw_hard_pair(Rng& rng, std::uint64_t n, std::uint64_t n_k,
                                double epsilon) {
  if (n < 16) throw std::domain_error("need n >= 16");
  LbParams p = lb_params(n, n_k, epsilon);
  if (n_k + p.n_h + p.n_ell > n) {
    throw std::domain_error("K, H and L sets do not fit in n positions");
  }

  HardInstancePair pair;
  pair.n = n;
  pair.n_k = n_k;
  pair.n_h = p.n_h;
  pair.n_ell = p.n_ell;
  pair.d = p.d;
  pair.epsilon = epsilon;

  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  pair.K = draw_subset(rng, pool, n_k);
  pair.H2 = draw_subset(rng, pool, p.n_h);
  pair.L2 = draw_subset(rng, pool, p.n_ell);

  std::vector<Symbol> l1(n, Symbol::A), l2(n, Symbol::A);
  for (Vertex v : pair.K) l1[v] = l2[v] = Symbol::K;
  for (Vertex v : pair.H2) l2[v] = Symbol::H;
  for (Vertex v : pair.L2) l2[v] = Symbol::L;
  pair.s1 = LabeledString(std::move(l1));
  pair.s2 = LabeledString(std::move(l2));
  return pair;
}

Graph reduction_graph(const LabeledString& s) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  const auto& ks = s.positions(Symbol::K);
  const auto& ls = s.positions(Symbol::L);
  const auto& hs = s.positions(Symbol::H);
  edges.reserve(ks.size() * (ks.size() > 0 ? ks.size() - 1 : 0) / 2 +
                ls.size() * hs.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      edges.emplace_back(ks[i], ks[j]);
    }
  }
  for (Vertex l : ls) {
    for (Vertex h : hs) edges.emplace_back(l, h);
  }
  return Graph::build(s.size(), edges);
}

StringOracle::StringOracle(const LabeledString& s)
    : s_(&s), revealed_(s.size(), 0) {}

FullQueryAnswer StringOracle::full_query(Vertex u, Rng& rng, SimTraceEntry& entry) {
  FullQueryAnswer ans = string_full_query(*s_, u, rng);
  entry.string_queries.push_back(u);
  ++total_string_queries_;
  reveal(u);
  if (ans.neighbor) reveal(*ans.neighbor);  // output reveals the neighbor too
  return ans;
}

std::uint32_t StringOracle::degree(Vertex u) {
  SimTraceEntry entry;
  entry.kind = SimTraceEntry::Kind::Deg;
  entry.u = u;
  FullQueryAnswer ans = full_query(u, throwaway_rng_, entry);
  entry.answer = static_cast<std::int64_t>(ans.u_size);
  trace_.push_back(std::move(entry));
  return static_cast<std::uint32_t>(ans.u_size);
}

NeighborAnswer StringOracle::random_neighbor(Vertex u, Rng& rng) {
  SimTraceEntry entry;
  entry.kind = SimTraceEntry::Kind::Neigh;
  entry.u = u;
  FullQueryAnswer ans = full_query(u, rng, entry);
  entry.answer = ans.neighbor ? static_cast<std::int64_t>(*ans.neighbor) + 1 : 0;
  trace_.push_back(std::move(entry));
  return ans.neighbor;
}

bool StringOracle::independent(std::span<const Vertex> set, Rng& rng) {
  SimTraceEntry entry;
  entry.kind = SimTraceEntry::Kind::Is;
  entry.set.assign(set.begin(), set.end());

  std::vector<Vertex> perm(set.begin(), set.end());
  shuffle_inplace(perm, rng);

  int k_seen = 0;
  bool l_seen = false, h_seen = false;
  bool result = true;
  for (Vertex v : perm) {
    Symbol sym;
    if (revealed_[v]) {
      sym = static_cast<Symbol>(revealed_[v] - 1);  // reuse, no string query
    } else {
      sym = s_->at(v);
      reveal(v);
      entry.string_queries.push_back(v);
      ++total_string_queries_;
    }
    if (sym == Symbol::K) {
      if (++k_seen == 2) {
        result = false;
        break;
      }
    } else if (sym == Symbol::L) {
      l_seen = true;
      if (h_seen) {
        result = false;
        break;
      }
    } else if (sym == Symbol::H) {
      h_seen = true;
      if (l_seen) {
        result = false;
        break;
      }
    }
  }
  entry.answer = result ? 1 : 0;
  trace_.push_back(std::move(entry));
  return result;
}

CoupledOutcome coupled_distinguish(const std::function<double(OracleSession&)>& algorithm,
                                   const HardInstancePair& pair,
                                   std::uint64_t master_seed, std::uint64_t budget) {
  auto run = [&](const LabeledString& s, std::optional<double>& answer,
                 std::vector<std::int64_t>& log, std::uint64_t& queries,
                 bool& exhausted) {
    OracleSession session(std::make_unique<StringOracle>(s), master_seed, budget);
    session.set_answer_log(&log);
    try {
      answer = algorithm(session);
    } catch (const BudgetExhausted&) {
      exhausted = true;
    }
    queries = session.ledger().total();
  };

  CoupledOutcome out;
  std::vector<std::int64_t> log1, log2;
  run(pair.s1, out.answer1, log1, out.queries1, out.budget_exhausted1);
  run(pair.s2, out.answer2, log2, out.queries2, out.budget_exhausted2);

  std::size_t common = std::min(log1.size(), log2.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (log1[i] != log2[i]) {
      out.diverged = true;
      out.divergence_index = i;
      break;
    }
  }
  if (!out.diverged && log1.size() != log2.size()) {
    out.diverged = true;
    out.divergence_index = common;
  }
  return out;
}

}  // namespace edgeest
