#include "edgeest/estimators.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace edgeest {

namespace {

void check_domain(double epsilon, double m_bar) {
  if (!(m_bar > 0.0)) throw std::domain_error("advice m_bar must be positive");
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::domain_error("epsilon must be in (0, 1]");
  }
}

}  // namespace

Thresholds threshold_for(Vertex n, double epsilon, double m_bar) {
  check_domain(epsilon, m_bar);
  if (n < 1) throw std::domain_error("n must be at least 1");
  double k = std::sqrt(2.0 * static_cast<double>(n) * std::sqrt(m_bar) / epsilon);
  return thresholds_with_k(n, epsilon, m_bar, k);
}

Thresholds thresholds_with_k(Vertex n, double epsilon, double m_bar, double k) {
  check_domain(epsilon, m_bar);
  Thresholds th;
  th.n = n;
  th.epsilon = epsilon;
  th.m_bar = m_bar;
  th.k = k;
  th.k_prime = k > 0.0 ? std::min(k, m_bar / (epsilon * k)) : 0.0;
  return th;
}

EdgeClassCounts edge_class_counts_oracle(const Graph& g, const Thresholds& th) {
  EdgeClassCounts c;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    VertexClass cu = classify(g.degree(u), th);
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      VertexClass cv = classify(g.degree(v), th);
      if (is_low(cu) && is_low(cv)) {
        ++c.ll;
      } else if (!is_low(cu) && !is_low(cv)) {
        ++c.hh;
      } else {
        VertexClass low = is_low(cu) ? cu : cv;
        if (low == VertexClass::L1) {
          ++c.l1h;
        } else {
          ++c.l2h;
        }
      }
    }
  }
  return c;
}

std::uint64_t sample_ll_sparse(OracleSession& s, const Thresholds& th,
                               const Tuning& tuning) {
  check_domain(th.epsilon, th.m_bar);
  double p = std::min(1.0, 1.0 / std::sqrt(th.m_bar));
  EdgeStream stream(s, bernoulli_subset(s.rng(), s.vertex_count(), p));
  std::uint64_t x = 0;
  std::unordered_map<Vertex, std::uint32_t> cache;
  auto deg = [&](Vertex v) {
    if (!tuning.degree_cache) return s.deg_query(v);
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;
    std::uint32_t d = s.deg_query(v);
    cache.emplace(v, d);
    return d;
  };
  while (auto e = stream.next()) {
    std::uint32_t du = deg(e->u);
    std::uint32_t dv = deg(e->v);
    if (static_cast<double>(du) <= th.k && static_cast<double>(dv) <= th.k) ++x;
  }
  return x;
}

double estimate_ll_advice(OracleSession& s, double epsilon, double m_bar, double k,
                          const Tuning& tuning) {
  check_domain(epsilon, m_bar);
  if (k < 0.0) throw std::domain_error("threshold k must be nonnegative");
  double qd = std::ceil(tuning.ll_sample_coeff / (epsilon * epsilon) *
                        std::max(1.0, k / std::sqrt(m_bar)));
  std::uint64_t q = qd < 1.0 ? 1 : static_cast<std::uint64_t>(qd);
  Thresholds th = thresholds_with_k(s.vertex_count(), epsilon, m_bar, k);
  double sum = 0.0;
  for (std::uint64_t i = 0; i < q; ++i) {
    sum += static_cast<double>(sample_ll_sparse(s, th, tuning));
  }
  return m_bar * (sum / static_cast<double>(q));
}

double estimate_l1h_advice(OracleSession& s, double epsilon, double m_bar, double k,
                           const Tuning& tuning) {
  check_domain(epsilon, m_bar);
  if (!(k > 0.0)) throw std::domain_error("threshold k must be positive");
  const Vertex n = s.vertex_count();
  if (n == 0) return 0.0;
  // No vertex can exceed degree n-1, so the high class is empty and every
  // sample contributes zero.
  if (k >= static_cast<double>(n) - 1.0) return 0.0;
  double kp = std::min(k, m_bar / (epsilon * k));
  double td = std::ceil(tuning.l1h_sample_coeff * static_cast<double>(n) * kp /
                        (epsilon * epsilon * m_bar));
  std::uint64_t t = td < 1.0 ? 1 : static_cast<std::uint64_t>(td);
  std::uint64_t counter = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    Vertex u = static_cast<Vertex>(uniform_below(s.rng(), n));  // free draw
    NeighborAnswer v = s.neigh_query(u);
    std::uint32_t du = s.deg_query(u);
    if (!v) continue;
    std::uint32_t dv = s.deg_query(*v);
    if (static_cast<double>(du) <= kp && static_cast<double>(dv) > k) {
      counter += du;
    }
  }
  return static_cast<double>(n) / static_cast<double>(t) *
         static_cast<double>(counter);
}

}  // namespace edgeest
