#include "edgeest/guards.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "edgeest/enumeration.hpp"

namespace edgeest {

double default_m_bar_star(double c) {
  return std::max(16.0 * std::pow(1.0 + std::log(1.0 / c), 14.0), 1.0 / c);
}

namespace {

void check_guard_domain(double c, double m_bar) {
  if (!(c > 0.0) || c > 1.0) throw std::domain_error("guard constant c must be in (0, 1]");
  if (!(m_bar >= 1.0)) throw std::domain_error("guard advice m_bar must be >= 1");
}

}  // namespace

GuardVerdict guard_quantity(OracleSession& s, double c, double m_bar,
                            const Tuning& tuning) {
  check_guard_domain(c, m_bar);
  const std::uint64_t t = static_cast<std::uint64_t>(
      std::ceil(tuning.guard_round_coeff / c * std::sqrt(m_bar)));
  const double p = std::min(1.0, 1.0 / std::sqrt(m_bar));
  std::uint64_t x = 0;
  for (std::uint64_t round = 0; round < t; ++round) {
    EdgeStream stream(s, bernoulli_subset(s.rng(), s.vertex_count(), p));
    while (auto e = stream.next()) {
      std::uint32_t du = s.deg_query(e->u);
      std::uint32_t dv = s.deg_query(e->v);
      if (static_cast<double>(du) > m_bar || static_cast<double>(dv) > m_bar) {
        return GuardVerdict::reject(GuardReason::HighDegreeWitness);
      }
      ++x;
      if (4 * x >= 5 * t) {
        return GuardVerdict::reject(GuardReason::CountOverflow);
      }
    }
  }
  return GuardVerdict::accept();
}

GuardVerdict guard_quality(OracleSession& s, double c, double m_bar,
                           const Tuning& tuning) {
  (void)tuning;
  check_guard_domain(c, m_bar);
  const std::uint64_t t = static_cast<std::uint64_t>(std::ceil(std::sqrt(m_bar)));
  const Vertex n = s.vertex_count();
  std::vector<std::vector<Vertex>> buckets(t);
  for (Vertex u = 0; u < n; ++u) {
    buckets[uniform_below(s.rng(), t)].push_back(u);  // zero ledger cost
  }
  const double overflow = 2.0 * static_cast<double>(t) / c;
  std::uint64_t x = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    EdgeStream stream(s, std::move(buckets[i]));
    while (auto e = stream.next()) {
      std::uint32_t du = s.deg_query(e->u);
      std::uint32_t dv = s.deg_query(e->v);
      if (static_cast<double>(du) > m_bar || static_cast<double>(dv) > m_bar) {
        return GuardVerdict::reject(GuardReason::HighDegreeWitness);
      }
      ++x;
      if (static_cast<double>(x) >= overflow) {
        return GuardVerdict::reject(GuardReason::CountOverflow);
      }
    }
  }
  return GuardVerdict::accept();
}

GuardVerdict small_mbar_guard(OracleSession& s, double m_bar,
                              const GuardConfig& config, const Tuning& tuning) {
  check_guard_domain(config.c, m_bar);
  if (!(config.m_bar_star >= 1.0)) {
    throw std::domain_error("m_bar_star must be >= 1");
  }

  // Case 0: enumerate up to m_bar_star + 1 whole-graph edges.
  std::vector<Vertex> all(s.vertex_count());
  std::iota(all.begin(), all.end(), Vertex{0});
  EdgeStream stream(s, std::move(all));
  std::uint64_t x = 0;
  while (static_cast<double>(x) <= config.m_bar_star) {
    if (!stream.next()) break;
    ++x;
  }
  if (static_cast<double>(x) > m_bar) {
    return GuardVerdict::reject(GuardReason::DeterministicCase0);
  }

  if (auto v = guard_quantity(s, config.c, m_bar, tuning); !v.accepted) return v;
  if (auto v = guard_quality(s, config.c, m_bar, tuning); !v.accepted) return v;
  return GuardVerdict::accept();
}

}  // namespace edgeest
