#include "edgeest/driver.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace edgeest {

namespace {
const double kSmallWindow = std::pow(2.0, -0.25);
}

LevelParams LevelParams::at(Vertex n, int ell) {
  LevelParams p;
  p.ell = ell;
  double n2 = static_cast<double>(n) * static_cast<double>(n);
  p.m_bar_big = n2 / std::exp2(ell);
  p.m_bar_small = std::exp2(static_cast<double>(ell) / 2.0);
  return p;
}

LevelDiagnostics LevelDiagnostics::compute(Vertex n, std::uint64_t m) {
  if (m == 0) throw std::domain_error("level diagnostics need m >= 1");
  LevelDiagnostics d;
  const double md = static_cast<double>(m);
  const double lo = std::sqrt(2.0) * md;
  const double n2 = static_cast<double>(n) * static_cast<double>(n);
  int ell = 0;
  while (!(lo <= n2 / std::exp2(ell) && n2 / std::exp2(ell) < std::sqrt(8.0) * md)) {
    ++ell;
    if (ell > 200) throw std::runtime_error("no ell_big found");
  }
  d.ell_big = ell;
  ell = 0;
  while (!(lo <= std::exp2(ell / 2.0) && std::exp2(ell / 2.0) < 2.0 * md)) {
    ++ell;
    if (ell > 200) throw std::runtime_error("no ell_small found");
  }
  d.ell_small = ell;
  d.ell_0 = std::min(d.ell_big, d.ell_small);
  return d;
}

double estimate_edges_advice_high(OracleSession& s, double epsilon, double m_bar,
                                  const Tuning& tuning) {
  if (!(epsilon > 0.0)) throw std::domain_error("epsilon must be positive");
  if (!(m_bar > 0.0)) throw std::domain_error("m_bar must be positive");
  const double n = static_cast<double>(s.vertex_count());
  if (m_bar >= 0.25 * epsilon * n * n) {
    return estimate_ll_advice(s, epsilon, m_bar, n - 1.0, tuning);
  }
  double k = std::sqrt(2.0 / epsilon) * std::sqrt(n) * std::pow(m_bar, 0.25);
  double ll = estimate_ll_advice(s, epsilon, m_bar, k, tuning);
  double l1h = estimate_l1h_advice(s, epsilon, m_bar, k, tuning);
  return ll + l1h;
}

EstimateOutcome estimate_edges_advice_low(OracleSession& s, double epsilon,
                                          double m_bar, const GuardConfig& guard,
                                          const Tuning& tuning) {
  if (!(m_bar >= 1.0)) throw std::domain_error("advice-low needs m_bar >= 1");
  const double n = static_cast<double>(s.vertex_count());
  const double k = std::min(m_bar, n - 1.0);
  if (!small_mbar_guard(s, m_bar, guard, tuning).accepted) {
    return EstimateOutcome::infinite();
  }
  return EstimateOutcome::of_value(
      estimate_ll_advice(s, epsilon / 10.0, m_bar, k, tuning));
}

EstimateOutcome estimate_edges_iteration(OracleSession& s, double epsilon, int ell,
                                         const DriverOptions& opt) {
  const LevelParams lp = LevelParams::at(s.vertex_count(), ell);
  double big = estimate_edges_advice_high(s, epsilon / opt.tuning.high_eps_div,
                                          lp.m_bar_big, opt.tuning);
  if (0.25 * lp.m_bar_big <= big && big <= 0.8 * lp.m_bar_big) {
    return EstimateOutcome::of_value(big);
  }
  EstimateOutcome small = estimate_edges_advice_low(
      s, epsilon / opt.tuning.low_eps_div, lp.m_bar_small, opt.guard, opt.tuning);
  if (small.is_value() && small.value <= kSmallWindow * lp.m_bar_small) {
    return small;
  }
  return EstimateOutcome::reject();
}

EstimateOutcome estimate_edges_bounded(OracleSession& s, double epsilon, int ell_max,
                                       const DriverOptions& opt) {
  for (int ell = 0; ell <= ell_max; ++ell) {
    EstimateOutcome out = estimate_edges_iteration(s, epsilon, ell, opt);
    if (out.kind != EstimateOutcome::Kind::Reject) return out;
  }
  return EstimateOutcome::reject();
}

EstimateResult estimate_edges_traced(OracleSession& s, double epsilon,
                                     const DriverOptions& opt) {
  EstimateResult res;
  double eps = std::min(epsilon, 1.0 / 15.0);
  if (!(eps > 0.0)) throw std::domain_error("epsilon must be positive");

  const Vertex n = s.vertex_count();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  if (s.is_query(all)) {
    res.value = 0.0;
    res.ledger = s.ledger();
    return res;
  }

  if (static_cast<double>(n) < 2.0 / (eps * eps)) {
    std::uint64_t degsum = 0;
    for (Vertex u = 0; u < n; ++u) degsum += s.deg_query(u);
    res.value = static_cast<double>(degsum) / 2.0;
    res.ledger = s.ledger();
    return res;
  }

  for (int ell_max = 0;; ++ell_max) {
    EstimateOutcome out = estimate_edges_bounded(s, eps, ell_max, opt);
    res.trace.push_back({ell_max, out.kind, out.value, s.ledger().total()});
    if (out.kind != EstimateOutcome::Kind::Reject) {
      res.value = out.value;
      res.ledger = s.ledger();
      return res;
    }
  }
}

double estimate_edges(OracleSession& s, double epsilon, const DriverOptions& opt) {
  return estimate_edges_traced(s, epsilon, opt).value;
}

}  // namespace edgeest
