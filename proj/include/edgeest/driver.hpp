#pragma once

#include <cstdint>
#include <vector>

#include "edgeest/estimators.hpp"
#include "edgeest/guards.hpp"
#include "edgeest/oracle.hpp"

namespace edgeest {

struct EstimateOutcome {
  enum class Kind { Value, Reject, Infinite };
  Kind kind = Kind::Reject;
  double value = 0.0;

  static EstimateOutcome of_value(double v) { return {Kind::Value, v}; }
  static EstimateOutcome reject() { return {Kind::Reject, 0.0}; }
  static EstimateOutcome infinite() { return {Kind::Infinite, 0.0}; }
  bool is_value() const { return kind == Kind::Value; }
};

/// Advice pair tried at level ell of the two-sequence iteration.
struct LevelParams {
  int ell = 0;
  double m_bar_big = 0.0;    // n^2 / 2^ell
  double m_bar_small = 1.0;  // 2^(ell/2)

  static LevelParams at(Vertex n, int ell);
};

/// Test-side level indices computed from the true edge count.
struct LevelDiagnostics {
  int ell_big = 0;    // unique ell with sqrt(2) m <= 2^-ell n^2 < sqrt(8) m
  int ell_small = 0;  // unique ell with sqrt(2) m <= 2^(ell/2) < 2 m
  int ell_0 = 0;      // min of the two

  static LevelDiagnostics compute(Vertex n, std::uint64_t m);
};

struct DriverOptions {
  Tuning tuning = Tuning::paper();
  GuardConfig guard{};

  static DriverOptions paper() { return {}; }
  /// Desk-scale experiment profile: reduced sampling coefficients, guard
  /// c = 1/2, enumeration cap 64. Flagged in all experiment output.
  static DriverOptions desk() {
    DriverOptions o;
    o.tuning = Tuning::desk();
    o.guard = GuardConfig{0.5, 64.0};
    return o;
  }
};

/// Estimator for advice expected to be at or above the true scale. Uses
/// k = n-1 in the very dense branch (m_bar >= eps n^2 / 4), otherwise
/// k = sqrt(2 n sqrt(m_bar) / eps) and adds the very-low/high estimate.
double estimate_edges_advice_high(OracleSession& s, double epsilon, double m_bar,
                                  const Tuning& tuning = Tuning::paper());

/// Estimator for small advice: validates m_bar with the combined guard, then
/// estimates with k = min(m_bar, n-1) at accuracy epsilon/10. Returns
/// Infinite when the guard rejects.
EstimateOutcome estimate_edges_advice_low(OracleSession& s, double epsilon,
                                          double m_bar,
                                          const GuardConfig& guard = GuardConfig{},
                                          const Tuning& tuning = Tuning::paper());

/// One level of the interleaved guess sequences: try m_bar_big with the high
/// estimator (accept iff the result lands in [m_bar_big/4, 4 m_bar_big/5]),
/// then m_bar_small with the low estimator (accept iff the result is at most
/// 2^(-1/4) m_bar_small), else Reject.
EstimateOutcome estimate_edges_iteration(OracleSession& s, double epsilon, int ell,
                                         const DriverOptions& opt = {});

/// Runs levels 0..ell_max, returning the first non-Reject outcome.
EstimateOutcome estimate_edges_bounded(OracleSession& s, double epsilon, int ell_max,
                                       const DriverOptions& opt = {});

struct DeepeningTraceEntry {
  int ell_max = 0;
  EstimateOutcome::Kind kind = EstimateOutcome::Kind::Reject;
  double value = 0.0;
  std::uint64_t ledger_total_after = 0;
};

struct EstimateResult {
  double value = 0.0;
  QueryLedger ledger;
  std::vector<DeepeningTraceEntry> trace;
};

/// Top-level estimator: clamps epsilon to 1/15, answers 0 iff the whole
/// vertex set is independent, sums degrees exactly when n < 2/eps^2, and
/// otherwise runs bounded prefixes with ell_max = 0, 1, 2, ... until one
/// returns a value (iterative deepening, fresh randomness per prefix run).
double estimate_edges(OracleSession& s, double epsilon, const DriverOptions& opt = {});

EstimateResult estimate_edges_traced(OracleSession& s, double epsilon,
                                     const DriverOptions& opt = {});

}  // namespace edgeest
