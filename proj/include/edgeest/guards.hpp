#pragma once

#include "edgeest/oracle.hpp"
#include "edgeest/tuning.hpp"

namespace edgeest {

enum class GuardReason { None, HighDegreeWitness, CountOverflow, DeterministicCase0 };

struct GuardVerdict {
  bool accepted = false;
  GuardReason reason = GuardReason::None;

  static GuardVerdict accept() { return {true, GuardReason::None}; }
  static GuardVerdict reject(GuardReason r) { return {false, r}; }
};

/// Soundness constant and the deterministic enumeration cap of the combined
/// guard. The default cap follows max(16 (1 + ln(1/c))^14, 1/c), which is
/// about 6e13 for c = 1/1000; experiments override it (typically to 64) and
/// the deviation is flagged in their output.
double default_m_bar_star(double c);

struct GuardConfig {
  double c = 1.0 / 1000.0;
  double m_bar_star = default_m_bar_star(1.0 / 1000.0);

  static GuardConfig with_c(double c) { return {c, default_m_bar_star(c)}; }
};

/// Quantity test: t = ceil((coeff/c) sqrt(m_bar)) rounds of sparse sampling
/// with lazy enumeration. Rejects on a fetched endpoint of degree > m_bar or
/// when the running edge count reaches (5/4) t.
GuardVerdict guard_quantity(OracleSession& s, double c, double m_bar,
                            const Tuning& tuning = Tuning::paper());

/// Quality test: every vertex lands in exactly one of t = ceil(sqrt(m_bar))
/// random buckets (bucket draws cost no queries); buckets are enumerated
/// lazily in order with the same rejection rules, overflow threshold 2t/c.
GuardVerdict guard_quality(OracleSession& s, double c, double m_bar,
                           const Tuning& tuning = Tuning::paper());

/// Deterministic bounded whole-graph enumeration (Case 0), then the quantity
/// guard, then the quality guard; rejects propagate in that order.
GuardVerdict small_mbar_guard(OracleSession& s, double m_bar,
                              const GuardConfig& config = GuardConfig{},
                              const Tuning& tuning = Tuning::paper());

}  // namespace edgeest
