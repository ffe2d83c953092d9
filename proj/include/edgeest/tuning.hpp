#pragma once

#include <string>

namespace edgeest {

/// Sampling-effort knobs shared by the estimators, guards, and driver.
///
/// The defaults are the exact constants of the source algorithms. Those are
/// sized for worst-case tail bounds; run as written, the driver-level
/// procedures need upwards of 1e11 sampler invocations per advice call,
/// which no benchmark can execute. The `desk` profile keeps every formula
/// and decision rule intact and only rescales the sample-count coefficients
/// and the epsilon subdivision passed down by the iteration layer. Desk
/// values were calibrated once on the benchmark families and then frozen.
/// Outputs carry the profile name so deviating runs are always flagged.
struct Tuning {
  // Coefficient in q = ceil(coeff/eps^2 * max(1, k/sqrt(m_bar))).
  double ll_sample_coeff = 600.0;
  // Coefficient in t = ceil(coeff * n * k' / (eps^2 * m_bar)).
  double l1h_sample_coeff = 200.0;
  // Coefficient in t = ceil((coeff/c) * sqrt(m_bar)) for the quantity guard.
  double guard_round_coeff = 96.0;
  // Epsilon subdivisions applied by the iteration layer.
  double high_eps_div = 1000.0;
  double low_eps_div = 10.0;
  // Optional per-call degree cache for the LL sampler (experiments only;
  // conformance keeps the two-degree-queries-per-edge accounting).
  bool degree_cache = false;

  std::string name = "paper";

  static const Tuning& paper();
  static const Tuning& desk();
};

}  // namespace edgeest
