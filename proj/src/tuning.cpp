#include "edgeest/tuning.hpp"

namespace edgeest {

const Tuning& Tuning::paper() {
  static const Tuning t{};
  return t;
}

const Tuning& Tuning::desk() {
  static const Tuning t = [] {
    Tuning d;
    d.ll_sample_coeff = 0.006;
    d.l1h_sample_coeff = 0.003;
    d.guard_round_coeff = 12.0;
    d.high_eps_div = 12.0;
    d.low_eps_div = 2.0;
    d.name = "desk";
    return d;
  }();
  return t;
}

}  // namespace edgeest
