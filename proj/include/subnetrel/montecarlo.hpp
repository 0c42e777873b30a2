#pragma once

#include <cstdint>

#include "subnetrel/polynomial.hpp"

namespace subnetrel {

// Generator used for fault injection; the name is echoed in CLI output so a
// run can be replayed from its own report.
inline constexpr const char* kRngAlgorithm = "splitmix64";

struct SimulationResult {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

// Node-fault simulation on B_n: per trial every node survives independently
// with probability p, the per-family counts (f1, f2, f3) of fault-free
// patterns are taken, and the trial scores C(f1,i)*C(f2,j)*C(f3,k). The mean
// over trials estimates the exact composition polynomial at p. Trials draw
// from per-trial derived seeds, so results replay bit-identically for a
// fixed seed. Capped at kMaxExplicitN.
SimulationResult monte_carlo(int n, double p, const Composition& c, std::int64_t trials,
                             std::uint64_t seed);

}  // namespace subnetrel
