#include "subnetrel/montecarlo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "subnetrel/errors.hpp"
#include "subnetrel/limits.hpp"
#include "subnetrel/patterns.hpp"
#include "subnetrel/perm.hpp"

namespace subnetrel {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

SimulationResult monte_carlo(int n, double p, const Composition& c, std::int64_t trials,
                             std::uint64_t seed) {
  if (n < kMinN) {
    throw std::invalid_argument("n must be at least " + std::to_string(kMinN));
  }
  if (n > kMaxExplicitN) {
    throw CapacityError("simulation is capped at n = " + std::to_string(kMaxExplicitN));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  if (!is_valid_composition(c)) {
    throw std::invalid_argument("composition must be non-negative and sum to 4");
  }
  if (trials < 1) {
    throw std::invalid_argument("trials must be at least 1");
  }

  const auto nodes = all_permutations(n);
  const std::size_t node_count = nodes.size();
  std::unordered_map<std::uint64_t, std::size_t> node_index;
  node_index.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    node_index.emplace(nodes[i].packed(), i);
  }

  // Per-pattern node masks; a pattern is fault-free when all its nodes are.
  const auto patterns = enumerate_patterns(n);
  const std::size_t words = (node_count + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(patterns.size(),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    for (const auto& perm : vertex_set(patterns[pi], n)) {
      const std::size_t node = node_index.at(perm.packed());
      masks[pi][node / 64] |= 1ull << (node % 64);
    }
  }
  const std::size_t per_family = patterns.size() / 3;

  // Small Pascal table; family counts stay below 3n(n-1).
  const int max_f = static_cast<int>(per_family);
  std::vector<std::array<std::int64_t, 5>> choose(static_cast<std::size_t>(max_f) + 1);
  for (int f = 0; f <= max_f; ++f) {
    for (int r = 0; r <= 4; ++r) {
      choose[static_cast<std::size_t>(f)][static_cast<std::size_t>(r)] =
          binomial(f, r).convert_to<std::int64_t>();
    }
  }

  std::vector<std::uint64_t> alive(words);
  long double sum = 0.0L;
  long double sum_sq = 0.0L;
  std::int64_t min_score = -1;
  std::int64_t max_score = -1;

  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::uint64_t stream = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1);
    std::fill(alive.begin(), alive.end(), 0);
    for (std::size_t node = 0; node < node_count; ++node) {
      if (uniform01(stream) < p) {
        alive[node / 64] |= 1ull << (node % 64);
      }
    }

    std::array<int, 3> fault_free = {0, 0, 0};
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
      bool all_alive = true;
      for (std::size_t w = 0; w < words; ++w) {
        if ((alive[w] & masks[pi][w]) != masks[pi][w]) {
          all_alive = false;
          break;
        }
      }
      if (all_alive) {
        ++fault_free[pi / per_family];
      }
    }

    const std::int64_t score =
        choose[static_cast<std::size_t>(fault_free[0])][static_cast<std::size_t>(c.i)] *
        choose[static_cast<std::size_t>(fault_free[1])][static_cast<std::size_t>(c.j)] *
        choose[static_cast<std::size_t>(fault_free[2])][static_cast<std::size_t>(c.k)];
    sum += static_cast<long double>(score);
    sum_sq += static_cast<long double>(score) * static_cast<long double>(score);
    min_score = (min_score < 0) ? score : std::min(min_score, score);
    max_score = (max_score < 0) ? score : std::max(max_score, score);
  }

  SimulationResult result;
  result.trials = trials;
  result.seed = seed;
  result.mean = static_cast<double>(sum / static_cast<long double>(trials));
  if (trials < 2 || min_score == max_score) {
    result.std_error = 0.0;
  } else {
    const long double t = static_cast<long double>(trials);
    long double variance = (sum_sq - sum * sum / t) / (t - 1.0L);
    if (variance < 0.0L) {
      variance = 0.0L;
    }
    result.std_error = static_cast<double>(std::sqrt(static_cast<double>(variance / t)));
  }
  return result;
}

}  // namespace subnetrel
