#pragma once

#include <cstdint>

#include "rept/edge.hpp"
#include "rept/parallel.hpp"
#include "rept/rept_runner.hpp"

namespace rept {

struct MascotConfig {
  std::uint32_t m = 2;  // keep probability is 1/m, matching the partitioned runs
  std::uint32_t c = 1;
  std::uint64_t seed = 0;
  bool compute_local = false;
};

// Baseline: every processor keeps each edge independently with probability
// 1/m and counts semi-triangles; per-processor estimates m^2 * tau are
// averaged. The keep decision is a pure function of (seed, processor,
// stream position), so reports are identical for every thread count.
EstimateReport run_parallel_mascot(const EdgeStream& stream, const MascotConfig& config,
                                   unsigned threads = default_thread_count());

}  // namespace rept
