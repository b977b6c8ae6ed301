#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rept/edge.hpp"
#include "rept/parallel.hpp"

namespace rept {

struct ReptConfig {
  std::uint32_t m = 2;        // hash buckets; per-edge keep probability is 1/m
  std::uint32_t c = 1;        // processors
  std::uint64_t seed = 0;
  bool compute_local = false;
  bool compute_eta = false;   // forced on when c > m with a partial group
};

struct EstimateReport {
  std::string method;
  std::uint32_t m = 0;
  std::uint32_t c = 0;
  std::uint64_t seed = 0;
  double tau_hat = 0.0;
  std::optional<double> eta_hat;
  std::vector<std::uint64_t> processor_tau;  // raw per-processor totals
  std::vector<std::uint64_t> processor_eta;  // raw pair totals; empty if not counted
  std::unordered_map<NodeId, double> tau_v_hat;  // only nodes seen by some processor
  double elapsed_seconds = 0.0;
};

// Runs c hash-partitioned processors over the stream and combines their
// counts. Processor i belongs to group i / m and keeps edges the group's
// hash function sends to slot i % m, so a full group of m processors
// partitions the stream among themselves. The report is identical for every
// thread count.
EstimateReport run_rept(const EdgeStream& stream, const ReptConfig& config,
                        unsigned threads = default_thread_count());

}  // namespace rept
