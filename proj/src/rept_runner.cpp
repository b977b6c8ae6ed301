#include "rept/rept_runner.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "rept/estimators.hpp"
#include "rept/hash_family.hpp"
#include "rept/processor.hpp"

namespace rept {

namespace {

struct ProcessorCounts {
  std::uint64_t tau = 0;
  std::uint64_t eta = 0;
  std::unordered_map<NodeId, std::uint64_t> tau_v;
  std::unordered_map<NodeId, std::uint64_t> eta_v;
};

double node_sum(const std::vector<ProcessorCounts>& counts, std::size_t begin, std::size_t end,
                NodeId v, bool pairs) {
  double total = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& map = pairs ? counts[i].eta_v : counts[i].tau_v;
    auto it = map.find(v);
    if (it != map.end()) total += static_cast<double>(it->second);
  }
  return total;
}

}  // namespace

EstimateReport run_rept(const EdgeStream& stream, const ReptConfig& config, unsigned threads) {
  if (config.m < 2) throw std::invalid_argument("run_rept: need m >= 2");
  if (config.c < 1) throw std::invalid_argument("run_rept: need c >= 1");
  auto started = std::chrono::steady_clock::now();

  const std::uint32_t m = config.m;
  const std::uint32_t c = config.c;
  const std::uint32_t c1 = c / m;
  const std::uint32_t c2 = c % m;
  const bool partial_group = c > m && c2 != 0;
  const bool with_pairs = config.compute_eta || partial_group;
  const CounterMode mode = with_pairs ? CounterMode::kWithPairs : CounterMode::kCountOnly;

  HashFamily family(config.seed, m);
  std::vector<ProcessorCounts> counts(c);
  parallel_for_index(c, threads, [&](std::size_t i) {
    ProcessorState state(static_cast<std::uint32_t>(i), mode);
    const std::uint32_t group = static_cast<std::uint32_t>(i) / m;
    const std::uint32_t slot = static_cast<std::uint32_t>(i) % m;
    for (const Edge& e : stream.edges) {
      auto common = state.observe_edge(e);
      if (hash_edge(family, group, e) == slot) state.insert_sampled_edge(e, common);
    }
    counts[i].tau = state.tau();
    if (config.compute_local) counts[i].tau_v = state.tau_v();
    if (with_pairs) {
      counts[i].eta = state.eta();
      if (config.compute_local) counts[i].eta_v = state.eta_v();
    }
  });

  EstimateReport report;
  report.method = "rept";
  report.m = m;
  report.c = c;
  report.seed = config.seed;
  report.processor_tau.reserve(c);
  for (const auto& pc : counts) report.processor_tau.push_back(pc.tau);
  if (with_pairs) {
    report.processor_eta.reserve(c);
    for (const auto& pc : counts) report.processor_eta.push_back(pc.eta);
    report.eta_hat = estimate_eta_hat(report.processor_eta, m, c);
  }

  if (c <= m) {
    report.tau_hat = estimate_leq_m(report.processor_tau, m, c);
  } else if (c2 == 0) {
    report.tau_hat = estimate_gt_m_divisible(report.processor_tau, m, c1);
  } else {
    auto combined = estimate_gt_m_general(report.processor_tau, report.processor_eta, m, c);
    report.tau_hat = combined.tau_hat;
    report.eta_hat = combined.eta_hat;
  }

  if (config.compute_local) {
    std::unordered_map<NodeId, char> seen;
    for (const auto& pc : counts) {
      for (const auto& [v, _] : pc.tau_v) seen.emplace(v, 0);
    }
    report.tau_v_hat.reserve(seen.size());
    const double md = m;
    for (const auto& [v, _] : seen) {
      double estimate = 0.0;
      if (c <= m) {
        estimate = md * md / c * node_sum(counts, 0, c, v, false);
      } else if (c2 == 0) {
        estimate = md / c1 * node_sum(counts, 0, c, v, false);
      } else {
        const std::size_t full = static_cast<std::size_t>(c1) * m;
        double t1 = md / c1 * node_sum(counts, 0, full, v, false);
        double t2 = md * md / c2 * node_sum(counts, full, c, v, false);
        double eta_v_hat = md * md * md / c * node_sum(counts, 0, c, v, true);
        estimate = combine_two_stage(t1, t2, eta_v_hat, m, c1, c2);
      }
      report.tau_v_hat.emplace(v, estimate);
    }
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace rept
