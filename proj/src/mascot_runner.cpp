#include "rept/mascot_runner.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rept/processor.hpp"
#include "rept/rng.hpp"

namespace rept {

namespace {

constexpr std::uint64_t kBernoulliSalt = 0x6265726e6f756cULL;  // "bernoul"

}  // namespace

EstimateReport run_parallel_mascot(const EdgeStream& stream, const MascotConfig& config,
                                   unsigned threads) {
  if (config.m < 2) throw std::invalid_argument("run_parallel_mascot: need m >= 2");
  if (config.c < 1) throw std::invalid_argument("run_parallel_mascot: need c >= 1");
  auto started = std::chrono::steady_clock::now();

  const std::uint32_t m = config.m;
  const std::uint32_t c = config.c;
  std::vector<std::uint64_t> taus(c, 0);
  std::vector<std::unordered_map<NodeId, std::uint64_t>> tau_v(config.compute_local ? c : 0);

  const std::uint64_t base = mix64(config.seed ^ kBernoulliSalt);
  parallel_for_index(c, threads, [&](std::size_t i) {
    ProcessorState state(static_cast<std::uint32_t>(i), CounterMode::kCountOnly);
    for (std::size_t t = 0; t < stream.edges.size(); ++t) {
      const Edge& e = stream.edges[t];
      auto common = state.observe_edge(e);
      bool keep = reduce_u64(keyed_u64(base, i, t), m) == 0;
      if (keep) state.insert_sampled_edge(e, common);
    }
    taus[i] = state.tau();
    if (config.compute_local) tau_v[i] = state.tau_v();
  });

  EstimateReport report;
  report.method = "mascot";
  report.m = m;
  report.c = c;
  report.seed = config.seed;
  report.processor_tau = taus;
  const double md = m;
  double total = 0.0;
  for (std::uint64_t t : taus) total += static_cast<double>(t);
  report.tau_hat = md * md / c * total;

  if (config.compute_local) {
    std::unordered_map<NodeId, double> sums;
    for (const auto& map : tau_v) {
      for (const auto& [v, count] : map) sums[v] += static_cast<double>(count);
    }
    report.tau_v_hat.reserve(sums.size());
    for (const auto& [v, sum] : sums) report.tau_v_hat.emplace(v, md * md / c * sum);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace rept
