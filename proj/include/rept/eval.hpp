#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rept/edge.hpp"
#include "rept/exact_oracle.hpp"
#include "rept/parallel.hpp"

namespace rept {

enum class Method { kRept, kMascot };

const char* method_name(Method method);

struct EvalConfig {
  Method method = Method::kRept;
  std::uint32_t m = 2;
  std::uint32_t c = 1;
  std::uint32_t runs = 2;
  std::uint64_t seed = 0;
  bool locals = true;
};

struct EvalResult {
  Method method = Method::kRept;
  std::uint32_t m = 0;
  std::uint32_t c = 0;
  std::uint32_t runs = 0;
  double truth_tau = 0.0;
  std::optional<double> truth_eta;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;  // population variance over the runs
  double nrmse_global = 0.0;
  std::optional<double> nrmse_local_mean;   // set when locals were evaluated
  std::optional<double> theoretical_variance;  // set when a closed form applies
  std::vector<double> estimates;  // per-run global estimates, run order
  std::uint64_t digest = 0;       // stream fingerprint, guards comparisons
};

// sqrt(mean squared error) / truth. truth must be positive.
double nrmse(std::span<const double> estimates, double truth);

// Order-insensitive-enough fingerprint of a stream: mixes every edge with
// its position, so any reordering or relabeling changes it.
std::uint64_t stream_digest(const EdgeStream& stream);

// Repeats the chosen estimator with seeds derived from (seed, run index)
// and scores it against exact counts. truth may be precomputed; when null
// it is derived from the stream. Local error is averaged over nodes with at
// least one triangle. Per-run work is parallelized; results are identical
// for every thread count.
EvalResult monte_carlo_eval(const EdgeStream& stream, const EvalConfig& config,
                            const ExactCounts* truth = nullptr,
                            unsigned threads = default_thread_count());

// Comma-separated comparison table, one row per result. var_ratio relates a
// row's empirical variance to the first earlier row with the same (m, c),
// so method pairs at one configuration read off directly; rows without such
// a partner leave it blank. All results must come from the same stream.
std::string compare_report(std::span<const EvalResult> results);

// Header shared by the one-row eval CSV and the comparison table.
extern const char* const kEvalCsvHeader;
std::string eval_csv_row(const EvalResult& result);

}  // namespace rept
