#include "rept/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "rept/estimators.hpp"
#include "rept/mascot_runner.hpp"
#include "rept/rept_runner.hpp"
#include "rept/rng.hpp"

namespace rept {

namespace {

constexpr std::uint64_t kRunSeedSalt = 0x6d6f6e746573ULL;  // "montes"

std::string format_g(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

const char* method_name(Method method) {
  return method == Method::kRept ? "rept" : "mascot";
}

double nrmse(std::span<const double> estimates, double truth) {
  if (!(truth > 0.0)) throw std::invalid_argument("nrmse: truth must be positive");
  if (estimates.empty()) throw std::invalid_argument("nrmse: no estimates");
  double acc = 0.0;
  for (double x : estimates) acc += (x - truth) * (x - truth);
  return std::sqrt(acc / static_cast<double>(estimates.size())) / truth;
}

std::uint64_t stream_digest(const EdgeStream& stream) {
  std::uint64_t h = mix64(0x9e3779b97f4a7c15ULL ^ stream.node_count);
  for (std::size_t t = 0; t < stream.edges.size(); ++t) {
    h = mix64(h ^ edge_key(stream.edges[t]) ^ (static_cast<std::uint64_t>(t) << 1));
  }
  return h;
}

EvalResult monte_carlo_eval(const EdgeStream& stream, const EvalConfig& config,
                            const ExactCounts* truth, unsigned threads) {
  if (config.runs < 2) throw std::invalid_argument("monte_carlo_eval: need at least 2 runs");

  ExactCounts computed;
  if (truth == nullptr) {
    computed = exact_stream_counts(stream, /*with_eta=*/true);
    truth = &computed;
  }
  if (truth->tau == 0) {
    throw std::invalid_argument("monte_carlo_eval: stream has no triangles, error is undefined");
  }

  EvalResult result;
  result.method = config.method;
  result.m = config.m;
  result.c = config.c;
  result.runs = config.runs;
  result.truth_tau = static_cast<double>(truth->tau);
  if (truth->eta) result.truth_eta = static_cast<double>(*truth->eta);
  result.digest = stream_digest(stream);
  result.estimates.assign(config.runs, 0.0);

  // Nodes scored for local error: those in at least one triangle.
  std::vector<NodeId> tracked;
  if (config.locals) {
    for (NodeId v = 0; v < stream.node_count; ++v) {
      if (truth->tau_v[v] >= 1) tracked.push_back(v);
    }
  }
  std::vector<double> local_sq(tracked.size(), 0.0);

  // Runs execute in parallel batches; accumulation happens in run order so
  // the result does not depend on scheduling.
  const std::size_t batch = std::max<std::size_t>(1, static_cast<std::size_t>(threads) * 4);
  std::vector<std::unordered_map<NodeId, double>> batch_locals(config.locals ? batch : 0);
  for (std::uint32_t start = 0; start < config.runs;
       start += static_cast<std::uint32_t>(batch)) {
    const std::uint32_t count =
        std::min<std::uint64_t>(batch, static_cast<std::uint64_t>(config.runs) - start);
    parallel_for_index(count, threads, [&](std::size_t j) {
      const std::uint32_t run = start + static_cast<std::uint32_t>(j);
      const std::uint64_t run_seed = keyed_u64(config.seed, kRunSeedSalt, run);
      EstimateReport report;
      if (config.method == Method::kRept) {
        ReptConfig rc;
        rc.m = config.m;
        rc.c = config.c;
        rc.seed = run_seed;
        rc.compute_local = config.locals;
        report = run_rept(stream, rc, /*threads=*/1);
      } else {
        MascotConfig mc;
        mc.m = config.m;
        mc.c = config.c;
        mc.seed = run_seed;
        mc.compute_local = config.locals;
        report = run_parallel_mascot(stream, mc, /*threads=*/1);
      }
      result.estimates[run] = report.tau_hat;
      if (config.locals) batch_locals[j] = std::move(report.tau_v_hat);
    });
    if (config.locals) {
      for (std::uint32_t j = 0; j < count; ++j) {
        const auto& locals = batch_locals[j];
        for (std::size_t t = 0; t < tracked.size(); ++t) {
          auto it = locals.find(tracked[t]);
          double est = it == locals.end() ? 0.0 : it->second;
          double diff = est - static_cast<double>(truth->tau_v[tracked[t]]);
          local_sq[t] += diff * diff;
        }
        batch_locals[j].clear();
      }
    }
  }

  double mean = 0.0;
  for (double x : result.estimates) mean += x;
  mean /= config.runs;
  double var = 0.0;
  for (double x : result.estimates) var += (x - mean) * (x - mean);
  var /= config.runs;
  result.empirical_mean = mean;
  result.empirical_variance = var;
  result.nrmse_global = nrmse(result.estimates, result.truth_tau);

  if (config.locals && !tracked.empty()) {
    double acc = 0.0;
    for (std::size_t t = 0; t < tracked.size(); ++t) {
      double rmse = std::sqrt(local_sq[t] / config.runs);
      acc += rmse / static_cast<double>(truth->tau_v[tracked[t]]);
    }
    result.nrmse_local_mean = acc / static_cast<double>(tracked.size());
  }

  const double tau_d = result.truth_tau;
  if (config.method == Method::kMascot) {
    if (truth->eta) {
      result.theoretical_variance = mascot_theoretical_variance(
          tau_d, static_cast<double>(*truth->eta), config.m, config.c);
    }
  } else if (config.c <= config.m) {
    if (truth->eta) {
      result.theoretical_variance = rept_theoretical_variance(
          tau_d, static_cast<double>(*truth->eta), config.m, config.c);
    }
  } else if (config.c % config.m == 0) {
    result.theoretical_variance =
        rept_theoretical_variance_divisible(tau_d, config.m, config.c / config.m);
  }
  return result;
}

const char* const kEvalCsvHeader =
    "method,m,c,runs,nrmse_global,nrmse_local_mean,emp_var,theo_var";

std::string eval_csv_row(const EvalResult& result) {
  std::string row = method_name(result.method);
  row += ',';
  row += std::to_string(result.m);
  row += ',';
  row += std::to_string(result.c);
  row += ',';
  row += std::to_string(result.runs);
  row += ',';
  row += format_g(result.nrmse_global);
  row += ',';
  if (result.nrmse_local_mean) row += format_g(*result.nrmse_local_mean);
  row += ',';
  row += format_g(result.empirical_variance);
  row += ',';
  if (result.theoretical_variance) row += format_g(*result.theoretical_variance);
  return row;
}

std::string compare_report(std::span<const EvalResult> results) {
  if (results.empty()) throw std::invalid_argument("compare_report: no results");
  for (const EvalResult& r : results) {
    if (r.digest != results.front().digest) {
      throw std::invalid_argument("compare_report: results come from different streams");
    }
  }
  std::string table = kEvalCsvHeader;
  table += ",var_ratio\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    table += eval_csv_row(results[i]);
    table += ',';
    for (std::size_t j = 0; j < i; ++j) {
      if (results[j].m == results[i].m && results[j].c == results[i].c) {
        table += format_g(results[i].empirical_variance / results[j].empirical_variance);
        break;
      }
    }
    table += '\n';
  }
  return table;
}

}  // namespace rept
