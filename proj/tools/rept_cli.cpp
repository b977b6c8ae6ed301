// Command line front end: generate synthetic streams, compute exact counts,
// run one estimate, or score an estimator over repeated runs.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "rept/eval.hpp"
#include "rept/exact_oracle.hpp"
#include "rept/mascot_runner.hpp"
#include "rept/report_io.hpp"
#include "rept/rept_runner.hpp"
#include "rept/stream_io.hpp"

namespace {

constexpr int kUsageError = 2;

struct GlobalOptions {
  unsigned threads = 0;        // 0 = unset, fall back to env then cores
  std::uint64_t mem_limit_mb = 4096;
};

unsigned resolve_threads(const GlobalOptions& global) {
  if (global.threads > 0) return global.threads;
  if (const char* env = std::getenv("REPT_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return rept::default_thread_count();
}

// Coarse upper bound on resident bytes for a partitioned run: the stream
// plus, per concurrent worker, roughly |E|/m stored edges with hash-set
// overhead (pair mode keeps a second per-edge counter table).
std::uint64_t estimated_footprint_bytes(std::size_t edges, std::uint32_t m, std::uint32_t c,
                                        bool with_pairs, unsigned threads) {
  std::uint64_t stream_bytes = static_cast<std::uint64_t>(edges) * sizeof(rept::Edge) + (1 << 20);
  std::uint64_t per_edge = with_pairs ? 360 : 200;
  std::uint64_t per_proc = (static_cast<std::uint64_t>(edges) / m + 64) * per_edge;
  std::uint64_t workers = std::min<std::uint64_t>(threads, c);
  return stream_bytes + workers * per_proc + static_cast<std::uint64_t>(c) * 64;
}

void enforce_mem_limit(const GlobalOptions& global, std::size_t edges, std::uint32_t m,
                       std::uint32_t c, bool with_pairs) {
  if (global.mem_limit_mb == 0) return;  // guard disabled
  std::uint64_t need = estimated_footprint_bytes(edges, m, c, with_pairs,
                                                 resolve_threads(global));
  if (need > global.mem_limit_mb * (1ULL << 20)) {
    throw CLI::ValidationError(
        "--mem-limit",
        "estimated footprint " + std::to_string(need >> 20) + " MiB exceeds --mem-limit " +
            std::to_string(global.mem_limit_mb) + " MiB");
  }
}

rept::EdgeStream load_input(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw CLI::ValidationError("--input", "no such file: " + path);
  }
  return rept::load_edge_list(path);
}

// Reports go to --out when given, stdout otherwise.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    rept::atomic_write_file(path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming triangle count estimation"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--threads", global.threads, "worker threads (default: REPT_THREADS or cores)");
  app.add_option("--mem-limit", global.mem_limit_mb,
                 "refuse runs estimated to need more than this many MiB (0 disables)");

  // gen
  std::string gen_model;
  std::uint32_t gen_nodes = 0;
  double gen_param = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a synthetic edge stream");
  gen->fallthrough();
  gen->add_option("--model", gen_model, "er | ba")
      ->required()
      ->check(CLI::IsMember({"er", "ba"}));
  gen->add_option("--nodes", gen_nodes)->required()->check(CLI::PositiveNumber);
  gen->add_option("--param", gen_param, "er: edge probability; ba: attachment degree")
      ->required();
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out", gen_out)->required();

  // exact
  std::string exact_in, exact_out, exact_local;
  bool exact_eta = false;
  auto* exact = app.add_subcommand("exact", "exact triangle and pair counts");
  exact->fallthrough();
  exact->add_option("--input", exact_in)->required();
  exact->add_flag("--eta", exact_eta, "also count overlapping triangle pairs");
  exact->add_option("--local", exact_local, "write per-node counts to this CSV");
  exact->add_option("--out", exact_out, "json output path (default: stdout)");

  // estimate
  std::string est_method, est_in, est_out, est_local;
  std::uint32_t est_m = 0, est_c = 0;
  std::uint64_t est_seed = 0;
  auto* estimate = app.add_subcommand("estimate", "single sampled estimate");
  estimate->fallthrough();
  estimate->add_option("--method", est_method)->required()->check(CLI::IsMember({"rept", "mascot"}));
  estimate->add_option("--m", est_m, "hash buckets (keep probability 1/m)")
      ->required()
      ->check(CLI::Range(2u, 1000000u));
  estimate->add_option("--c", est_c, "processors")->required()->check(CLI::PositiveNumber);
  estimate->add_option("--seed", est_seed)->required();
  estimate->add_option("--input", est_in)->required();
  estimate->add_option("--out", est_out, "json output path (default: stdout)");
  estimate->add_option("--local", est_local, "write per-node estimates to this CSV");

  // eval
  std::string eval_method, eval_in, eval_out;
  std::uint32_t eval_m = 0, eval_c = 0, eval_runs = 0;
  std::uint64_t eval_seed = 0;
  auto* eval = app.add_subcommand("eval", "repeated-run error measurement");
  eval->fallthrough();
  eval->add_option("--method", eval_method)->required()->check(CLI::IsMember({"rept", "mascot"}));
  eval->add_option("--m", eval_m)->required()->check(CLI::Range(2u, 1000000u));
  eval->add_option("--c", eval_c)->required()->check(CLI::PositiveNumber);
  eval->add_option("--runs", eval_runs)->required()->check(CLI::Range(2u, 10000000u));
  eval->add_option("--seed", eval_seed)->required();
  eval->add_option("--input", eval_in)->required();
  eval->add_option("--out", eval_out, "csv output path (default: stdout)");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      auto model = gen_model == "er" ? rept::SyntheticModel::kErdosRenyi
                                     : rept::SyntheticModel::kBarabasiAlbert;
      rept::EdgeStream stream;
      try {
        stream = rept::generate_synthetic(model, gen_nodes, gen_param, gen_seed);
      } catch (const std::invalid_argument& err) {
        throw CLI::ValidationError("--param", err.what());
      }
      std::ostringstream out;
      rept::serialize_edge_list(stream, out);
      rept::atomic_write_file(gen_out, out.str());
      std::cerr << "wrote " << stream.edges.size() << " edges over " << stream.node_count
                << " nodes to " << gen_out << "\n";
    } else if (exact->parsed()) {
      auto stream = load_input(exact_in);
      enforce_mem_limit(global, stream.edges.size(), 1, 1, exact_eta);
      auto counts = rept::exact_stream_counts(stream, exact_eta);
      emit(exact_out, rept::exact_to_json(counts, stream));
      if (!exact_local.empty()) {
        rept::atomic_write_file(exact_local, rept::exact_locals_csv(counts, stream));
      }
    } else if (estimate->parsed()) {
      auto stream = load_input(est_in);
      unsigned threads = resolve_threads(global);
      rept::EstimateReport report;
      if (est_method == "rept") {
        rept::ReptConfig config;
        config.m = est_m;
        config.c = est_c;
        config.seed = est_seed;
        config.compute_local = !est_local.empty();
        bool pairs = config.c > config.m && config.c % config.m != 0;
        enforce_mem_limit(global, stream.edges.size(), est_m, est_c, pairs);
        report = rept::run_rept(stream, config, threads);
      } else {
        rept::MascotConfig config;
        config.m = est_m;
        config.c = est_c;
        config.seed = est_seed;
        config.compute_local = !est_local.empty();
        enforce_mem_limit(global, stream.edges.size(), est_m, est_c, false);
        report = rept::run_parallel_mascot(stream, config, threads);
      }
      emit(est_out, rept::report_to_json(report));
      if (!est_local.empty()) {
        rept::atomic_write_file(est_local, rept::local_estimates_csv(report, stream));
      }
    } else if (eval->parsed()) {
      auto stream = load_input(eval_in);
      rept::EvalConfig config;
      config.method = eval_method == "rept" ? rept::Method::kRept : rept::Method::kMascot;
      config.m = eval_m;
      config.c = eval_c;
      config.runs = eval_runs;
      config.seed = eval_seed;
      bool pairs = config.method == rept::Method::kRept && eval_c > eval_m && eval_c % eval_m != 0;
      enforce_mem_limit(global, stream.edges.size(), eval_m, eval_c, pairs);
      auto result = rept::monte_carlo_eval(stream, config, nullptr, resolve_threads(global));
      std::string csv = std::string(rept::kEvalCsvHeader) + "\n" + rept::eval_csv_row(result) + "\n";
      emit(eval_out, csv);
    }
    return 0;
  } catch (const CLI::ParseError& err) {
    // Covers --help (exit 0) as well as bad flags and validation failures.
    int code = app.exit(err);
    return code == 0 ? 0 : kUsageError;
  } catch (const rept::ParseError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid configuration: " << err.what() << "\n";
    return kUsageError;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
