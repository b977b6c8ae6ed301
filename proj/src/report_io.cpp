#include "rept/report_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace rept {

namespace {

using nlohmann::json;

std::string csv_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

std::string report_to_json(const EstimateReport& report) {
  json doc;
  doc["method"] = report.method;
  doc["m"] = report.m;
  doc["c"] = report.c;
  doc["seed"] = report.seed;
  doc["tau_hat"] = report.tau_hat;
  if (report.eta_hat) {
    doc["eta_hat"] = *report.eta_hat;
  } else {
    doc["eta_hat"] = nullptr;
  }
  json procs = json::array();
  for (std::size_t i = 0; i < report.processor_tau.size(); ++i) {
    json entry;
    entry["tau"] = report.processor_tau[i];
    if (!report.processor_eta.empty()) entry["eta"] = report.processor_eta[i];
    procs.push_back(std::move(entry));
  }
  doc["per_processor"] = std::move(procs);
  doc["elapsed_seconds"] = report.elapsed_seconds;
  return doc.dump(2) + "\n";
}

std::string exact_to_json(const ExactCounts& counts, const EdgeStream& stream) {
  json doc;
  doc["nodes"] = stream.node_count;
  doc["edges"] = stream.edges.size();
  doc["tau"] = counts.tau;
  if (counts.eta) {
    doc["eta"] = *counts.eta;
    doc["eta_last_one"] = *counts.eta_last_one;
  } else {
    doc["eta"] = nullptr;
    doc["eta_last_one"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

std::string local_estimates_csv(const EstimateReport& report, const EdgeStream& stream) {
  std::vector<NodeId> nodes;
  nodes.reserve(report.tau_v_hat.size());
  for (const auto& [v, _] : report.tau_v_hat) nodes.push_back(v);
  std::sort(nodes.begin(), nodes.end());
  std::string out = "node,tau_v_hat\n";
  for (NodeId v : nodes) {
    out += std::to_string(stream.labels[v]);
    out += ',';
    out += csv_number(report.tau_v_hat.at(v));
    out += '\n';
  }
  return out;
}

std::string exact_locals_csv(const ExactCounts& counts, const EdgeStream& stream) {
  std::string out = "node,tau_v,eta_v\n";
  for (NodeId v = 0; v < stream.node_count; ++v) {
    if (counts.tau_v[v] == 0) continue;
    out += std::to_string(stream.labels[v]);
    out += ',';
    out += std::to_string(counts.tau_v[v]);
    out += ',';
    if (!counts.eta_v.empty()) out += std::to_string(counts.eta_v[v]);
    out += '\n';
  }
  return out;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.parent_path();
  fs::path temp = (dir.empty() ? fs::path(".") : dir) /
                  (target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + temp.string());
  }
  fs::rename(temp, target);
}

}  // namespace rept
