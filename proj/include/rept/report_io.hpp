#pragma once

#include <string>

#include "rept/edge.hpp"
#include "rept/exact_oracle.hpp"
#include "rept/rept_runner.hpp"

namespace rept {

// estimate report as a JSON document. elapsed_seconds is the only field
// expected to differ between identical invocations.
std::string report_to_json(const EstimateReport& report);

// exact counts as a JSON document (no timing field).
std::string exact_to_json(const ExactCounts& counts, const EdgeStream& stream);

// "node,tau_v_hat" rows sorted by node, using raw labels.
std::string local_estimates_csv(const EstimateReport& report, const EdgeStream& stream);

// "node,tau_v,eta_v" rows for every node with tau_v >= 1; the eta_v field
// is left empty when pair counts were not computed.
std::string exact_locals_csv(const ExactCounts& counts, const EdgeStream& stream);

// Writes via a temp file in the same directory plus rename, so readers
// never observe a half-written file.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace rept
