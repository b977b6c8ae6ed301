#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rept/edge.hpp"

namespace rept {

// Ground truth for one stream. tau_v / eta_v are indexed by dense node id.
// eta counts unordered pairs of distinct triangles sharing an edge that is
// the final stream edge of neither; eta_last_one counts pairs whose shared
// edge is the final edge of exactly one of the two.
struct ExactCounts {
  std::uint64_t tau = 0;
  std::vector<std::uint64_t> tau_v;
  std::optional<std::uint64_t> eta;
  std::optional<std::uint64_t> eta_last_one;
  std::vector<std::uint64_t> eta_v;  // empty when eta was not computed
};

// Single streaming pass that stores every edge (the estimator core at keep
// probability 1). With with_eta, pair counters are corrected down to the
// shared-edge-last-of-neither definition by tracking the contributions that
// entered through a just-stored edge's initial counter.
ExactCounts exact_stream_counts(const EdgeStream& stream, bool with_eta = true);

struct NaiveCounts {
  std::uint64_t tau = 0;
  std::vector<std::uint64_t> tau_v;
};

// Order-free enumeration over sorted adjacency: for each edge (u,v) count
// common neighbors w > v. Independent of the streaming path.
NaiveCounts naive_triangle_count(const EdgeStream& stream);

struct PairCounts {
  std::uint64_t eta = 0;
  std::uint64_t eta_last_one = 0;
  std::uint64_t eta_last_both = 0;
  std::vector<std::uint64_t> eta_v;
};

// Explicitly lists every triangle with the stream position of its final
// edge, then classifies every unordered pair of triangles sharing an edge.
// Quadratic in triangles per edge; refuses streams with more than
// max_triangles triangles.
PairCounts brute_force_eta_pairs(const EdgeStream& stream,
                                 std::uint64_t max_triangles = 2'000'000);

}  // namespace rept
