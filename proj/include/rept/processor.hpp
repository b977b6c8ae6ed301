#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rept/edge.hpp"

namespace rept {

enum class CounterMode {
  kCountOnly,  // tau / tau_v only
  kWithPairs,  // additionally eta / eta_v and per-edge triangle counters
};

// Per-processor streaming state. The processor sees every stream edge via
// observe_edge but stores only the edges the caller decides to insert; a
// triangle whose first two stream edges are stored is counted when its
// closing edge is observed.
//
// In kWithPairs mode the state also counts ordered meetings between the
// triangle closed now and previously counted triangles sharing one of its
// first two edges. tau_edge(g) counts counted triangles that contain g,
// including, for a stored g, triangles g itself closed.
class ProcessorState {
 public:
  ProcessorState(std::uint32_t processor_index, CounterMode mode)
      : index_(processor_index), mode_(mode) {}

  // Processes one arriving canonical edge. Returns the common neighborhood
  // of its endpoints over the stored edges, sorted ascending. Counter
  // updates for each common neighbor w happen in this order: eta credits
  // are read from tau_edge(u,w) and tau_edge(v,w) before either counter is
  // incremented for the new triangle.
  std::vector<NodeId> observe_edge(const Edge& e);

  // Stores e. `common` must be the set observe_edge(e) just returned; in
  // kWithPairs mode the new per-edge counter starts at common.size(), the
  // number of triangles e itself closed. Storing an edge twice is a
  // contract violation.
  void insert_sampled_edge(const Edge& e, const std::vector<NodeId>& common);

  std::uint32_t index() const { return index_; }
  CounterMode mode() const { return mode_; }
  std::uint64_t tau() const { return tau_; }
  std::uint64_t eta() const;
  std::uint64_t tau_edge(const Edge& e) const;
  bool contains(const Edge& e) const;
  std::size_t stored_edges() const { return stored_; }

  const std::unordered_map<NodeId, std::uint64_t>& tau_v() const { return tau_v_; }
  const std::unordered_map<NodeId, std::uint64_t>& eta_v() const;

 private:
  std::uint32_t index_;
  CounterMode mode_;
  std::uint64_t tau_ = 0;
  std::uint64_t eta_ = 0;
  std::size_t stored_ = 0;
  std::unordered_map<NodeId, std::unordered_set<NodeId>> adjacency_;
  std::unordered_map<NodeId, std::uint64_t> tau_v_;
  std::unordered_map<NodeId, std::uint64_t> eta_v_;
  std::unordered_map<Edge, std::uint64_t, EdgeHash> tau_edge_;
};

}  // namespace rept
