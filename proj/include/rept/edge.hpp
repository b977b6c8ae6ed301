#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rept {

using NodeId = std::uint32_t;

// Undirected edge in canonical form: u < v always holds for edges that
// made it into an EdgeStream.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Canonicalizes an endpoint pair. Self-loops have no canonical form and
// yield nullopt; callers treat that as a skip signal.
inline std::optional<Edge> canonicalize_edge(NodeId a, NodeId b) {
  if (a == b) return std::nullopt;
  if (a < b) return Edge{a, b};
  return Edge{b, a};
}

inline std::uint64_t edge_key(const Edge& e) {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t x = edge_key(e);
    // Avalanche so adjacent ids spread across buckets.
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};

// An edge stream: canonical, duplicate-free edges in arrival order over
// densely numbered nodes 0..node_count-1. labels[id] is the raw node label
// the id was remapped from (identity for generated streams).
struct EdgeStream {
  std::vector<Edge> edges;
  NodeId node_count = 0;
  std::vector<std::uint64_t> labels;

  std::size_t t_max() const { return edges.size(); }
};

}  // namespace rept
