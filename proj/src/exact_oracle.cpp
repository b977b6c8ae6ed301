#include "rept/exact_oracle.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rept/processor.hpp"

namespace rept {

ExactCounts exact_stream_counts(const EdgeStream& stream, bool with_eta) {
  ProcessorState state(0, with_eta ? CounterMode::kWithPairs : CounterMode::kCountOnly);
  // closing_count[g] = triangles whose final edge was g itself; those enter
  // g's per-edge counter when g is stored and must not count toward eta.
  std::unordered_map<Edge, std::uint64_t, EdgeHash> closing_count;
  std::uint64_t eta_seeded = 0;
  std::vector<std::uint64_t> eta_seeded_v;
  if (with_eta) eta_seeded_v.assign(stream.node_count, 0);

  for (const Edge& e : stream.edges) {
    auto common = state.observe_edge(e);
    if (with_eta) {
      for (NodeId w : common) {
        Edge uw = *canonicalize_edge(e.u, w);
        Edge vw = *canonicalize_edge(e.v, w);
        auto it = closing_count.find(uw);
        std::uint64_t a = it == closing_count.end() ? 0 : it->second;
        it = closing_count.find(vw);
        std::uint64_t b = it == closing_count.end() ? 0 : it->second;
        eta_seeded += a + b;
        eta_seeded_v[w] += a + b;
        eta_seeded_v[e.u] += a;
        eta_seeded_v[e.v] += b;
      }
    }
    state.insert_sampled_edge(e, common);
    if (with_eta && !common.empty()) closing_count.emplace(e, common.size());
  }

  ExactCounts out;
  out.tau = state.tau();
  out.tau_v.assign(stream.node_count, 0);
  for (const auto& [v, count] : state.tau_v()) out.tau_v[v] = count;
  if (with_eta) {
    out.eta = state.eta() - eta_seeded;
    out.eta_last_one = eta_seeded;
    out.eta_v.assign(stream.node_count, 0);
    for (const auto& [v, count] : state.eta_v()) out.eta_v[v] = count;
    for (NodeId v = 0; v < stream.node_count; ++v) out.eta_v[v] -= eta_seeded_v[v];
  }
  return out;
}

namespace {

std::vector<std::vector<NodeId>> sorted_adjacency(const EdgeStream& stream) {
  std::vector<std::vector<NodeId>> adj(stream.node_count);
  for (const Edge& e : stream.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& neighbors : adj) std::sort(neighbors.begin(), neighbors.end());
  return adj;
}

}  // namespace

NaiveCounts naive_triangle_count(const EdgeStream& stream) {
  auto adj = sorted_adjacency(stream);
  NaiveCounts out;
  out.tau_v.assign(stream.node_count, 0);
  std::vector<NodeId> common;
  for (const Edge& e : stream.edges) {
    common.clear();
    std::set_intersection(adj[e.u].begin(), adj[e.u].end(), adj[e.v].begin(), adj[e.v].end(),
                          std::back_inserter(common));
    for (NodeId w : common) {
      if (w <= e.v) continue;  // count each triangle once, from its least edge
      ++out.tau;
      ++out.tau_v[e.u];
      ++out.tau_v[e.v];
      ++out.tau_v[w];
    }
  }
  return out;
}

PairCounts brute_force_eta_pairs(const EdgeStream& stream, std::uint64_t max_triangles) {
  auto adj = sorted_adjacency(stream);
  std::unordered_map<Edge, std::uint32_t, EdgeHash> position;  // stream index of each edge
  position.reserve(stream.edges.size());
  for (std::size_t t = 0; t < stream.edges.size(); ++t) {
    position.emplace(stream.edges[t], static_cast<std::uint32_t>(t));
  }

  struct Triangle {
    Edge edges[3];
    std::uint32_t last_pos;  // stream position of its final edge
  };
  std::vector<Triangle> triangles;
  std::vector<NodeId> common;
  for (const Edge& e : stream.edges) {
    common.clear();
    std::set_intersection(adj[e.u].begin(), adj[e.u].end(), adj[e.v].begin(), adj[e.v].end(),
                          std::back_inserter(common));
    for (NodeId w : common) {
      if (w <= e.v) continue;
      Triangle tri;
      tri.edges[0] = e;
      tri.edges[1] = *canonicalize_edge(e.u, w);
      tri.edges[2] = *canonicalize_edge(e.v, w);
      tri.last_pos = std::max({position.at(tri.edges[0]), position.at(tri.edges[1]),
                               position.at(tri.edges[2])});
      triangles.push_back(tri);
      if (triangles.size() > max_triangles) {
        throw std::runtime_error("brute_force_eta_pairs: triangle count over budget");
      }
    }
  }

  // Bucket triangles by each edge they contain, then walk pairs per bucket.
  // Two distinct triangles share at most one edge, so no pair repeats.
  std::unordered_map<Edge, std::vector<std::uint32_t>, EdgeHash> by_edge;
  for (std::uint32_t id = 0; id < triangles.size(); ++id) {
    for (const Edge& g : triangles[id].edges) by_edge[g].push_back(id);
  }

  PairCounts out;
  out.eta_v.assign(stream.node_count, 0);
  for (const auto& [g, ids] : by_edge) {
    std::uint32_t g_pos = position.at(g);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        bool last_i = triangles[ids[i]].last_pos == g_pos;
        bool last_j = triangles[ids[j]].last_pos == g_pos;
        if (!last_i && !last_j) {
          ++out.eta;
          ++out.eta_v[g.u];
          ++out.eta_v[g.v];
        } else if (last_i && last_j) {
          ++out.eta_last_both;
        } else {
          ++out.eta_last_one;
        }
      }
    }
  }
  return out;
}

}  // namespace rept
