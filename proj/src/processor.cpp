#include "rept/processor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rept {

namespace {

const std::unordered_set<NodeId>* find_neighbors(
    const std::unordered_map<NodeId, std::unordered_set<NodeId>>& adjacency, NodeId v) {
  auto it = adjacency.find(v);
  return it == adjacency.end() ? nullptr : &it->second;
}

}  // namespace

std::vector<NodeId> ProcessorState::observe_edge(const Edge& e) {
  if (e.u >= e.v) throw std::logic_error("observe_edge: edge not canonical");

  std::vector<NodeId> common;
  const auto* nu = find_neighbors(adjacency_, e.u);
  const auto* nv = find_neighbors(adjacency_, e.v);
  if (nu != nullptr && nv != nullptr) {
    // Iterate the smaller stored neighborhood, probe the larger.
    const auto* small = nu;
    const auto* large = nv;
    if (small->size() > large->size()) std::swap(small, large);
    for (NodeId w : *small) {
      if (large->count(w)) common.push_back(w);
    }
    std::sort(common.begin(), common.end());
  }
  if (common.empty()) return common;

  tau_ += common.size();
  tau_v_[e.u] += common.size();
  tau_v_[e.v] += common.size();
  for (NodeId w : common) {
    tau_v_[w] += 1;
    if (mode_ == CounterMode::kWithPairs) {
      // Read both per-edge counters before crediting the new triangle.
      std::uint64_t a = tau_edge_[*canonicalize_edge(e.u, w)];
      std::uint64_t b = tau_edge_[*canonicalize_edge(e.v, w)];
      eta_ += a + b;
      eta_v_[w] += a + b;
      eta_v_[e.u] += a;
      eta_v_[e.v] += b;
      tau_edge_[*canonicalize_edge(e.u, w)] = a + 1;
      tau_edge_[*canonicalize_edge(e.v, w)] = b + 1;
    }
  }
  return common;
}

void ProcessorState::insert_sampled_edge(const Edge& e, const std::vector<NodeId>& common) {
  if (e.u >= e.v) throw std::logic_error("insert_sampled_edge: edge not canonical");
  bool fresh = adjacency_[e.u].insert(e.v).second;
  if (!fresh) throw std::logic_error("insert_sampled_edge: edge already stored");
  adjacency_[e.v].insert(e.u);
  ++stored_;
  if (mode_ == CounterMode::kWithPairs) {
    tau_edge_[e] = common.size();
  }
}

std::uint64_t ProcessorState::eta() const {
  if (mode_ != CounterMode::kWithPairs) {
    throw std::logic_error("eta requested from a count-only processor");
  }
  return eta_;
}

std::uint64_t ProcessorState::tau_edge(const Edge& e) const {
  if (mode_ != CounterMode::kWithPairs) {
    throw std::logic_error("tau_edge requested from a count-only processor");
  }
  auto it = tau_edge_.find(e);
  return it == tau_edge_.end() ? 0 : it->second;
}

bool ProcessorState::contains(const Edge& e) const {
  auto it = adjacency_.find(e.u);
  return it != adjacency_.end() && it->second.count(e.v) > 0;
}

const std::unordered_map<NodeId, std::uint64_t>& ProcessorState::eta_v() const {
  if (mode_ != CounterMode::kWithPairs) {
    throw std::logic_error("eta_v requested from a count-only processor");
  }
  return eta_v_;
}

}  // namespace rept
