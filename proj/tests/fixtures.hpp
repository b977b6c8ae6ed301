#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rept/edge.hpp"

// Small streams with counts worked out by hand. Node ids are dense already.
//
// Derivations follow the shared-edge rule: two distinct triangles overlap in
// at most one edge; a pair counts toward eta when that edge is the final
// stream edge of neither triangle, toward eta_last_one when it is the final
// edge of exactly one.

namespace fixtures {

inline rept::EdgeStream make_stream(std::initializer_list<std::pair<int, int>> edges,
                                    rept::NodeId nodes) {
  rept::EdgeStream s;
  for (auto [u, v] : edges) {
    s.edges.push_back(*rept::canonicalize_edge(static_cast<rept::NodeId>(u),
                                               static_cast<rept::NodeId>(v)));
  }
  s.node_count = nodes;
  s.labels.resize(nodes);
  for (rept::NodeId v = 0; v < nodes; ++v) s.labels[v] = v;
  return s;
}

// Triangle: tau=1, eta=0.
inline rept::EdgeStream k3() { return make_stream({{0, 1}, {0, 2}, {1, 2}}, 3); }

// K4 in fixed order: tau=4, tau_v=3 everywhere; eta=3 with eta_v=(3,1,1,1);
// two pairs share an edge that closed one of the two triangles, so
// eta_last_one=2 and a store-everything pair counter reads 5.
inline rept::EdgeStream k4() {
  return make_stream({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}, 4);
}

// Two triangles sharing edge (0,1). Order A streams the shared edge first:
// it closes neither triangle, eta=1. Order B streams it last: it closes
// both, eta=0. Same graph, tau=2 either way.
inline rept::EdgeStream two_triangle_a() {
  return make_stream({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}, 4);
}
inline rept::EdgeStream two_triangle_b() {
  return make_stream({{0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 1}}, 4);
}

// "Book": four triangles all sharing the spine (0,1), which arrives first.
// tau=4; every pair of pages overlaps in the spine only, closed by neither,
// so eta=C(4,2)=6 >= tau and eta_last_one=0. eta_v=(6,6,0,0,0,0).
inline rept::EdgeStream book() {
  return make_stream(
      {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {0, 5}, {1, 5}}, 6);
}

struct Expected {
  std::uint64_t tau;
  std::vector<std::uint64_t> tau_v;
  std::uint64_t eta;
  std::vector<std::uint64_t> eta_v;
  std::uint64_t eta_last_one;
};

inline Expected k3_expected() { return {1, {1, 1, 1}, 0, {0, 0, 0}, 0}; }
inline Expected k4_expected() { return {4, {3, 3, 3, 3}, 3, {3, 1, 1, 1}, 2}; }
inline Expected two_triangle_a_expected() { return {2, {2, 2, 1, 1}, 1, {1, 1, 0, 0}, 0}; }
inline Expected two_triangle_b_expected() { return {2, {2, 2, 1, 1}, 0, {0, 0, 0, 0}, 0}; }
inline Expected book_expected() { return {4, {4, 4, 1, 1, 1, 1}, 6, {6, 6, 0, 0, 0, 0}, 0}; }

}  // namespace fixtures
