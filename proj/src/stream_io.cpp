#include "rept/stream_io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rept/rng.hpp"

namespace rept {

namespace {

constexpr std::uint64_t kShuffleSalt = 0x73687566666c65ULL;  // "shuffle"

bool parse_label(const std::string& token, std::uint64_t& out) {
  if (token.empty()) return false;
  std::uint64_t value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
    if (value > (UINT64_MAX - digit) / 10) return false;
    value = value * 10 + digit;
  }
  out = value;
  return true;
}

void shuffle_edges(std::vector<Edge>& edges, std::uint64_t seed) {
  Rng rng(mix64(seed ^ kShuffleSalt));
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(edges[i - 1], edges[j]);
  }
}

}  // namespace

EdgeStream parse_edge_list(std::istream& in, IngestStats* stats) {
  EdgeStream stream;
  IngestStats local;
  std::unordered_map<std::uint64_t, NodeId> id_of;
  std::unordered_set<Edge, EdgeHash> seen;

  auto remap = [&](std::uint64_t label) {
    auto [it, fresh] = id_of.emplace(label, static_cast<NodeId>(id_of.size()));
    if (fresh) stream.labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    ++local.lines_parsed;
    std::istringstream fields(line);
    std::string ta, tb, extra;
    if (!(fields >> ta >> tb) || (fields >> extra)) {
      throw ParseError(line_no, "expected exactly two node labels");
    }
    std::uint64_t la = 0, lb = 0;
    if (!parse_label(ta, la) || !parse_label(tb, lb)) {
      throw ParseError(line_no, "node labels must be non-negative integers");
    }

    NodeId a = remap(la);
    NodeId b = remap(lb);
    auto edge = canonicalize_edge(a, b);
    if (!edge) {
      ++local.self_loops_dropped;
      continue;
    }
    if (!seen.insert(*edge).second) {
      ++local.duplicates_dropped;
      continue;
    }
    stream.edges.push_back(*edge);
    ++local.edges_kept;
  }

  stream.node_count = static_cast<NodeId>(id_of.size());
  if (stats != nullptr) *stats = local;
  return stream;
}

EdgeStream load_edge_list(const std::string& path, IngestStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in, stats);
}

void serialize_edge_list(const EdgeStream& stream, std::ostream& out) {
  for (const Edge& e : stream.edges) {
    out << stream.labels[e.u] << ' ' << stream.labels[e.v] << '\n';
  }
}

namespace {

std::vector<Edge> erdos_renyi_edges(NodeId n, double p, Rng& rng) {
  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
    return edges;
  }
  // Skip-based sampling over the C(n,2) pair sequence: jump ahead by a
  // geometric number of pairs instead of flipping one coin per pair.
  double log_q = std::log1p(-p);
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t pos = 0;
  while (true) {
    double u01 = rng.next_double();
    double skip = std::floor(std::log1p(-u01) / log_q);
    pos += static_cast<std::uint64_t>(skip) + 1;
    if (pos > total) break;
    std::uint64_t idx = pos - 1;  // 0-based pair index, row-major over u < v
    NodeId u = 0;
    std::uint64_t row = static_cast<std::uint64_t>(n) - 1;
    while (idx >= row) {
      idx -= row;
      --row;
      ++u;
    }
    NodeId v = static_cast<NodeId>(u + 1 + idx);
    edges.push_back(Edge{u, v});
  }
  return edges;
}

std::vector<Edge> barabasi_albert_edges(NodeId n, std::uint32_t k, Rng& rng) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - k) * k);
  // chances holds one entry per edge endpoint, so sampling from it is
  // degree-proportional.
  std::vector<NodeId> chances;
  chances.reserve(2 * static_cast<std::size_t>(n - k) * k);
  std::vector<NodeId> targets;
  std::unordered_set<NodeId> picked;
  for (NodeId t = k; t < n; ++t) {
    targets.clear();
    picked.clear();
    if (t == k) {
      // No degrees yet; the first added node adopts all seed nodes.
      for (NodeId w = 0; w < k; ++w) targets.push_back(w);
    } else {
      while (targets.size() < k) {
        NodeId w = chances[rng.next_below(chances.size())];
        if (picked.insert(w).second) targets.push_back(w);
      }
    }
    for (NodeId w : targets) {
      edges.push_back(*canonicalize_edge(t, w));
      chances.push_back(t);
      chances.push_back(w);
    }
  }
  return edges;
}

}  // namespace

EdgeStream generate_synthetic(SyntheticModel model, NodeId nodes, double param,
                              std::uint64_t seed) {
  EdgeStream stream;
  Rng rng(mix64(seed));
  switch (model) {
    case SyntheticModel::kErdosRenyi: {
      if (nodes < 2) throw std::invalid_argument("erdos-renyi needs at least 2 nodes");
      if (!(param > 0.0) || param > 1.0) {
        throw std::invalid_argument("erdos-renyi edge probability must be in (0, 1]");
      }
      stream.edges = erdos_renyi_edges(nodes, param, rng);
      break;
    }
    case SyntheticModel::kBarabasiAlbert: {
      if (nodes < 3) throw std::invalid_argument("barabasi-albert needs at least 3 nodes");
      if (param < 1.0 || param != std::floor(param)) {
        throw std::invalid_argument("barabasi-albert attachment degree must be an integer >= 1");
      }
      auto k = static_cast<std::uint32_t>(param);
      if (k >= nodes) throw std::invalid_argument("barabasi-albert needs nodes > k");
      stream.edges = barabasi_albert_edges(nodes, k, rng);
      break;
    }
  }
  shuffle_edges(stream.edges, seed);
  stream.node_count = nodes;
  stream.labels.resize(nodes);
  for (NodeId v = 0; v < nodes; ++v) stream.labels[v] = v;
  return stream;
}

EdgeStream permute_stream(const EdgeStream& stream, std::uint64_t seed) {
  EdgeStream out = stream;
  if (seed == 0) return out;  // identity order
  shuffle_edges(out.edges, seed);
  return out;
}

}  // namespace rept
