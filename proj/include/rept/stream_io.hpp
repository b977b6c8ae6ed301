#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rept/edge.hpp"

namespace rept {

struct IngestStats {
  std::uint64_t lines_parsed = 0;
  std::uint64_t edges_kept = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// Reads a whitespace-separated edge list. '#' starts a comment line; blank
// lines are skipped; anything else must be exactly two non-negative integer
// labels. Labels are remapped to dense ids in first-seen order; self-loops
// and repeated edges are dropped and counted.
EdgeStream parse_edge_list(std::istream& in, IngestStats* stats = nullptr);
EdgeStream load_edge_list(const std::string& path, IngestStats* stats = nullptr);

// Writes "label_u label_v" lines in stream order. parse(serialize(s)) == s
// for any canonical stream.
void serialize_edge_list(const EdgeStream& stream, std::ostream& out);

enum class SyntheticModel { kErdosRenyi, kBarabasiAlbert };

// Generates a simple undirected graph and emits its edges in a seeded
// uniform random order. Deterministic in (model, nodes, param, seed).
//   kErdosRenyi:      param = edge probability in (0, 1]
//   kBarabasiAlbert:  param = integer attachment degree k >= 1; every node
//                     past the first k attaches to k distinct earlier nodes
//                     chosen proportionally to degree, giving exactly
//                     (nodes - k) * k edges and a connected graph.
EdgeStream generate_synthetic(SyntheticModel model, NodeId nodes, double param,
                              std::uint64_t seed);

// Returns the stream with edges in a seeded uniform random order. Seed 0 is
// reserved for the identity permutation.
EdgeStream permute_stream(const EdgeStream& stream, std::uint64_t seed);

}  // namespace rept
