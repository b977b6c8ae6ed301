#pragma once

#include <cstdint>
#include <stdexcept>

#include "rept/edge.hpp"
#include "rept/rng.hpp"

namespace rept {

// Seeded family of edge-to-bucket hash functions. Family members are indexed
// by k; member k maps a canonical edge to a bucket in [0, m). Evaluation is a
// pure function of (seed, k, edge, m), so every worker that asks gets the
// same answer regardless of scheduling.
struct HashFamily {
  std::uint64_t seed = 0;
  std::uint32_t m = 2;

  HashFamily(std::uint64_t seed_, std::uint32_t m_) : seed(seed_), m(m_) {
    if (m < 2) throw std::invalid_argument("hash family needs m >= 2 buckets");
  }
};

inline std::uint32_t hash_edge(const HashFamily& family, std::uint32_t k, const Edge& e) {
  // Two mixing rounds over (key, member-derived salt); one round leaves
  // visible structure for dense sequential ids.
  std::uint64_t salt = mix64(family.seed ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
  std::uint64_t h = mix64(edge_key(e) ^ salt);
  h = mix64(h + salt);
  return static_cast<std::uint32_t>(reduce_u64(h, family.m));
}

}  // namespace rept
