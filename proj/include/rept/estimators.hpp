#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>

namespace rept {

// Estimator arithmetic shared by the global and per-node paths. Counts are
// raw per-processor semi-triangle totals; m is the number of hash buckets,
// so a single processor keeps an edge with probability 1/m and a triangle's
// first two edges land on one processor with probability 1/m^2.

inline double sum_counts(std::span<const std::uint64_t> counts) {
  return std::accumulate(counts.begin(), counts.end(), 0.0);
}

// c processors sharing one hash function (c <= m): each semi-triangle is
// seen by some processor with probability c/m^2.
inline double estimate_leq_m(std::span<const std::uint64_t> counts, std::uint32_t m,
                             std::uint32_t c) {
  if (c == 0 || c > m) throw std::invalid_argument("estimate_leq_m: need 1 <= c <= m");
  if (counts.size() != c) throw std::invalid_argument("estimate_leq_m: counts/c mismatch");
  return static_cast<double>(m) * m / c * sum_counts(counts);
}

// c1 full groups of m processors: within one group every edge is kept by
// exactly one processor, so the group total counts each triangle with
// probability 1/m and groups average out by 1/c1.
inline double estimate_gt_m_divisible(std::span<const std::uint64_t> counts, std::uint32_t m,
                                      std::uint32_t c1) {
  if (c1 == 0) throw std::invalid_argument("estimate_gt_m_divisible: need c1 >= 1");
  if (counts.size() != static_cast<std::size_t>(c1) * m) {
    throw std::invalid_argument("estimate_gt_m_divisible: counts/c1*m mismatch");
  }
  return static_cast<double>(m) / c1 * sum_counts(counts);
}

// Pair totals scale by m^3: a pair of triangles overlapping in one stored
// edge needs three distinct edges kept by the same processor.
inline double estimate_eta_hat(std::span<const std::uint64_t> eta_counts, std::uint32_t m,
                               std::uint32_t c) {
  if (c == 0 || eta_counts.size() != c) {
    throw std::invalid_argument("estimate_eta_hat: counts/c mismatch");
  }
  return static_cast<double>(m) * m * m / c * sum_counts(eta_counts);
}

// Variance of the c <= m estimator.
inline double rept_theoretical_variance(double tau, double eta, std::uint32_t m,
                                        std::uint32_t c) {
  if (c == 0 || c > m) throw std::invalid_argument("variance formula needs 1 <= c <= m");
  double md = m;
  return (tau * (md * md - c) + 2.0 * eta * (md - c)) / c;
}

// Variance of the full-groups estimator (c = c1 * m).
inline double rept_theoretical_variance_divisible(double tau, std::uint32_t m,
                                                  std::uint32_t c1) {
  if (c1 == 0) throw std::invalid_argument("variance formula needs c1 >= 1");
  return tau * (static_cast<double>(m) - 1.0) / c1;
}

// Variance of the independent-sampling baseline mean over c processors.
inline double mascot_theoretical_variance(double tau, double eta, std::uint32_t m,
                                          std::uint32_t c) {
  if (c == 0) throw std::invalid_argument("variance formula needs c >= 1");
  double md = m;
  return (tau * (md * md - 1.0) + 2.0 * eta * (md - 1.0)) / c;
}

// Inverse-variance blend of the full-group estimate tau1 and the partial
// group estimate tau2, with both variance proxies evaluated at tau1. Weights
// are guaranteed non-negative (c2 < m <= m^2); if both degenerate to zero
// the partial-group estimate is the only evidence left.
inline double combine_two_stage(double tau1, double tau2, double eta_hat, std::uint32_t m,
                                std::uint32_t c1, std::uint32_t c2) {
  if (c1 == 0 || c2 == 0 || c2 >= m) {
    throw std::invalid_argument("combine_two_stage: need c1 >= 1 and 0 < c2 < m");
  }
  double md = m;
  double w1 = tau1 * (md - 1.0) / c1;
  double w2 = (tau1 * (md * md - c2) + 2.0 * eta_hat * (md - c2)) / c2;
  if (w1 + w2 == 0.0) return tau2;
  return (w2 * tau1 + w1 * tau2) / (w1 + w2);
}

struct CombinedEstimate {
  double tau_hat = 0.0;
  double tau_hat_full = 0.0;     // from the c1 complete groups
  double tau_hat_partial = 0.0;  // from the trailing c2 processors
  double eta_hat = 0.0;          // pooled over all c processors
  double w1 = 0.0;
  double w2 = 0.0;
};

// Estimator for c > m with a partial trailing group (c = c1*m + c2,
// 0 < c2 < m). tau counts come ordered: first the c1*m full-group
// processors, then the c2 trailing ones. eta counts cover all c.
inline CombinedEstimate estimate_gt_m_general(std::span<const std::uint64_t> tau_counts,
                                              std::span<const std::uint64_t> eta_counts,
                                              std::uint32_t m, std::uint32_t c) {
  if (c <= m || c % m == 0) {
    throw std::invalid_argument("estimate_gt_m_general: need c > m with c % m != 0");
  }
  if (tau_counts.size() != c || eta_counts.size() != c) {
    throw std::invalid_argument("estimate_gt_m_general: counts/c mismatch");
  }
  std::uint32_t c1 = c / m;
  std::uint32_t c2 = c % m;
  CombinedEstimate out;
  out.tau_hat_full =
      estimate_gt_m_divisible(tau_counts.first(static_cast<std::size_t>(c1) * m), m, c1);
  out.tau_hat_partial = estimate_leq_m(tau_counts.last(c2), m, c2);
  out.eta_hat = estimate_eta_hat(eta_counts, m, c);
  double md = m;
  out.w1 = out.tau_hat_full * (md - 1.0) / c1;
  out.w2 = (out.tau_hat_full * (md * md - c2) + 2.0 * out.eta_hat * (md - c2)) / c2;
  out.tau_hat =
      combine_two_stage(out.tau_hat_full, out.tau_hat_partial, out.eta_hat, m, c1, c2);
  return out;
}

}  // namespace rept
