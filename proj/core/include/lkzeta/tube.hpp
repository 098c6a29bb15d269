#ifndef LKZETA_TUBE_HPP
#define LKZETA_TUBE_HPP

#include <cstdint>
#include <string>

#include "lkzeta/plset.hpp"

namespace lkz {

struct McEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::int64_t samples = 0;
};

struct McOptions {
  std::int64_t samples = 1000000;
  std::uint64_t seed = 0;
  int workers = 1;
};

/// Monte Carlo estimate of Vol_n(T_{X,eps}) by uniform sampling in the
/// eps-inflated bounding box with distance-to-set tests. Deterministic for a
/// fixed (seed, workers) pair.
McEstimate tube_volume_mc(const PLSet& X, double eps, const McOptions& opts = {});

/// Monte Carlo estimate of the chi-weighted tube integral of (1'):
/// integral over x of chi(X cap closed-ball(x, eps)).
McEstimate weighted_tube_integral_mc(const PLSet& X, double eps,
                                     const McOptions& opts = {});

enum class BenchmarkShape { Circle, Sphere, Disc };

/// Closed-form tube volumes for smooth benchmark shapes; eps must stay below
/// the reach for circle/sphere.
double smooth_benchmark_tube(BenchmarkShape shape, double radius, double eps);

BenchmarkShape benchmark_shape_from_string(const std::string& s);

}  // namespace lkz

#endif
