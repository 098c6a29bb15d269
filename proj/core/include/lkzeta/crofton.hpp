#ifndef LKZETA_CROFTON_HPP
#define LKZETA_CROFTON_HPP

#include <cstdint>

#include "lkzeta/plset.hpp"
#include "lkzeta/tube.hpp"

namespace lkz {

struct SliceStatistics {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::int64_t samples = 0;
  double zero_hit_fraction = 0.0;
  std::int64_t resampled = 0;
};

struct Window {
  Vec lo, hi;
};

/// d-volume of a pure d-dimensional PL set by the Cauchy-Crofton formula:
/// average point counts of intersections with random (n-d)-flats. Flats are
/// drawn as (direction P in G(d,n), offset uniform over the window's
/// projection onto P); the projection volume is the measure weight.
/// Supported: d=1 with n in {2,3}, d=2 with n=3.
SliceStatistics crofton_volume_mc(const PLSet& X, const Window& window,
                                  const McOptions& opts = {});

/// Lambda_i(X) as the beta(i,n)-normalized average of chi(X cap flat) over
/// random (n-i)-flats; chi of each slice via the nerve rule. n <= 4.
SliceStatistics lk_via_slices_mc(const PLSet& X, int i, const Window& window,
                                 const McOptions& opts = {});

/// Window = bounding box of X.
Window natural_window(const PLSet& X);

}  // namespace lkz

#endif
