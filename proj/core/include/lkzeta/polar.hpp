#ifndef LKZETA_POLAR_HPP
#define LKZETA_POLAR_HPP

#include <cstdint>
#include <vector>

#include "lkzeta/conic.hpp"
#include "lkzeta/crofton.hpp"
#include "lkzeta/errors.hpp"
#include "lkzeta/grassmann.hpp"

namespace lkz {

/// Raised internally when a sampled projection plane is non-generic for the
/// germ; the plane is redrawn.
class genericity_error : public numeric_error {
public:
  explicit genericity_error(const std::string& what) : numeric_error(what) {}
};

/// Constructible function on a projection target: conic regions with constant
/// fiber Euler characteristic. Targets of dimension 1 keep the two rays and
/// the origin; dimension 2 keeps circular sectors.
struct ConstructibleFn {
  int target_dim = 0;
  std::vector<Vec> frame;  // the projection plane (frame in ambient space)
  int value_origin = 0;
  // target_dim == 1
  int value_pos = 0, value_neg = 0;
  // target_dim == 2: half-open angular sectors [a, b) with constant value
  struct Sector {
    double begin = 0.0, end = 0.0;
    int value = 0;
  };
  std::vector<Sector> sectors;

  /// theta_i: density-weighted integral; full-dimensional regions carry their
  /// angular fraction, lower-dimensional ones carry zero.
  double theta() const;

  /// Regions as (cone in target coordinates, value) pairs per the germ model;
  /// wide sectors are split so each cone is convex.
  std::vector<std::pair<Cone, int>> region_cones() const;
};

struct PushforwardOptions {
  // ||y|| for fiber probes, relative to rho = 1. Finite probes bias fiber
  // hits near grazing planes by O(probe_radius), so this sits well below the
  // verification tolerances.
  double probe_radius = 1e-4;
  int base_sectors = 96;   // initial angular grid on the target circle
  int refine_steps = 46;   // bisection depth for region boundaries
};

/// Euler characteristic of the fiber slice { y + P-perp } cap X0 cap B(0,1),
/// evaluated through the signed cone decomposition of the germ. y is given in
/// frame coordinates.
int fiber_chi(const std::vector<SignedConeTerm>& terms,
              const std::vector<Vec>& frame, const Vec& y);

/// Pushforward of the germ's indicator along the orthogonal projection onto
/// span(frame): the constructible function y -> chi(fiber over y) near 0.
/// Throws genericity_error when the plane fails the angular separation test.
ConstructibleFn pushforward(const ConicGerm& germ, const std::vector<Vec>& frame,
                            const PushforwardOptions& opts = {});

struct PolarOptions {
  std::int64_t plane_samples = 20000;
  std::uint64_t seed = 0;
  int workers = 1;
  PushforwardOptions push;
};

struct PolarEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::int64_t samples = 0;
  std::int64_t resampled = 0;
};

/// Polar invariant sigma_i: mean over Haar-random i-planes of theta_i of the
/// pushforward. Exact for i = 0 (always 1 on nonempty closed germs) and for
/// i = n (the density).
PolarEstimate polar_invariant(const ConicGerm& germ, int i,
                              const PolarOptions& opts = {});

/// Upper-triangular matrix of the multidimensional local Cauchy-Crofton
/// formula: unit diagonal and
/// m_i^j = alpha_j/(alpha_{j-i} alpha_i) C(j,i)
///       - alpha_{j-1}/(alpha_{j-1-i} alpha_i) C(j-1,i), for i < j <= n.
struct MLCCMatrix {
  int n = 0;
  std::vector<std::vector<double>> entries;  // (n x n), rows/cols 1..n at [i-1][j-1]
  double at(int i, int j) const { return entries[i - 1][j - 1]; }
};
MLCCMatrix mlcc_matrix(int n);

struct MLCCRow {
  int i = 0;
  double lhs = 0.0;       // Lambda_i^loc, exact path
  double rhs = 0.0;       // (M sigma)_i from Monte Carlo sigma
  double rhs_stderr = 0.0;
  double residual = 0.0;
  bool pass = false;
};
struct MLCCReport {
  std::vector<MLCCRow> rows;
  std::vector<PolarEstimate> sigma;  // sigma_1..sigma_n
  bool pass = false;
};

/// Checks Lambda^loc = M sigma componentwise; a row passes when the residual
/// is below max(tolerance, 3 * stderr).
MLCCReport mlcc_verify(const ConicGerm& germ, double tolerance,
                       const PolarOptions& opts = {});

/// Spherical valuations of a spherical polytope K = K_hat cap S^{n-1}:
/// Lambda-hat_i = local LK of the cone, sigma-hat_i = polar invariants of the
/// cone, Xi_i = sum over i-faces of spherical volume times exterior angle.
struct SphericalValuations {
  std::vector<double> lambda_hat;
  std::vector<double> xi;
  std::vector<double> sigma_hat;
  std::vector<double> sigma_stderr;
};
SphericalValuations spherical_valuations(const Cone& K_hat,
                                         const PolarOptions& opts = {});

}  // namespace lkz

#endif
