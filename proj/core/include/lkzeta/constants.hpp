#ifndef LKZETA_CONSTANTS_HPP
#define LKZETA_CONSTANTS_HPP

#include <cmath>

namespace lkz {

inline constexpr double kPi = 3.14159265358979323846;

// Absolute tolerance for geometric predicates on unit-scale data.
inline constexpr double kGeomTol = 1e-9;

// Frame orthonormality tolerance.
inline constexpr double kOrthoTol = 1e-10;

// Angular tolerance used by genericity checks in polar-invariant sampling.
inline constexpr double kAngularTol = 1e-3;

/// Volume of the i-dimensional unit ball, pi^{i/2} / Gamma(i/2 + 1).
double unit_ball_volume(int i);

/// Surface measure of the unit sphere S^{i} in R^{i+1}, (i+1) * alpha_{i+1}.
double sphere_surface(int i);

/// Crofton normalization Gamma((n-d+1)/2)Gamma((d+1)/2) /
/// (Gamma((n+1)/2)Gamma(1/2)); throws for d outside [0, n].
double crofton_constant(int d, int n);

/// Throws numeric_error when x is NaN or infinite.
double ensure_finite(double x, const char* where);

}  // namespace lkz

#endif
