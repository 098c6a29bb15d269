#ifndef LKZETA_STEINER_HPP
#define LKZETA_STEINER_HPP

#include <cstdint>
#include <vector>

#include "lkzeta/cone.hpp"
#include "lkzeta/polytope.hpp"

namespace lkz {

/// The sequence (Lambda_0, ..., Lambda_n) of tube-formula coefficients:
/// Vol_n(T_{X,eps}) = sum_i alpha_i Lambda_{n-i}(X) eps^i.
struct LKVector {
  int ambient_dim = 0;
  std::vector<double> values;  // size ambient_dim + 1

  LKVector() = default;
  explicit LKVector(int n) : ambient_dim(n), values(n + 1, 0.0) {}
  double operator[](int i) const { return values[i]; }
  double& operator[](int i) { return values[i]; }

  LKVector& operator+=(const LKVector& o);
  LKVector& operator-=(const LKVector& o);
};

struct AngleOptions {
  std::int64_t mc_samples = 100000;
  std::uint64_t seed = 0;
};

/// Exterior angle gamma(F, P): the fraction of the unit sphere of the linear
/// span of the outward normal cone lying inside the cone. gamma(P, P) = 1.
/// Closed form when the span of the pointed part is <= 3-dimensional,
/// Monte Carlo membership sampling above that.
double exterior_angle(const Polytope& P, int face_index,
                      const AngleOptions& opts = {});

/// Exact Steiner coefficients: Lambda_i(P) = sum over i-faces of
/// Vol_i(F) * gamma(F, P).
LKVector steiner_coefficients(const Polytope& P, const AngleOptions& opts = {});

/// Steiner polynomial sum_i alpha_i Lambda_{n-i} eps^i.
double steiner_polynomial(const LKVector& lk, double eps);

}  // namespace lkz

#endif
