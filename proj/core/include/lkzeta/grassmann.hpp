#ifndef LKZETA_GRASSMANN_HPP
#define LKZETA_GRASSMANN_HPP

#include <cstdint>
#include <vector>

#include "lkzeta/linalg.hpp"
#include "lkzeta/rng.hpp"

namespace lkz {

/// Affine k-flat: offset + orthonormal direction frame.
struct AffineFlat {
  int ambient_dim = 0;
  std::vector<Vec> frame;  // pairwise orthonormal, spans the direction space
  Vec offset;
};

/// Haar-distributed k-frame in R^n: orthonormalized i.i.d. Gaussian vectors.
/// Deterministic given the generator state.
std::vector<Vec> sample_frame(int k, int n, Rng& rng);

/// Orthonormal basis of the orthogonal complement of `frame` in R^n.
std::vector<Vec> complement_basis(const std::vector<Vec>& frame, int n);

bool frame_orthonormal(const std::vector<Vec>& frame, double tol = 1e-10);

}  // namespace lkz

#endif
