#ifndef LKZETA_LINALG_HPP
#define LKZETA_LINALG_HPP

#include <cstddef>
#include <vector>

namespace lkz {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(double s, const Vec& a);
Vec normalized(const Vec& a);

/// Dense row-major matrix sized for small geometry problems (<= ~40 rows).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Solves A x = b with partial pivoting. Returns false when A is singular
/// relative to tol.
bool solve_linear(Mat A, Vec b, Vec& x, double tol = 1e-12);

/// Gram-Schmidt orthonormalization; vectors below tol after projection are
/// dropped. Returns an orthonormal basis of the span.
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs, double tol = 1e-10);

/// Rank of the linear span.
int linear_rank(const std::vector<Vec>& vs, double tol = 1e-9);

/// Affine dimension of a point set (rank of differences from the first point).
int affine_dim(const std::vector<Vec>& pts, double tol = 1e-9);

/// Coordinates of v in an orthonormal basis.
Vec coords_in_basis(const Vec& v, const std::vector<Vec>& basis);

/// Reconstruction from orthonormal-basis coordinates.
Vec from_basis(const Vec& coords, const std::vector<Vec>& basis, int n);

/// Lawson-Hanson nonnegative least squares: min |A x - b| s.t. x >= 0.
/// Returns the residual norm; x has size A.cols.
double nnls(const Mat& A, const Vec& b, Vec& x, double tol = 1e-12, int max_iter = 0);

/// True when b lies in the nonnegative column span of A within tol
/// (residual measured against max(1, |b|)).
bool in_nonneg_span(const Mat& A, const Vec& b, double tol = 1e-9);

/// Wolfe's minimum-norm-point algorithm over conv(points).
/// Returns the closest point of the hull to the origin.
Vec min_norm_point(const std::vector<Vec>& points, double tol = 1e-12);

/// Euclidean distance from x to conv(points); points must be nonempty.
double dist_to_hull(const std::vector<Vec>& points, const Vec& x);

}  // namespace lkz

#endif
