#include "lkzeta/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lkzeta/errors.hpp"

namespace lkz {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator*(double s, const Vec& a) {
  Vec r(a);
  for (double& v : r) v *= s;
  return r;
}

Vec normalized(const Vec& a) {
  const double n = norm(a);
  if (n == 0.0) throw numeric_error("normalized: zero vector");
  return (1.0 / n) * a;
}

bool solve_linear(Mat A, Vec b, Vec& x, double tol) {
  const int n = A.rows;
  if (n != A.cols || static_cast<int>(b.size()) != n)
    throw validation_error("solve_linear: shape mismatch");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::fabs(A(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::fabs(A(i, k));
      if (v > best) { best = v; piv = i; }
    }
    if (best < tol) return false;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      std::swap(b[k], b[piv]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
      b[i] -= f * b[k];
    }
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
    x[i] = s / A(i, i);
  }
  return true;
}

std::vector<Vec> gram_schmidt(const std::vector<Vec>& vs, double tol) {
  std::vector<Vec> basis;
  for (const Vec& v : vs) {
    Vec u = v;
    // two projection passes for numerical stability
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& e : basis) u = u - dot(u, e) * e;
    const double n = norm(u);
    if (n > tol) basis.push_back((1.0 / n) * u);
  }
  return basis;
}

int linear_rank(const std::vector<Vec>& vs, double tol) {
  return static_cast<int>(gram_schmidt(vs, tol).size());
}

int affine_dim(const std::vector<Vec>& pts, double tol) {
  if (pts.empty()) return -1;
  std::vector<Vec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return linear_rank(diffs, tol);
}

Vec coords_in_basis(const Vec& v, const std::vector<Vec>& basis) {
  Vec c(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) c[i] = dot(v, basis[i]);
  return c;
}

Vec from_basis(const Vec& coords, const std::vector<Vec>& basis, int n) {
  Vec v(n, 0.0);
  for (size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < n; ++j) v[j] += coords[i] * basis[i][j];
  return v;
}

namespace {

// Least squares on selected columns via normal equations; ridge fallback
// keeps near-dependent passive sets from derailing NNLS.
bool lstsq_cols(const Mat& A, const Vec& b, const std::vector<int>& cols, Vec& z) {
  const int m = static_cast<int>(cols.size());
  Mat G(m, m);
  Vec rhs(m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int r = 0; r < A.rows; ++r) s += A(r, cols[i]) * A(r, cols[j]);
      G(i, j) = s;
    }
    double s = 0.0;
    for (int r = 0; r < A.rows; ++r) s += A(r, cols[i]) * b[r];
    rhs[i] = s;
  }
  if (solve_linear(G, rhs, z, 1e-13)) return true;
  for (int i = 0; i < m; ++i) G(i, i) += 1e-12;
  return solve_linear(G, rhs, z, 1e-15);
}

}  // namespace

double nnls(const Mat& A, const Vec& b, Vec& x, double tol, int max_iter) {
  const int ncols = A.cols;
  x.assign(ncols, 0.0);
  if (ncols == 0) return norm(b);
  if (max_iter <= 0) max_iter = 4 * ncols + 32;

  std::vector<char> passive(ncols, 0);
  std::vector<int> pset;
  Vec resid = b;

  for (int iter = 0; iter < max_iter; ++iter) {
    // gradient of the active columns
    int best = -1;
    double bestw = tol;
    for (int j = 0; j < ncols; ++j) {
      if (passive[j]) continue;
      double w = 0.0;
      for (int r = 0; r < A.rows; ++r) w += A(r, j) * resid[r];
      if (w > bestw) { bestw = w; best = j; }
    }
    if (best < 0) break;
    passive[best] = 1;
    pset.push_back(best);

    for (int inner = 0; inner < max_iter; ++inner) {
      Vec z;
      if (!lstsq_cols(A, b, pset, z)) { z.assign(pset.size(), 0.0); }
      bool all_pos = true;
      for (double v : z)
        if (v <= tol) { all_pos = false; break; }
      if (all_pos) {
        for (size_t i = 0; i < pset.size(); ++i) x[pset[i]] = z[i];
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < pset.size(); ++i) {
        if (z[i] <= tol) {
          const double xi = x[pset[i]];
          const double denom = xi - z[i];
          if (denom > 0) alpha = std::min(alpha, xi / denom);
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (size_t i = 0; i < pset.size(); ++i) {
        x[pset[i]] += alpha * (z[i] - x[pset[i]]);
        if (x[pset[i]] < tol) x[pset[i]] = 0.0;
      }
      std::vector<int> keep;
      for (int j : pset) {
        if (x[j] > 0.0) keep.push_back(j);
        else passive[j] = 0;
      }
      pset.swap(keep);
      if (pset.empty()) break;
    }

    resid = b;
    for (int j : pset)
      for (int r = 0; r < A.rows; ++r) resid[r] -= A(r, j) * x[j];
  }
  return norm(resid);
}

bool in_nonneg_span(const Mat& A, const Vec& b, double tol) {
  Vec x;
  const double r = nnls(A, b, x);
  return r <= tol * std::max(1.0, norm(b));
}

namespace {

// min |y|^2 over the affine hull of S; barycentric coefficients out.
bool affine_min_norm(const std::vector<Vec>& pts, const std::vector<int>& S, Vec& a) {
  const int m = static_cast<int>(S.size());
  Mat M(m + 1, m + 1);
  Vec rhs(m + 1, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) M(i, j) = dot(pts[S[i]], pts[S[j]]);
    M(i, m) = 1.0;
    M(m, i) = 1.0;
  }
  rhs[m] = 1.0;
  Vec sol;
  if (!solve_linear(M, rhs, sol, 1e-13)) {
    for (int i = 0; i < m; ++i) M(i, i) += 1e-12;
    if (!solve_linear(M, rhs, sol, 1e-15)) return false;
  }
  a.assign(sol.begin(), sol.begin() + m);
  return true;
}

}  // namespace

Vec min_norm_point(const std::vector<Vec>& points, double tol) {
  if (points.empty()) throw validation_error("min_norm_point: empty point set");
  const int n = static_cast<int>(points[0].size());

  double scale = 1.0;
  for (const Vec& p : points) scale = std::max(scale, dot(p, p));

  int start = 0;
  double bn = dot(points[0], points[0]);
  for (size_t i = 1; i < points.size(); ++i) {
    const double v = dot(points[i], points[i]);
    if (v < bn) { bn = v; start = static_cast<int>(i); }
  }

  std::vector<int> S = {start};
  Vec w = {1.0};
  Vec x = points[start];

  const int max_major = 16 * (n + 2) * static_cast<int>(points.size()) + 64;
  for (int major = 0; major < max_major; ++major) {
    int q = -1;
    double bestdp = dot(x, x) - tol * scale;
    for (size_t j = 0; j < points.size(); ++j) {
      const double dp = dot(x, points[j]);
      if (dp < bestdp) { bestdp = dp; q = static_cast<int>(j); }
    }
    if (q < 0) break;
    bool already = false;
    for (int s : S)
      if (s == q) { already = true; break; }
    if (already) break;
    S.push_back(q);
    w.push_back(0.0);

    for (int minor = 0; minor < max_major; ++minor) {
      Vec a;
      if (!affine_min_norm(points, S, a)) {
        // dependent corral: drop the smallest-weight member and retry
        size_t drop = 0;
        for (size_t i = 1; i < S.size(); ++i)
          if (w[i] < w[drop]) drop = i;
        S.erase(S.begin() + drop);
        w.erase(w.begin() + drop);
        if (S.empty()) return x;
        continue;
      }
      bool interior = true;
      for (double v : a)
        if (v <= 1e-11) { interior = false; break; }
      if (interior) {
        w = a;
        break;
      }
      double theta = 1.0;
      for (size_t i = 0; i < S.size(); ++i) {
        const double denom = w[i] - a[i];
        if (denom > 1e-14) theta = std::min(theta, w[i] / denom);
      }
      for (size_t i = 0; i < S.size(); ++i) w[i] += theta * (a[i] - w[i]);
      std::vector<int> S2;
      Vec w2;
      for (size_t i = 0; i < S.size(); ++i) {
        if (w[i] > 1e-11) { S2.push_back(S[i]); w2.push_back(w[i]); }
      }
      S.swap(S2);
      w.swap(w2);
      if (S.empty()) { S = {start}; w = {1.0}; break; }
    }

    x.assign(n, 0.0);
    for (size_t i = 0; i < S.size(); ++i)
      for (int j = 0; j < n; ++j) x[j] += w[i] * points[S[i]][j];
  }
  return x;
}

double dist_to_hull(const std::vector<Vec>& points, const Vec& x) {
  std::vector<Vec> shifted;
  shifted.reserve(points.size());
  for (const Vec& p : points) shifted.push_back(p - x);
  return norm(min_norm_point(shifted));
}

}  // namespace lkz
