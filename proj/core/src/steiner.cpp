#include "lkzeta/steiner.hpp"

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

namespace lkz {

LKVector& LKVector::operator+=(const LKVector& o) {
  for (size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

LKVector& LKVector::operator-=(const LKVector& o) {
  for (size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

double exterior_angle(const Polytope& P, int face_index, const AngleOptions& opts) {
  if (face_index < 0 || face_index >= static_cast<int>(P.faces.size()))
    throw validation_error("exterior_angle: face not in lattice");
  const Face& F = P.faces[face_index];
  if (F.dim == P.dim) return 1.0;  // gamma(P, P) = 1 by convention

  const Cone C = normal_cone(P, face_index);
  if (C.generators.empty())
    throw numeric_error("exterior_angle: empty normal span for a proper face");
  const double g = angle_fraction(C, opts.mc_samples, opts.seed);
  return ensure_finite(g, "exterior_angle");
}

LKVector steiner_coefficients(const Polytope& P, const AngleOptions& opts) {
  LKVector lk(P.ambient_dim);
  for (const auto& [d, idxs] : P.by_dim) {
    for (int fi : idxs) {
      const double vol = P.face_volume(fi);
      if (!(vol >= 0.0))
        throw validation_error("steiner_coefficients: degenerate face volume");
      lk[d] += vol * exterior_angle(P, fi, opts);
    }
  }
  return lk;
}

double steiner_polynomial(const LKVector& lk, double eps) {
  const int n = lk.ambient_dim;
  double s = 0.0;
  for (int i = 0; i <= n; ++i)
    s += unit_ball_volume(i) * lk[n - i] * std::pow(eps, i);
  return s;
}

}  // namespace lkz
