#ifndef LKZETA_CONE_HPP
#define LKZETA_CONE_HPP

#include <cstdint>
#include <vector>

#include "lkzeta/linalg.hpp"
#include "lkzeta/polytope.hpp"

namespace lkz {

/// Polyhedral cone with vertex at the origin, stored by generators
/// (R_+-span) and/or supporting halfspace normals (<a, x> <= 0).
struct Cone {
  int ambient_dim = 0;
  std::vector<Vec> generators;
  std::vector<Vec> normals;
  bool from_normals = false;

  static Cone span_of(int n, std::vector<Vec> gens);
  static Cone from_halfspaces(int n, std::vector<Vec> normals);
  static Cone zero(int n) { return span_of(n, {}); }

  bool is_zero() const;
  bool contains(const Vec& x, double tol = 1e-9) const;
};

/// Ensures a generator representation exists (computed from normals for
/// ambient dimension <= 3, otherwise validation_error).
void ensure_generators(Cone& c);

/// Linear span basis of the cone.
std::vector<Vec> cone_span(const Cone& c);

/// Basis of the lineality space C intersect -C.
std::vector<Vec> lineality_basis(const Cone& c);

/// Generators of the pointed quotient part, projected into the orthogonal
/// complement of the lineality space (near-zero projections dropped).
std::vector<Vec> pointed_generators(const Cone& c, const std::vector<Vec>& lineality);

/// Extreme rays of a pointed cone (unit vectors). Input generators may be
/// redundant.
std::vector<Vec> extreme_rays(const std::vector<Vec>& gens);

/// Area of the spherical polygon cut by a pointed 3-dimensional cone,
/// via the angle-excess formula. Rays must linearly span 3 dimensions.
double spherical_polygon_area(const std::vector<Vec>& rays);

/// Fraction of the unit sphere of span(C) lying inside C. Exact closed form
/// when the pointed part spans <= 3 dimensions, Monte Carlo otherwise.
/// A linear subspace (trivial pointed part) gives 1.
double angle_fraction(const Cone& c, std::int64_t mc_samples = 100000,
                      std::uint64_t seed = 0);

/// Outward normal cone of a polytope along one of its faces: the R_+-span of
/// the outward facet normals of all facets containing the face, times the
/// orthogonal complement of the polytope's affine hull. For the top face the
/// relative factor is {0}.
Cone normal_cone(const Polytope& P, int face_index);

/// Halfspace description: equalities pin span(C), inequalities cut C inside
/// it. Supported for span dimension <= 3.
struct ConeHalfspaces {
  std::vector<Vec> equalities;    // <a, x> = 0
  std::vector<Vec> inequalities;  // <a, x> <= 0
};
ConeHalfspaces cone_halfspaces(const Cone& c);

/// Intersection of two cones (ambient dimension <= 3).
Cone cone_intersect(const Cone& a, const Cone& b);

/// Face of a cone together with its dimension and the active constraints.
struct ConeFace {
  Cone cone;
  int dim = 0;
  std::vector<Vec> active_normals;  // inequality normals active on the face
};

/// All faces of a cone (span <= 3), from the whole cone down to the minimal
/// face (its lineality space).
std::vector<ConeFace> cone_face_lattice(const Cone& c);

}  // namespace lkz

#endif
