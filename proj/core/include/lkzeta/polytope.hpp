#ifndef LKZETA_POLYTOPE_HPP
#define LKZETA_POLYTOPE_HPP

#include <map>
#include <vector>

#include "lkzeta/linalg.hpp"

namespace lkz {

struct Face {
  std::vector<int> verts;  // sorted vertex indices
  int dim = 0;
};

struct Halfspace {
  Vec normal;     // unit
  double offset;  // <normal, x> <= offset
};

/// Convex polytope with an explicit face lattice. Vertices and facet
/// descriptions are the input; every other face is the intersection of the
/// facets containing it. Coordinates are expected at O(1) scale.
class Polytope {
public:
  int ambient_dim = 0;
  std::vector<Vec> vertices;
  std::vector<Face> faces;            // all faces including the top
  std::map<int, std::vector<int>> by_dim;  // dim -> face indices
  std::vector<int> facet_faces;       // indices of (dim-1)-faces used as facets
  int dim = 0;                        // affine dimension of the vertex set

  const Face& top() const;
  std::vector<int> faces_of_dim(int k) const;

  /// Facets (as halfspaces) relative to the affine hull of the polytope.
  /// Normals lie in the hull's direction space.
  const std::vector<Halfspace>& relative_halfspaces() const;

  /// Orthonormal basis of the affine hull direction space.
  const std::vector<Vec>& hull_basis() const;

  /// Ambient halfspace description: relative facets plus +-pairs fixing the
  /// affine hull. Sufficient to cut the polytope out of R^n.
  std::vector<Halfspace> ambient_halfspaces() const;

  /// Euclidean i-volume of a face, by fan triangulation from its centroid.
  double face_volume(int face_index) const;

  Vec centroid() const;

  /// Axis-aligned bounding box (lo, hi).
  std::pair<Vec, Vec> bounding_box() const;

  /// Lattice index of the face with the given vertex set, or -1.
  int find_face(const std::vector<int>& verts) const;

private:
  friend Polytope build_face_lattice(int, std::vector<Vec>,
                                     std::vector<std::vector<int>>);
  mutable std::vector<Halfspace> rel_halfspaces_;
  mutable std::vector<Vec> hull_basis_;
  mutable bool geom_ready_ = false;
  void ensure_geometry() const;
};

/// Builds the full lattice from vertices and facets given as vertex-index
/// subsets. Throws validation_error on unsupported or inconsistent data.
Polytope build_face_lattice(int ambient_dim, std::vector<Vec> vertices,
                            std::vector<std::vector<int>> facet_vertex_sets);

/// Same, with facets given as supporting halfspaces.
Polytope build_face_lattice(int ambient_dim, std::vector<Vec> vertices,
                            const std::vector<Halfspace>& facets);

/// Convenience constructors used across tests and fixtures.
Polytope make_box(const Vec& lo, const Vec& hi);
Polytope make_simplex(const std::vector<Vec>& verts);
Polytope make_point(const Vec& p);
Polytope make_segment(const Vec& a, const Vec& b);

/// Applies x -> R x + t to every vertex (lattice is combinatorial, reused).
Polytope transform(const Polytope& P, const Mat& R, const Vec& t);
Polytope scale(const Polytope& P, double s);

}  // namespace lkz

#endif
