#ifndef LKZETA_PLSET_HPP
#define LKZETA_PLSET_HPP

#include <optional>
#include <vector>

#include "lkzeta/polytope.hpp"
#include "lkzeta/steiner.hpp"

namespace lkz {

/// Finite union of convex polytopes with a cached nerve: for every subset of
/// pieces, whether the intersection is nonempty, and its vertex set when it
/// is. Euler characteristics of intersections with convex probes come from
/// inclusion-exclusion over this table.
class PLSet {
public:
  int ambient_dim = 0;
  std::vector<Polytope> pieces;

  PLSet() = default;
  PLSet(int n, std::vector<Polytope> ps);

  bool empty() const { return pieces.empty(); }

  struct NerveEntry {
    std::vector<int> subset;     // piece indices, sorted
    std::vector<Vec> vertices;   // vertex set of the intersection
  };

  /// Nonempty intersections over all piece subsets (built lazily).
  const std::vector<NerveEntry>& nerve() const;

  /// Full polytope (with face lattice) of a nerve intersection; needs facet
  /// extraction, so it is computed on demand.
  Polytope intersection_polytope(const std::vector<int>& subset) const;

  std::pair<Vec, Vec> bounding_box() const;

private:
  mutable std::optional<std::vector<NerveEntry>> nerve_;
};

/// Vertices of the polytope cut out by the given halfspaces (enumeration of
/// basic solutions; suitable for the small systems used here).
std::vector<Vec> halfspace_vertices(int n, const std::vector<Halfspace>& hs);

/// Euler characteristic of X intersect closed-ball(x, eps), by the nerve rule:
/// every nonempty convex intersection meeting the ball contributes via
/// inclusion-exclusion.
int chi_ball(const PLSet& X, const Vec& x, double eps);

/// Lipschitz-Killing curvatures of the union by inclusion-exclusion over the
/// nerve, each convex term via steiner_coefficients.
LKVector lk_curvatures(const PLSet& X, const AngleOptions& opts = {});

}  // namespace lkz

#endif
