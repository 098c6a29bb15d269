#ifndef LKZETA_CONIC_HPP
#define LKZETA_CONIC_HPP

#include <vector>

#include "lkzeta/cone.hpp"
#include "lkzeta/steiner.hpp"

namespace lkz {

/// Definable germ at the origin: finite union of polyhedral cones, optionally
/// with integer multiplicities. Multiplicity 1 on every piece is the plain
/// set; higher multiplicities weight the piece in the constructible-function
/// sense (Euler-integral level sets).
struct ConicGerm {
  int ambient_dim = 0;
  struct Piece {
    Cone cone;
    int mult = 1;
  };
  std::vector<Piece> pieces;

  bool empty() const { return pieces.empty(); }
};

ConicGerm make_germ(int n, std::vector<Cone> cones);

/// Signed decomposition: the germ's Euler-integral evaluates on any additive
/// functional as sum coeff * functional(cone). Derived from level sets and
/// inclusion-exclusion over the nerve of piece intersections; cones here are
/// intersections of subsets of pieces.
struct SignedConeTerm {
  Cone cone;
  int coeff = 0;
};
std::vector<SignedConeTerm> signed_cone_terms(const ConicGerm& germ);

/// Raw LK curvatures of (C ∩ closed unit ball) for one convex polyhedral
/// cone, exact closed forms. Supported: any linear subspace (dim <= 6), and
/// cones whose span is <= 3-dimensional.
LKVector truncated_cone_lk(const Cone& c, int ambient_dim);

/// Local Lipschitz-Killing invariants of the germ:
/// Lambda_i^loc = Lambda_i(X0 cap B(0,1)) / alpha_i, exact path.
std::vector<double> local_lk(const ConicGerm& germ);

/// Raw Lambda_i of the truncation X0 cap closed-ball(0, rho); conic scale
/// invariance makes this rho^i times the unit-ball value.
LKVector lk_of_truncation(const ConicGerm& germ, double rho);

/// Local density Theta_d = Vol_d(X0 cap B(0,1)) / alpha_d for a germ of pure
/// dimension d. Mixed piece dimensions are rejected.
double density(const ConicGerm& germ);

/// Dimension of the germ (max over pieces of the span dimension).
int germ_dim(const ConicGerm& germ);

}  // namespace lkz

#endif
