#include "lkzeta/plset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

namespace lkz {

PLSet::PLSet(int n, std::vector<Polytope> ps) : ambient_dim(n), pieces(std::move(ps)) {
  for (const auto& p : pieces)
    if (p.ambient_dim != n)
      throw validation_error("plset: piece ambient dimension mismatch");
}

std::vector<Vec> halfspace_vertices(int n, const std::vector<Halfspace>& hs) {
  const int m = static_cast<int>(hs.size());
  std::vector<Vec> verts;
  if (m < n) return verts;

  // iterate over all n-subsets of constraints
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i;
  auto advance = [&]() {
    int i = n - 1;
    while (i >= 0 && c[i] == m - n + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < n; ++j) c[j] = c[j - 1] + 1;
    return true;
  };
  do {
    Mat A(n, n);
    Vec b(n);
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) A(r, j) = hs[c[r]].normal[j];
      b[r] = hs[c[r]].offset;
    }
    Vec x;
    if (!solve_linear(A, b, x, 1e-10)) continue;
    bool feasible = true;
    for (const auto& h : hs)
      if (dot(h.normal, x) > h.offset + 1e-8) { feasible = false; break; }
    if (!feasible) continue;
    bool dup = false;
    for (const Vec& v : verts)
      if (norm(v - x) < 1e-7) { dup = true; break; }
    if (!dup) verts.push_back(x);
  } while (advance());
  return verts;
}

const std::vector<PLSet::NerveEntry>& PLSet::nerve() const {
  if (nerve_) return *nerve_;
  nerve_.emplace();
  const int k = static_cast<int>(pieces.size());
  if (k > 16) throw validation_error("plset: too many pieces for nerve enumeration");

  std::vector<std::vector<Halfspace>> piece_hs;
  piece_hs.reserve(k);
  for (const auto& p : pieces) piece_hs.push_back(p.ambient_halfspaces());

  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) subset.push_back(i);
    std::vector<Vec> verts;
    if (subset.size() == 1) {
      verts = pieces[subset[0]].vertices;
    } else {
      std::vector<Halfspace> hs;
      for (int i : subset)
        hs.insert(hs.end(), piece_hs[i].begin(), piece_hs[i].end());
      verts = halfspace_vertices(ambient_dim, hs);
    }
    if (!verts.empty()) nerve_->push_back({subset, std::move(verts)});
  }
  return *nerve_;
}

Polytope PLSet::intersection_polytope(const std::vector<int>& subset) const {
  if (subset.size() == 1) return pieces[subset[0]];
  std::vector<Halfspace> hs;
  for (int i : subset) {
    auto ph = pieces[i].ambient_halfspaces();
    hs.insert(hs.end(), ph.begin(), ph.end());
  }
  auto verts = halfspace_vertices(ambient_dim, hs);
  if (verts.empty())
    throw validation_error("plset: empty intersection has no polytope");

  const int d = affine_dim(verts, kGeomTol);
  // facets: active sets of the input halfspaces with affine dimension d-1
  std::set<std::vector<int>> facet_sets;
  for (const auto& h : hs) {
    std::vector<int> act;
    std::vector<Vec> pts;
    for (size_t i = 0; i < verts.size(); ++i)
      if (std::fabs(dot(h.normal, verts[i]) - h.offset) <= 1e-7) {
        act.push_back(static_cast<int>(i));
        pts.push_back(verts[i]);
      }
    if (!act.empty() && affine_dim(pts, kGeomTol) == d - 1) facet_sets.insert(act);
  }
  std::vector<std::vector<int>> facets(facet_sets.begin(), facet_sets.end());
  return build_face_lattice(ambient_dim, verts, facets);
}

std::pair<Vec, Vec> PLSet::bounding_box() const {
  if (pieces.empty())
    throw validation_error("plset: bounding box of the empty set");
  auto [lo, hi] = pieces[0].bounding_box();
  for (size_t i = 1; i < pieces.size(); ++i) {
    auto [l2, h2] = pieces[i].bounding_box();
    for (int j = 0; j < ambient_dim; ++j) {
      lo[j] = std::min(lo[j], l2[j]);
      hi[j] = std::max(hi[j], h2[j]);
    }
  }
  return {lo, hi};
}

int chi_ball(const PLSet& X, const Vec& x, double eps) {
  if (X.empty()) return 0;
  int chi = 0;
  for (const auto& entry : X.nerve()) {
    if (dist_to_hull(entry.vertices, x) <= eps + kGeomTol)
      chi += (entry.subset.size() % 2 == 1) ? 1 : -1;
  }
  return chi;
}

LKVector lk_curvatures(const PLSet& X, const AngleOptions& opts) {
  LKVector lk(X.ambient_dim);
  for (const auto& entry : X.nerve()) {
    const Polytope Q = X.intersection_polytope(entry.subset);
    const LKVector term = steiner_coefficients(Q, opts);
    const double sign = (entry.subset.size() % 2 == 1) ? 1.0 : -1.0;
    for (int i = 0; i <= X.ambient_dim; ++i) lk[i] += sign * term[i];
  }
  return lk;
}

}  // namespace lkz
