#include "lkzeta/cone.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"
#include "lkzeta/rng.hpp"

namespace lkz {

namespace {

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Mat columns(const std::vector<Vec>& cols, int rows) {
  Mat A(rows, static_cast<int>(cols.size()));
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < rows; ++i) A(i, j) = cols[j][i];
  return A;
}

double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }

std::vector<Vec> dedupe_rays(const std::vector<Vec>& gens) {
  std::vector<Vec> rays;
  for (const Vec& g : gens) {
    const double n = norm(g);
    if (n < kGeomTol) continue;
    Vec u = (1.0 / n) * g;
    bool dup = false;
    for (const Vec& r : rays)
      if (dot(r, u) > 1.0 - 1e-12) { dup = true; break; }
    if (!dup) rays.push_back(u);
  }
  return rays;
}

}  // namespace

Cone Cone::span_of(int n, std::vector<Vec> gens) {
  Cone c;
  c.ambient_dim = n;
  for (Vec& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw validation_error("cone: generator dimension mismatch");
    if (norm(g) > kGeomTol) c.generators.push_back(std::move(g));
  }
  return c;
}

Cone Cone::from_halfspaces(int n, std::vector<Vec> normals) {
  Cone c;
  c.ambient_dim = n;
  c.from_normals = true;
  for (Vec& a : normals) {
    if (static_cast<int>(a.size()) != n)
      throw validation_error("cone: normal dimension mismatch");
    if (norm(a) > kGeomTol) c.normals.push_back(normalized(a));
  }
  ensure_generators(c);
  return c;
}

bool Cone::is_zero() const { return generators.empty() && !from_normals; }

bool Cone::contains(const Vec& x, double tol) const {
  if (norm(x) <= tol) return true;
  if (from_normals) {
    const double scale = std::max(1.0, norm(x));
    for (const Vec& a : normals)
      if (dot(a, x) > tol * scale) return false;
    return true;
  }
  if (generators.empty()) return false;
  return in_nonneg_span(columns(generators, ambient_dim), x, tol);
}

void ensure_generators(Cone& c) {
  if (!c.generators.empty() || !c.from_normals) return;
  const int n = c.ambient_dim;
  if (n > 3)
    throw validation_error("cone: normals-to-generators conversion limited to n <= 3");
  // candidate rays: null directions of normal subsets, +- axes fallback
  std::vector<Vec> cand;
  if (n == 1) {
    cand = {{1.0}, {-1.0}};
  } else if (n == 2) {
    for (const Vec& a : c.normals) {
      cand.push_back({-a[1], a[0]});
      cand.push_back({a[1], -a[0]});
    }
    cand.push_back({1.0, 0.0});
    cand.push_back({-1.0, 0.0});
    cand.push_back({0.0, 1.0});
    cand.push_back({0.0, -1.0});
  } else {
    for (size_t i = 0; i < c.normals.size(); ++i)
      for (size_t j = i + 1; j < c.normals.size(); ++j) {
        Vec d = cross3(c.normals[i], c.normals[j]);
        if (norm(d) > kGeomTol) {
          cand.push_back(normalized(d));
          cand.push_back(-1.0 * normalized(d));
        }
      }
    for (int i = 0; i < 3; ++i) {
      Vec e(3, 0.0);
      e[i] = 1.0;
      cand.push_back(e);
      cand.push_back(-1.0 * e);
    }
  }
  std::vector<Vec> keep;
  for (const Vec& d : cand) {
    bool ok = true;
    for (const Vec& a : c.normals)
      if (dot(a, d) > kGeomTol) { ok = false; break; }
    if (ok) keep.push_back(d);
  }
  c.generators = dedupe_rays(keep);
}

std::vector<Vec> cone_span(const Cone& c) {
  return gram_schmidt(c.generators, kGeomTol);
}

std::vector<Vec> lineality_basis(const Cone& c) {
  std::vector<Vec> in_l;
  const Mat A = columns(c.generators, c.ambient_dim);
  for (const Vec& g : c.generators)
    if (in_nonneg_span(A, -1.0 * g, 1e-9)) in_l.push_back(g);
  return gram_schmidt(in_l, kGeomTol);
}

std::vector<Vec> pointed_generators(const Cone& c, const std::vector<Vec>& lineality) {
  std::vector<Vec> out;
  for (const Vec& g : c.generators) {
    Vec u = g;
    for (const Vec& e : lineality) u = u - dot(u, e) * e;
    if (norm(u) > kGeomTol) out.push_back(normalized(u));
  }
  return dedupe_rays(out);
}

std::vector<Vec> extreme_rays(const std::vector<Vec>& gens) {
  auto rays = dedupe_rays(gens);
  if (rays.size() <= 2) return rays;
  std::vector<Vec> out;
  const int n = static_cast<int>(rays[0].size());
  for (size_t i = 0; i < rays.size(); ++i) {
    std::vector<Vec> others;
    for (size_t j = 0; j < rays.size(); ++j)
      if (j != i) others.push_back(rays[j]);
    if (!in_nonneg_span(columns(others, n), rays[i], 1e-9)) out.push_back(rays[i]);
  }
  return out.empty() ? rays : out;
}

double spherical_polygon_area(const std::vector<Vec>& raw_rays) {
  auto rays = extreme_rays(raw_rays);
  const int m = static_cast<int>(rays.size());
  if (m < 3) throw numeric_error("spherical_polygon_area: fewer than 3 extreme rays");

  Vec u(rays[0].size(), 0.0);
  for (const Vec& r : rays) u = u + r;
  if (norm(u) < kGeomTol)
    throw numeric_error("spherical_polygon_area: no interior direction (cone not pointed?)");
  u = normalized(u);

  std::vector<Vec> helpers = {u};
  Vec e1;
  for (int i = 0; i < 3; ++i) {
    Vec e(3, 0.0);
    e[i] = 1.0;
    Vec w = e - dot(e, u) * u;
    if (norm(w) > 0.5) { e1 = normalized(w); break; }
  }
  if (e1.empty()) {
    Vec e(3, 0.0);
    e[2] = 1.0;
    e1 = normalized(e - dot(e, u) * u);
  }
  const Vec e2 = cross3(u, e1);

  std::vector<std::pair<double, Vec>> order;
  for (const Vec& r : rays)
    order.emplace_back(std::atan2(dot(r, e2), dot(r, e1)), r);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double angle_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const Vec& v = order[i].second;
    const Vec& prev = order[(i + m - 1) % m].second;
    const Vec& next = order[(i + 1) % m].second;
    Vec tp = prev - dot(prev, v) * v;
    Vec tn = next - dot(next, v) * v;
    if (norm(tp) < kGeomTol || norm(tn) < kGeomTol)
      throw numeric_error("spherical_polygon_area: degenerate vertex");
    angle_sum += std::acos(clamp1(dot(normalized(tp), normalized(tn))));
  }
  return angle_sum - (m - 2) * kPi;
}

double angle_fraction(const Cone& c, std::int64_t mc_samples, std::uint64_t seed) {
  if (c.generators.empty()) return 1.0;  // zero cone / resolved by callers

  const auto lin = lineality_basis(c);
  const auto pointed = pointed_generators(c, lin);
  const int m = linear_rank(pointed, kGeomTol);

  if (m == 0) return 1.0;  // C is a linear subspace
  if (m == 1) return 0.5;  // a single ray in the quotient
  if (m == 2) {
    double theta = 0.0;
    for (size_t i = 0; i < pointed.size(); ++i)
      for (size_t j = i + 1; j < pointed.size(); ++j)
        theta = std::max(theta, std::acos(clamp1(dot(pointed[i], pointed[j]))));
    return theta / (2.0 * kPi);
  }
  if (m == 3) {
    auto basis = gram_schmidt(pointed, kGeomTol);
    std::vector<Vec> coords;
    for (const Vec& g : pointed) coords.push_back(coords_in_basis(g, basis));
    return spherical_polygon_area(coords) / (4.0 * kPi);
  }

  // Monte Carlo in the span of the pointed part
  auto basis = gram_schmidt(pointed, kGeomTol);
  std::vector<Vec> coords;
  for (const Vec& g : pointed) coords.push_back(coords_in_basis(g, basis));
  const Mat A = columns(coords, m);
  Rng rng(derive_seed(seed, 0x616e676cull));
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < mc_samples; ++s) {
    Vec d = rng.gaussian_vec(m);
    const double nd = norm(d);
    if (nd < 1e-12) continue;
    d = (1.0 / nd) * d;
    if (in_nonneg_span(A, d, 1e-9)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(mc_samples);
}

Cone normal_cone(const Polytope& P, int face_index) {
  if (face_index < 0 || face_index >= static_cast<int>(P.faces.size()))
    throw validation_error("normal_cone: face not in lattice");
  const Face& F = P.faces[face_index];

  std::vector<Vec> gens;
  if (F.dim < P.dim) {
    const auto& halfspaces = P.relative_halfspaces();  // parallel to facet_faces
    bool found_any = false;
    for (size_t i = 0; i < P.facet_faces.size(); ++i) {
      const Face& facet = P.faces[P.facet_faces[i]];
      if (std::includes(facet.verts.begin(), facet.verts.end(), F.verts.begin(),
                        F.verts.end())) {
        gens.push_back(halfspaces[i].normal);
        found_any = true;
      }
    }
    if (!found_any)
      throw validation_error("normal_cone: face lies in no facet");
  }
  // orthogonal complement of the affine hull enters as +- pairs
  std::vector<Vec> all = P.hull_basis();
  for (int i = 0; i < P.ambient_dim; ++i) {
    Vec e(P.ambient_dim, 0.0);
    e[i] = 1.0;
    all.push_back(e);
  }
  auto full = gram_schmidt(all, kGeomTol);
  for (size_t i = P.hull_basis().size(); i < full.size(); ++i) {
    gens.push_back(full[i]);
    gens.push_back(-1.0 * full[i]);
  }
  return Cone::span_of(P.ambient_dim, gens);
}

ConeHalfspaces cone_halfspaces(const Cone& c) {
  ConeHalfspaces out;
  const int n = c.ambient_dim;
  const auto span = cone_span(c);
  const int s = static_cast<int>(span.size());
  if (s > 3)
    throw validation_error("cone_halfspaces: span dimension > 3 unsupported");

  // equalities pin the span
  std::vector<Vec> all = span;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    all.push_back(e);
  }
  auto full = gram_schmidt(all, kGeomTol);
  for (size_t i = span.size(); i < full.size(); ++i) out.equalities.push_back(full[i]);

  if (s == 0) return out;

  const auto lin = lineality_basis(c);
  const auto pointed = pointed_generators(c, lin);
  const int p = linear_rank(pointed, kGeomTol);
  if (p == 0) return out;  // linear subspace, no inequalities

  if (p == 1) {
    // halfspace boundary of the ray in the quotient: everything orthogonal to
    // lineality and to the ray is an equality; one inequality remains
    const Vec w = pointed[0];
    std::vector<Vec> lw = lin;
    lw.push_back(w);
    auto lwb = gram_schmidt(lw, kGeomTol);
    // directions of span not in lin+w become equalities
    for (const Vec& e : span) {
      Vec u = e;
      for (const Vec& b : lwb) u = u - dot(u, b) * b;
      if (norm(u) > kGeomTol) out.equalities.push_back(normalized(u));
    }
    out.inequalities.push_back(-1.0 * w);
    return out;
  }
  if (p == 2) {
    // wedge in the 2d quotient of the span by the lineality
    std::vector<Vec> qbasis;
    for (const Vec& e : span) {
      Vec u = e;
      for (const Vec& l : lin) u = u - dot(u, l) * l;
      for (const Vec& q : qbasis) u = u - dot(u, q) * q;
      if (norm(u) > kGeomTol) qbasis.push_back(normalized(u));
    }
    if (qbasis.size() != 2)
      throw numeric_error("cone_halfspaces: quotient basis failure");
    std::vector<Vec> g2;
    for (const Vec& g : pointed) g2.push_back(coords_in_basis(g, qbasis));
    // boundary pair: the two generators realizing the max angle
    size_t bi = 0, bj = 1;
    double best = -2.0;
    for (size_t i = 0; i < g2.size(); ++i)
      for (size_t j = i + 1; j < g2.size(); ++j) {
        const double ang = std::acos(clamp1(dot(g2[i], g2[j])));
        if (ang > best) { best = ang; bi = i; bj = j; }
      }
    Vec ra = g2[bi], rb = g2[bj];
    if (ra[0] * rb[1] - ra[1] * rb[0] < 0) std::swap(ra, rb);
    const Vec a1 = {ra[1], -ra[0]};   // cw side of ra
    const Vec a2 = {-rb[1], rb[0]};   // ccw side of rb
    out.inequalities.push_back(from_basis(a1, qbasis, n));
    out.inequalities.push_back(from_basis(a2, qbasis, n));
    return out;
  }
  // p == 3: salient part spans 3 dims; work in its coordinates
  auto basis = gram_schmidt(pointed, kGeomTol);
  std::vector<Vec> coords;
  for (const Vec& g : pointed) coords.push_back(coords_in_basis(g, basis));
  auto rays = extreme_rays(coords);
  if (rays.size() < 3) throw numeric_error("cone_halfspaces: expected >= 3 rays");
  Vec u(3, 0.0);
  for (const Vec& r : rays) u = u + r;
  u = normalized(u);
  Vec e1;
  for (int i = 0; i < 3; ++i) {
    Vec e(3, 0.0);
    e[i] = 1.0;
    Vec w = e - dot(e, u) * u;
    if (norm(w) > 0.5) { e1 = normalized(w); break; }
  }
  const Vec e2 = cross3(u, e1);
  std::vector<std::pair<double, Vec>> order;
  for (const Vec& r : rays)
    order.emplace_back(std::atan2(dot(r, e2), dot(r, e1)), r);
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const int m = static_cast<int>(order.size());
  for (int i = 0; i < m; ++i) {
    Vec a = cross3(order[i].second, order[(i + 1) % m].second);
    if (norm(a) < kGeomTol) continue;
    a = normalized(a);
    if (dot(a, u) > 0) a = -1.0 * a;
    out.inequalities.push_back(from_basis(a, basis, n));
  }
  return out;
}

Cone cone_intersect(const Cone& a, const Cone& b) {
  const int n = a.ambient_dim;
  if (n != b.ambient_dim) throw validation_error("cone_intersect: dimension mismatch");
  if (n > 3) throw validation_error("cone_intersect: ambient dimension > 3 unsupported");

  const auto ha = cone_halfspaces(a);
  const auto hb = cone_halfspaces(b);
  std::vector<Vec> eq = ha.equalities, ineq = ha.inequalities;
  eq.insert(eq.end(), hb.equalities.begin(), hb.equalities.end());
  ineq.insert(ineq.end(), hb.inequalities.begin(), hb.inequalities.end());

  // equalities contribute both signs; inequalities one
  std::vector<Vec> cons;
  for (const Vec& q : eq) { cons.push_back(q); cons.push_back(-1.0 * q); }
  cons.insert(cons.end(), ineq.begin(), ineq.end());

  std::vector<Vec> cand;
  // null space of all constraints (lineality of the intersection)
  {
    std::vector<Vec> basisc = gram_schmidt(cons, kGeomTol);
    std::vector<Vec> allv = basisc;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0.0);
      e[i] = 1.0;
      allv.push_back(e);
    }
    auto full = gram_schmidt(allv, kGeomTol);
    for (size_t i = basisc.size(); i < full.size(); ++i) {
      cand.push_back(full[i]);
      cand.push_back(-1.0 * full[i]);
    }
  }
  if (n == 3) {
    for (size_t i = 0; i < cons.size(); ++i)
      for (size_t j = i + 1; j < cons.size(); ++j) {
        Vec d = cross3(cons[i], cons[j]);
        if (norm(d) > kGeomTol) {
          cand.push_back(normalized(d));
          cand.push_back(-1.0 * normalized(d));
        }
      }
  } else if (n == 2) {
    for (const Vec& q : cons) {
      cand.push_back({-q[1], q[0]});
      cand.push_back({q[1], -q[0]});
    }
  } else if (n == 1) {
    cand.push_back({1.0});
    cand.push_back({-1.0});
  }
  for (const Vec& g : a.generators) if (norm(g) > kGeomTol) cand.push_back(normalized(g));
  for (const Vec& g : b.generators) if (norm(g) > kGeomTol) cand.push_back(normalized(g));

  std::vector<Vec> keep;
  for (const Vec& d : cand) {
    bool ok = true;
    for (const Vec& q : eq)
      if (std::fabs(dot(q, d)) > 1e-9) { ok = false; break; }
    if (!ok) continue;
    for (const Vec& q : ineq)
      if (dot(q, d) > 1e-9) { ok = false; break; }
    if (ok && a.contains(d) && b.contains(d)) keep.push_back(d);
  }
  return Cone::span_of(n, dedupe_rays(keep));
}

std::vector<ConeFace> cone_face_lattice(const Cone& c) {
  const int n = c.ambient_dim;
  const auto hs = cone_halfspaces(c);
  // canonical generating set: generators plus +- lineality
  auto gens = dedupe_rays(c.generators);
  const auto lin = lineality_basis(c);
  for (const Vec& l : lin) {
    gens.push_back(l);
    gens.push_back(-1.0 * l);
  }
  gens = dedupe_rays(gens);

  const int k = static_cast<int>(hs.inequalities.size());
  if (k > 16) throw validation_error("cone_face_lattice: too many facets");
  std::set<std::vector<int>> seen;
  std::vector<ConeFace> out;

  // subsets of active inequality constraints; faces are identified by the
  // generators they keep, active normals recomputed in full per face
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> active_gens;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      bool act = true;
      for (int ci = 0; ci < k; ++ci)
        if (mask >> ci & 1)
          if (std::fabs(dot(hs.inequalities[ci], gens[gi])) > 1e-9) {
            act = false;
            break;
          }
      if (act) active_gens.push_back(static_cast<int>(gi));
    }
    if (seen.count(active_gens)) continue;
    seen.insert(active_gens);
    std::vector<Vec> face_gens;
    for (int gi : active_gens) face_gens.push_back(gens[gi]);
    ConeFace f;
    f.cone = Cone::span_of(n, face_gens);
    f.dim = linear_rank(face_gens, kGeomTol);
    for (int ci = 0; ci < k; ++ci) {
      bool active_on_face = true;
      for (const Vec& g : face_gens)
        if (std::fabs(dot(hs.inequalities[ci], g)) > 1e-9) {
          active_on_face = false;
          break;
        }
      if (active_on_face) f.active_normals.push_back(hs.inequalities[ci]);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const ConeFace& a, const ConeFace& b) { return a.dim > b.dim; });
  return out;
}

}  // namespace lkz
