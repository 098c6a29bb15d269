#include "lkzeta/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

namespace lkz {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

double det(Mat A) {
  const int n = A.rows;
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::fabs(A(i, k)) > std::fabs(A(piv, k))) piv = i;
    if (std::fabs(A(piv, k)) < 1e-300) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      d = -d;
    }
    d *= A(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return d;
}

// k-volume of a simplex with k+1 vertices in R^n via the Gram determinant.
double simplex_volume(const std::vector<Vec>& verts) {
  const int k = static_cast<int>(verts.size()) - 1;
  if (k == 0) return 1.0;
  Mat G(k, k);
  std::vector<Vec> e;
  for (int i = 1; i <= k; ++i) e.push_back(verts[i] - verts[0]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) G(i, j) = dot(e[i], e[j]);
  const double g = det(G);
  if (g <= 0.0) return 0.0;
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return std::sqrt(g) / fact;
}

}  // namespace

const Face& Polytope::top() const {
  const auto it = by_dim.find(dim);
  return faces[it->second.front()];
}

std::vector<int> Polytope::faces_of_dim(int k) const {
  const auto it = by_dim.find(k);
  if (it == by_dim.end()) return {};
  return it->second;
}

int Polytope::find_face(const std::vector<int>& verts) const {
  std::vector<int> key = verts;
  std::sort(key.begin(), key.end());
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].verts == key) return static_cast<int>(i);
  return -1;
}

Vec Polytope::centroid() const {
  Vec c(ambient_dim, 0.0);
  for (const Vec& v : vertices) c = c + v;
  return (1.0 / vertices.size()) * c;
}

std::pair<Vec, Vec> Polytope::bounding_box() const {
  Vec lo = vertices[0], hi = vertices[0];
  for (const Vec& v : vertices)
    for (int i = 0; i < ambient_dim; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  return {lo, hi};
}

void Polytope::ensure_geometry() const {
  if (geom_ready_) return;
  std::vector<Vec> diffs;
  for (size_t i = 1; i < vertices.size(); ++i) diffs.push_back(vertices[i] - vertices[0]);
  hull_basis_ = gram_schmidt(diffs, kGeomTol);

  rel_halfspaces_.clear();
  const Vec c = centroid();
  for (int fi : facet_faces) {
    const Face& F = faces[fi];
    // normal: in the hull direction space, orthogonal to the facet
    std::vector<Vec> span_vecs;
    for (size_t i = 1; i < F.verts.size(); ++i)
      span_vecs.push_back(vertices[F.verts[i]] - vertices[F.verts[0]]);
    auto fb = gram_schmidt(span_vecs, kGeomTol);
    Vec n0(ambient_dim, 0.0);
    for (const Vec& h : hull_basis_) {
      Vec u = h;
      for (const Vec& e : fb) u = u - dot(u, e) * e;
      if (norm(u) > kGeomTol) { n0 = normalized(u); break; }
    }
    if (norm(n0) == 0.0)
      throw validation_error("polytope: facet spans the whole hull");
    const Vec& v0 = vertices[F.verts[0]];
    if (dot(n0, c - v0) > 0) n0 = -1.0 * n0;
    rel_halfspaces_.push_back({n0, dot(n0, v0)});
  }
  geom_ready_ = true;
}

const std::vector<Halfspace>& Polytope::relative_halfspaces() const {
  ensure_geometry();
  return rel_halfspaces_;
}

const std::vector<Vec>& Polytope::hull_basis() const {
  ensure_geometry();
  return hull_basis_;
}

std::vector<Halfspace> Polytope::ambient_halfspaces() const {
  ensure_geometry();
  std::vector<Halfspace> hs = rel_halfspaces_;
  // pin the affine hull with +- constraint pairs
  std::vector<Vec> all = hull_basis_;
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim, 0.0);
    e[i] = 1.0;
    all.push_back(e);
  }
  auto full = gram_schmidt(all, kGeomTol);
  for (size_t i = hull_basis_.size(); i < full.size(); ++i) {
    const double b = dot(full[i], vertices[0]);
    hs.push_back({full[i], b});
    hs.push_back({-1.0 * full[i], -b});
  }
  return hs;
}

double Polytope::face_volume(int face_index) const {
  const Face& F = faces[face_index];
  if (F.dim == 0) return 1.0;
  if (F.dim == 1) {
    if (F.verts.size() != 2)
      throw validation_error("polytope: 1-face without exactly two vertices");
    return norm(vertices[F.verts[1]] - vertices[F.verts[0]]);
  }
  // fan triangulation from the centroid, recursing through subfaces
  Vec c(ambient_dim, 0.0);
  for (int vi : F.verts) c = c + vertices[vi];
  c = (1.0 / F.verts.size()) * c;

  double vol = 0.0;
  for (int gi : faces_of_dim(F.dim - 1)) {
    const Face& G = faces[gi];
    if (!std::includes(F.verts.begin(), F.verts.end(), G.verts.begin(), G.verts.end()))
      continue;
    if (G.dim == 1) {
      vol += simplex_volume({c, vertices[G.verts[0]], vertices[G.verts[1]]});
    } else {
      // recurse on the subface by triangulating it the same way
      Vec cg(ambient_dim, 0.0);
      for (int vi : G.verts) cg = cg + vertices[vi];
      cg = (1.0 / G.verts.size()) * cg;
      // collect simplices of G as (cg, subsub...) recursively through a stack
      struct Item { int face; std::vector<Vec> apexes; };
      std::vector<Item> stack{{gi, {c}}};
      while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const Face& H = faces[it.face];
        if (H.dim == 1) {
          std::vector<Vec> simplex = it.apexes;
          simplex.push_back(vertices[H.verts[0]]);
          simplex.push_back(vertices[H.verts[1]]);
          vol += simplex_volume(simplex);
          continue;
        }
        Vec ch(ambient_dim, 0.0);
        for (int vi : H.verts) ch = ch + vertices[vi];
        ch = (1.0 / H.verts.size()) * ch;
        auto apex = it.apexes;
        apex.push_back(ch);
        for (int hj : faces_of_dim(H.dim - 1)) {
          const Face& HJ = faces[hj];
          if (std::includes(H.verts.begin(), H.verts.end(), HJ.verts.begin(), HJ.verts.end()))
            stack.push_back({hj, apex});
        }
      }
    }
  }
  return vol;
}

Polytope build_face_lattice(int ambient_dim, std::vector<Vec> vertices,
                            std::vector<std::vector<int>> facet_vertex_sets) {
  if (vertices.empty()) throw validation_error("polytope: no vertices");
  if (ambient_dim < 1 || ambient_dim > 6)
    throw validation_error("polytope: ambient dimension must be in [1, 6]");
  for (const Vec& v : vertices)
    if (static_cast<int>(v.size()) != ambient_dim)
      throw validation_error("polytope: vertex dimension mismatch");

  Polytope P;
  P.ambient_dim = ambient_dim;
  P.vertices = std::move(vertices);
  P.dim = affine_dim(P.vertices, kGeomTol);

  const int nv = static_cast<int>(P.vertices.size());
  for (auto& fs : facet_vertex_sets) {
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    for (int vi : fs)
      if (vi < 0 || vi >= nv)
        throw validation_error("polytope: facet vertex index out of range");
  }

  if (P.dim > 0 && facet_vertex_sets.empty())
    throw validation_error("polytope: positive-dimensional polytope needs facets");

  // validate facets: correct dimension and supporting
  for (const auto& fs : facet_vertex_sets) {
    std::vector<Vec> pts;
    for (int vi : fs) pts.push_back(P.vertices[vi]);
    if (affine_dim(pts, kGeomTol) != P.dim - 1)
      throw validation_error("polytope: facet affine dimension != dim-1");
    // supporting within the hull: all other vertices strictly on one side
    std::vector<Vec> difs;
    for (size_t i = 1; i < P.vertices.size(); ++i)
      difs.push_back(P.vertices[i] - P.vertices[0]);
    auto hull = gram_schmidt(difs, kGeomTol);
    std::vector<Vec> fdifs;
    for (size_t i = 1; i < pts.size(); ++i) fdifs.push_back(pts[i] - pts[0]);
    auto fb = gram_schmidt(fdifs, kGeomTol);
    Vec n0;
    for (const Vec& h : hull) {
      Vec u = h;
      for (const Vec& e : fb) u = u - dot(u, e) * e;
      if (norm(u) > kGeomTol) { n0 = normalized(u); break; }
    }
    if (n0.empty()) throw validation_error("polytope: degenerate facet data");
    double lo = 0.0, hi = 0.0;
    for (int vi = 0; vi < nv; ++vi) {
      const double s = dot(n0, P.vertices[vi] - pts[0]);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    if (lo < -kGeomTol && hi > kGeomTol)
      throw validation_error("polytope: claimed facet does not support the hull");
  }

  // closure of facet vertex sets under intersection
  std::set<std::vector<int>> closed(facet_vertex_sets.begin(), facet_vertex_sets.end());
  std::vector<std::vector<int>> work(closed.begin(), closed.end());
  while (!work.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : work)
      for (const auto& b : closed) {
        auto c = intersect_sorted(a, b);
        if (!c.empty() && !closed.count(c)) {
          closed.insert(c);
          next.push_back(c);
        }
      }
    work.swap(next);
  }

  std::vector<int> all(nv);
  std::iota(all.begin(), all.end(), 0);

  for (const auto& vs : closed) {
    if (static_cast<int>(vs.size()) == nv) continue;  // top handled below
    std::vector<Vec> pts;
    for (int vi : vs) pts.push_back(P.vertices[vi]);
    P.faces.push_back({vs, affine_dim(pts, kGeomTol)});
  }
  P.faces.push_back({all, P.dim});

  std::sort(P.faces.begin(), P.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });
  for (size_t i = 0; i < P.faces.size(); ++i)
    P.by_dim[P.faces[i].dim].push_back(static_cast<int>(i));

  for (const auto& fs : facet_vertex_sets) {
    const int idx = P.find_face(fs);
    if (idx < 0) throw validation_error("polytope: internal facet lookup failure");
    P.facet_faces.push_back(idx);
  }
  std::sort(P.facet_faces.begin(), P.facet_faces.end());
  P.facet_faces.erase(std::unique(P.facet_faces.begin(), P.facet_faces.end()),
                      P.facet_faces.end());

  // every vertex of a positive-dimensional polytope must lie in some facet
  if (P.dim > 0) {
    std::vector<char> seen(nv, 0);
    for (const auto& fs : facet_vertex_sets)
      for (int vi : fs) seen[vi] = 1;
    for (int vi = 0; vi < nv; ++vi)
      if (!seen[vi])
        throw validation_error("polytope: vertex " + std::to_string(vi) +
                               " lies in no facet");
  }

  // Euler relation over the whole lattice
  long euler = 0;
  for (const auto& [d, idxs] : P.by_dim)
    euler += (d % 2 == 0 ? 1 : -1) * static_cast<long>(idxs.size());
  if (euler != 1)
    throw validation_error("polytope: face lattice fails the Euler relation");

  return P;
}

Polytope build_face_lattice(int ambient_dim, std::vector<Vec> vertices,
                            const std::vector<Halfspace>& facets) {
  std::vector<std::vector<int>> sets;
  for (const auto& hs : facets) {
    std::vector<int> fs;
    for (size_t i = 0; i < vertices.size(); ++i) {
      const double s = dot(hs.normal, vertices[i]) - hs.offset;
      if (s > kGeomTol)
        throw validation_error("polytope: vertex violates a claimed facet halfspace");
      if (std::fabs(s) <= kGeomTol) fs.push_back(static_cast<int>(i));
    }
    if (fs.empty())
      throw validation_error("polytope: halfspace facet touches no vertex");
    sets.push_back(fs);
  }
  return build_face_lattice(ambient_dim, std::move(vertices), std::move(sets));
}

Polytope make_box(const Vec& lo, const Vec& hi) {
  const int n = static_cast<int>(lo.size());
  const int nv = 1 << n;
  std::vector<Vec> verts(nv, Vec(n));
  for (int m = 0; m < nv; ++m)
    for (int i = 0; i < n; ++i) verts[m][i] = (m >> i & 1) ? hi[i] : lo[i];
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i) {
    if (hi[i] - lo[i] <= kGeomTol)
      throw validation_error("make_box: degenerate side; use make_segment/make_point");
    for (int side = 0; side < 2; ++side) {
      std::vector<int> fs;
      for (int m = 0; m < nv; ++m)
        if ((m >> i & 1) == side) fs.push_back(m);
      facets.push_back(fs);
    }
  }
  return build_face_lattice(n, verts, facets);
}

Polytope make_simplex(const std::vector<Vec>& verts) {
  const int n = static_cast<int>(verts[0].size());
  const int k = static_cast<int>(verts.size());
  std::vector<std::vector<int>> facets;
  if (k >= 2) {
    for (int drop = 0; drop < k; ++drop) {
      std::vector<int> fs;
      for (int i = 0; i < k; ++i)
        if (i != drop) fs.push_back(i);
      facets.push_back(fs);
    }
  }
  return build_face_lattice(n, verts, facets);
}

Polytope make_point(const Vec& p) {
  return build_face_lattice(static_cast<int>(p.size()), {p}, std::vector<std::vector<int>>{});
}

Polytope make_segment(const Vec& a, const Vec& b) {
  return build_face_lattice(static_cast<int>(a.size()), {a, b},
                            std::vector<std::vector<int>>{{0}, {1}});
}

Polytope transform(const Polytope& P, const Mat& R, const Vec& t) {
  std::vector<Vec> verts;
  verts.reserve(P.vertices.size());
  for (const Vec& v : P.vertices) {
    Vec w(P.ambient_dim, 0.0);
    for (int i = 0; i < P.ambient_dim; ++i)
      for (int j = 0; j < P.ambient_dim; ++j) w[i] += R(i, j) * v[j];
    verts.push_back(w + t);
  }
  std::vector<std::vector<int>> facets;
  for (int fi : P.facet_faces) facets.push_back(P.faces[fi].verts);
  return build_face_lattice(P.ambient_dim, verts, facets);
}

Polytope scale(const Polytope& P, double s) {
  Mat R(P.ambient_dim, P.ambient_dim);
  for (int i = 0; i < P.ambient_dim; ++i) R(i, i) = s;
  return transform(P, R, Vec(P.ambient_dim, 0.0));
}

}  // namespace lkz
