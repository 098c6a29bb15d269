#include "lkzeta/conic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

namespace lkz {

namespace {

double binom(int a, int b) {
  if (b < 0 || b > a) return 0.0;
  double r = 1.0;
  for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
  return r;
}

// Lambda_i of the unit l-ball: C(l,i) alpha_l / alpha_{l-i}.
LKVector ball_lk(int l, int ambient_dim) {
  LKVector lk(ambient_dim);
  for (int i = 0; i <= l; ++i)
    lk[i] = binom(l, i) * unit_ball_volume(l) / unit_ball_volume(l - i);
  return lk;
}

double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }

// wedge opening angle of a pointed 2-dimensional cone
double wedge_angle(const std::vector<Vec>& pointed) {
  double theta = 0.0;
  for (size_t i = 0; i < pointed.size(); ++i)
    for (size_t j = i + 1; j < pointed.size(); ++j)
      theta = std::max(theta, std::acos(clamp1(dot(pointed[i], pointed[j]))));
  return theta;
}

struct Salient3Data {
  std::vector<Vec> rays;            // cyclically ordered
  std::vector<double> facet_angle;  // wedge angle of each facet (consecutive rays)
  std::vector<double> dihedral;     // interior dihedral angle along each ray
  double omega = 0.0;               // spherical polygon area
};

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Salient3Data salient3_data(const std::vector<Vec>& gens3) {
  Salient3Data out;
  auto rays = extreme_rays(gens3);
  if (rays.size() < 3)
    throw numeric_error("salient3_data: fewer than 3 extreme rays");
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
  for (int i = 0; i < m; ++i) out.rays.push_back(order[i].second);
  for (int i = 0; i < m; ++i) {
    const Vec& v = out.rays[i];
    const Vec& prev = out.rays[(i + m - 1) % m];
    const Vec& next = out.rays[(i + 1) % m];
    Vec tp = prev - dot(prev, v) * v;
    Vec tn = next - dot(next, v) * v;
    out.dihedral.push_back(std::acos(clamp1(dot(normalized(tp), normalized(tn)))));
    out.facet_angle.push_back(std::acos(clamp1(dot(v, next))));
  }
  double s = 0.0;
  for (double d : out.dihedral) s += d;
  out.omega = s - (m - 2) * kPi;
  return out;
}

}  // namespace

ConicGerm make_germ(int n, std::vector<Cone> cones) {
  ConicGerm g;
  g.ambient_dim = n;
  for (Cone& c : cones) {
    if (c.ambient_dim != n)
      throw validation_error("conic germ: cone ambient dimension mismatch");
    g.pieces.push_back({std::move(c), 1});
  }
  return g;
}

std::vector<SignedConeTerm> signed_cone_terms(const ConicGerm& germ) {
  const int k = static_cast<int>(germ.pieces.size());
  if (k == 0) return {};
  if (k > 6)
    throw validation_error("conic germ: more than 6 pieces unsupported");
  int max_mult = 0;
  for (const auto& p : germ.pieces) {
    if (p.mult < 1)
      throw validation_error("conic germ: multiplicities must be >= 1");
    max_mult += p.mult;
  }
  if (k > 1 && germ.ambient_dim > 3)
    throw validation_error(
        "conic germ: multiple pieces need ambient dimension <= 3");

  // cache intersection cones per subset mask
  std::map<int, Cone> subset_cone;
  auto cone_of = [&](int mask) -> const Cone& {
    auto it = subset_cone.find(mask);
    if (it != subset_cone.end()) return it->second;
    Cone c;
    bool first = true;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) {
        if (first) {
          c = germ.pieces[i].cone;
          first = false;
        } else {
          c = cone_intersect(c, germ.pieces[i].cone);
        }
      }
    return subset_cone.emplace(mask, std::move(c)).first->second;
  };

  std::map<int, int> coeff_by_mask;  // union-mask -> signed coefficient

  // Multiplicities act as stacked layers: level t is the union of the pieces
  // with mult >= t, evaluated by inclusion-exclusion over its nerve. With all
  // multiplicities 1 this is the plain set union.
  int max_layer = 0;
  for (const auto& p : germ.pieces) max_layer = std::max(max_layer, p.mult);
  for (int t = 1; t <= max_layer; ++t) {
    std::vector<int> qual;
    for (int i = 0; i < k; ++i)
      if (germ.pieces[i].mult >= t) qual.push_back(i);
    const int q = static_cast<int>(qual.size());
    for (int sub = 1; sub < (1 << q); ++sub) {
      int united = 0, bits = 0;
      for (int j = 0; j < q; ++j)
        if (sub >> j & 1) {
          united |= 1 << qual[j];
          ++bits;
        }
      coeff_by_mask[united] += (bits % 2 == 1) ? 1 : -1;
    }
  }
  (void)max_mult;

  std::vector<SignedConeTerm> out;
  for (const auto& [mask, coeff] : coeff_by_mask) {
    if (coeff == 0) continue;
    out.push_back({cone_of(mask), coeff});
  }
  return out;
}

LKVector truncated_cone_lk(const Cone& c, int ambient_dim) {
  const int n = ambient_dim;
  if (c.generators.empty()) {
    LKVector lk(n);
    lk[0] = 1.0;  // the origin
    return lk;
  }
  const auto span = cone_span(c);
  const int s = static_cast<int>(span.size());
  const auto lin = lineality_basis(c);
  const int l = static_cast<int>(lin.size());
  const auto pointed = pointed_generators(c, lin);
  const int p = s - l;

  if (p == 0) return ball_lk(l, n);  // linear subspace: unit l-ball

  if (s > 3)
    throw validation_error("truncated_cone_lk: cone span > 3 unsupported");

  LKVector lk(n);
  lk[0] = 1.0;
  if (p == 1) {
    if (l == 0) {
      lk[1] = 1.0;  // unit radius segment
    } else if (l == 1) {
      lk[1] = 1.0 + kPi / 2.0;  // half-disc
      lk[2] = kPi / 2.0;
    } else {  // l == 2: half-ball
      lk[1] = 2.0 + kPi / 2.0;
      lk[2] = 1.5 * kPi;
      lk[3] = 2.0 * kPi / 3.0;
    }
    return lk;
  }
  if (p == 2) {
    std::vector<Vec> q2;
    auto qb = gram_schmidt(pointed, kGeomTol);
    for (const Vec& g : pointed) q2.push_back(coords_in_basis(g, qb));
    const double theta = wedge_angle(q2);
    if (l == 0) {
      lk[1] = 1.0 + theta / 2.0;
      lk[2] = theta / 2.0;
    } else {  // wedge x line
      lk[1] = (theta + kPi + kPi * kPi / 2.0) / kPi;
      lk[2] = (kPi + 2.0 * theta) / 2.0;
      lk[3] = 2.0 * theta / 3.0;
    }
    return lk;
  }
  // p == 3, l == 0: salient three-dimensional cone
  auto basis = gram_schmidt(pointed, kGeomTol);
  std::vector<Vec> coords;
  for (const Vec& g : pointed) coords.push_back(coords_in_basis(g, basis));
  const auto data = salient3_data(coords);
  double sum_facet = 0.0, sum_edge = 0.0;
  for (double a : data.facet_angle) sum_facet += a;
  for (double d : data.dihedral) sum_edge += kPi - d;
  lk[1] = (data.omega + kPi / 4.0 * sum_facet + 0.5 * sum_edge) / kPi;
  lk[2] = (sum_facet / 2.0 + data.omega) / 2.0;
  lk[3] = data.omega / 3.0;
  return lk;
}

std::vector<double> local_lk(const ConicGerm& germ) {
  const int n = germ.ambient_dim;
  std::vector<double> out(n + 1, 0.0);
  if (germ.empty()) return out;
  for (const auto& term : signed_cone_terms(germ)) {
    const LKVector lk = truncated_cone_lk(term.cone, n);
    for (int i = 0; i <= n; ++i) out[i] += term.coeff * lk[i];
  }
  for (int i = 0; i <= n; ++i) out[i] /= unit_ball_volume(i);
  return out;
}

LKVector lk_of_truncation(const ConicGerm& germ, double rho) {
  if (rho <= 0) throw validation_error("lk_of_truncation: rho > 0 required");
  const int n = germ.ambient_dim;
  LKVector lk(n);
  for (const auto& term : signed_cone_terms(germ)) {
    const LKVector t = truncated_cone_lk(term.cone, n);
    for (int i = 0; i <= n; ++i) lk[i] += term.coeff * t[i] * std::pow(rho, i);
  }
  return lk;
}

int germ_dim(const ConicGerm& germ) {
  int d = 0;
  for (const auto& p : germ.pieces)
    d = std::max(d, linear_rank(p.cone.generators, kGeomTol));
  return d;
}

double density(const ConicGerm& germ) {
  if (germ.empty()) return 0.0;
  int d = -1;
  for (const auto& p : germ.pieces) {
    const int pd = linear_rank(p.cone.generators, kGeomTol);
    if (d < 0) d = pd;
    if (pd != d)
      throw validation_error("density: germ of mixed dimension");
  }
  double theta = 0.0;
  for (const auto& term : signed_cone_terms(germ)) {
    const int s = linear_rank(term.cone.generators, kGeomTol);
    if (s == d) theta += term.coeff * angle_fraction(term.cone);
  }
  return theta;
}

}  // namespace lkz
