#include "doctest.h"

#include <cmath>
#include <set>

#include "lkzeta/cone.hpp"
#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"
#include "lkzeta/grassmann.hpp"
#include "lkzeta/linalg.hpp"
#include "lkzeta/polytope.hpp"
#include "lkzeta/rng.hpp"

using namespace lkz;

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(0) == doctest::Approx(1.0));
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
  CHECK(unit_ball_volume(2) == doctest::Approx(kPi));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0));
}

TEST_CASE("crofton constant") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(crofton_constant(n, n) == doctest::Approx(1.0));
    CHECK(crofton_constant(0, n) == doctest::Approx(1.0));
  }
  // beta(1,2) = Gamma(1)Gamma(1) / (Gamma(3/2)Gamma(1/2)) = 2/pi
  CHECK(crofton_constant(1, 2) == doctest::Approx(2.0 / kPi));
  // symmetry beta(d,n) = beta(n-d,n)
  for (int n = 2; n <= 6; ++n)
    for (int d = 0; d <= n; ++d)
      CHECK(crofton_constant(d, n) == doctest::Approx(crofton_constant(n - d, n)));
  CHECK_THROWS_AS(crofton_constant(3, 2), validation_error);
}

TEST_CASE("square face lattice") {
  const Polytope P = make_box({0, 0}, {1, 1});
  CHECK(P.dim == 2);
  CHECK(P.faces_of_dim(0).size() == 4);
  CHECK(P.faces_of_dim(1).size() == 4);
  CHECK(P.faces_of_dim(2).size() == 1);
}

TEST_CASE("simplex lattice counts C(n+1,k+1)") {
  auto binom = [](int a, int b) {
    long r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  for (int n = 2; n <= 4; ++n) {
    std::vector<Vec> verts(n + 1, Vec(n, 0.0));
    for (int i = 0; i < n; ++i) verts[i + 1][i] = 1.0;
    const Polytope S = make_simplex(verts);
    CHECK(S.dim == n);
    for (int k = 0; k <= n; ++k)
      CHECK(static_cast<long>(S.faces_of_dim(k).size()) == binom(n + 1, k + 1));
  }
}

TEST_CASE("single point lattice") {
  const Polytope P = make_point({0.3, -0.2, 0.5});
  CHECK(P.dim == 0);
  CHECK(P.faces.size() == 1);
  CHECK(P.faces_of_dim(0).size() == 1);
}

TEST_CASE("euler relation across shapes") {
  auto euler = [](const Polytope& P) {
    long e = 0;
    for (const auto& [d, idxs] : P.by_dim)
      e += (d % 2 == 0 ? 1 : -1) * static_cast<long>(idxs.size());
    return e;
  };
  CHECK(euler(make_box({0, 0, 0}, {1, 2, 3})) == 1);
  CHECK(euler(make_segment({0, 0}, {1, 1})) == 1);
  CHECK(euler(make_point({1, 1})) == 1);
}

TEST_CASE("inconsistent facet data is rejected") {
  // claimed facet cuts through the square's interior
  std::vector<Vec> verts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<std::vector<int>> facets = {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
  CHECK_THROWS_AS(build_face_lattice(2, verts, facets), validation_error);
}

TEST_CASE("halfspace facet input") {
  std::vector<Vec> verts = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<Halfspace> hs = {
      {{0, -1}, 0}, {{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 0}};
  const Polytope P = build_face_lattice(2, verts, hs);
  CHECK(P.faces_of_dim(1).size() == 4);

  std::vector<Halfspace> bad = {{{0, -1}, 0.5}, {{1, 0}, 1}, {{0, 1}, 1}, {{-1, 0}, 0}};
  CHECK_THROWS_AS(build_face_lattice(2, verts, bad), validation_error);
}

TEST_CASE("face volumes") {
  const Polytope B = make_box({0, 0, 0}, {2, 3, 4});
  const int top = B.faces_of_dim(3)[0];
  CHECK(B.face_volume(top) == doctest::Approx(24.0));
  double area = 0.0;
  for (int fi : B.faces_of_dim(2)) area += B.face_volume(fi);
  CHECK(area == doctest::Approx(2 * (2 * 3 + 3 * 4 + 2 * 4)));
  double len = 0.0;
  for (int fi : B.faces_of_dim(1)) len += B.face_volume(fi);
  CHECK(len == doctest::Approx(4 * (2 + 3 + 4)));
}

TEST_CASE("normal cone of square faces") {
  const Polytope P = make_box({0, 0}, {1, 1});
  const int top = P.faces_of_dim(2)[0];
  CHECK(normal_cone(P, top).generators.empty());

  const int bottom = P.find_face({0, 1});  // edge y = 0 (vertex order of make_box)
  REQUIRE(bottom >= 0);
  const Cone C = normal_cone(P, bottom);
  REQUIRE(C.generators.size() == 1);
  CHECK(C.generators[0][0] == doctest::Approx(0.0));
  CHECK(C.generators[0][1] == doctest::Approx(-1.0));

  const int corner = P.find_face({0});  // vertex (0,0)
  REQUIRE(corner >= 0);
  const Cone V = normal_cone(P, corner);
  CHECK(V.contains({-1.0, -1.0}));
  CHECK(V.contains({-1.0, 0.0}));
  CHECK_FALSE(V.contains({1.0, 0.5}));
  CHECK_FALSE(V.contains({0.5, 0.5}));
  // dimension n - i for an i-face of a full-dimensional polytope
  CHECK(linear_rank(V.generators) == 2);
  for (int fi : P.faces_of_dim(1))
    CHECK(linear_rank(normal_cone(P, fi).generators) == 1);
}

TEST_CASE("cone membership and lineality") {
  // half-plane {y >= 0} as a cone: lineality = x-axis
  Cone H = Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK(H.contains({3, 0.5}));
  CHECK(H.contains({-2, 0}));
  CHECK_FALSE(H.contains({0, -1}));
  const auto lin = lineality_basis(H);
  REQUIRE(lin.size() == 1);
  CHECK(std::fabs(lin[0][0]) == doctest::Approx(1.0));
  // scaling invariance of membership
  CHECK(H.contains({300, 50}));
}

TEST_CASE("angle fractions, exact paths") {
  // ray in R^2
  CHECK(angle_fraction(Cone::span_of(2, {{1, 0}})) == doctest::Approx(0.5));
  // quarter plane
  CHECK(angle_fraction(Cone::span_of(2, {{1, 0}, {0, 1}})) == doctest::Approx(0.25));
  // half-plane (lineality factors out, quotient is a ray)
  CHECK(angle_fraction(Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}})) ==
        doctest::Approx(0.5));
  // full plane
  CHECK(angle_fraction(Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})) ==
        doctest::Approx(1.0));
  // octant in R^3 via the spherical polygon excess
  CHECK(angle_fraction(Cone::span_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) ==
        doctest::Approx(0.125));
  // half-space in R^3: wedge x line handled through the quotient
  CHECK(angle_fraction(Cone::span_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                         {0, -1, 0}, {0, 0, 1}})) ==
        doctest::Approx(0.5));
}

TEST_CASE("angle fraction MC agrees with exact in R^4 orthant") {
  std::vector<Vec> gens;
  for (int i = 0; i < 4; ++i) {
    Vec e(4, 0.0);
    e[i] = 1.0;
    gens.push_back(e);
  }
  const double f = angle_fraction(Cone::span_of(4, gens), 200000, 7);
  CHECK(std::fabs(f - 0.0625) < 0.003);  // ~5 sigma of the binomial
}

TEST_CASE("grassmann frames are orthonormal") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.bits() % 5);
    const int k = 1 + static_cast<int>(rng.bits() % n);
    auto frame = sample_frame(k, n, rng);
    REQUIRE(static_cast<int>(frame.size()) == k);
    CHECK(frame_orthonormal(frame, 1e-10));
  }
  CHECK(sample_frame(0, 3, rng).empty());
  auto full = sample_frame(3, 3, rng);
  CHECK(linear_rank(full) == 3);
}

TEST_CASE("grassmann line angle is uniform (chi-square, 16 bins)") {
  Rng rng(2024);
  const int kBins = 16;
  const int n_samples = 100000;
  std::vector<int> counts(kBins, 0);
  for (int s = 0; s < n_samples; ++s) {
    auto fr = sample_frame(1, 2, rng);
    double a = std::atan2(fr[0][1], fr[0][0]);
    if (a < 0) a += kPi;
    if (a >= kPi) a -= kPi;
    ++counts[static_cast<int>(a / kPi * kBins)];
  }
  const double expected = static_cast<double>(n_samples) / kBins;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // chi-square 15 dof, upper 0.001 quantile
  CHECK(chi2 < 37.697);
}

TEST_CASE("wolfe distance to hull") {
  std::vector<Vec> tri = {{0, 0}, {1, 0}, {0, 1}};
  CHECK(dist_to_hull(tri, {0.2, 0.2}) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(dist_to_hull(tri, {2, 0}) == doctest::Approx(1.0));
  CHECK(dist_to_hull(tri, {1, 1}) == doctest::Approx(std::sqrt(0.5)));
  CHECK(dist_to_hull(tri, {-1, -1}) == doctest::Approx(std::sqrt(2.0)));

  // randomized agreement with brute-force sampling over the hull
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec> pts;
    const int m = 3 + static_cast<int>(rng.bits() % 5);
    for (int i = 0; i < m; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    Vec q = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double d = dist_to_hull(pts, q);
    // oracle: dense random convex combinations can only overestimate
    double best = 1e300;
    for (int s = 0; s < 4000; ++s) {
      Vec w(m);
      double tot = 0.0;
      for (int i = 0; i < m; ++i) { w[i] = -std::log(rng.uniform01() + 1e-300); tot += w[i]; }
      Vec p(3, 0.0);
      for (int i = 0; i < m; ++i) p = p + (w[i] / tot) * pts[i];
      best = std::min(best, norm(p - q));
    }
    CHECK(d <= best + 1e-9);
    CHECK(best - d < 0.35);  // loose: random mixtures approach the optimum
  }
}

TEST_CASE("nnls feasibility basics") {
  Mat A(2, 2);
  A(0, 0) = 1; A(1, 1) = 1;
  CHECK(in_nonneg_span(A, {0.5, 0.25}));
  CHECK_FALSE(in_nonneg_span(A, {-0.5, 0.25}));
}

TEST_CASE("cone intersection in R2 and R3") {
  Cone q1 = Cone::span_of(2, {{1, 0}, {0, 1}});
  Cone rot = Cone::span_of(2, {{1, 1}, {-1, 1}});
  Cone I = cone_intersect(q1, rot);
  CHECK(I.contains({0.2, 1.0}));
  CHECK_FALSE(I.contains({1.0, 0.2}));
  CHECK(angle_fraction(I) == doctest::Approx(0.125));

  Cone oct = Cone::span_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  Cone half = Cone::span_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}});
  Cone J = cone_intersect(oct, half);
  CHECK(angle_fraction(J) == doctest::Approx(0.125));
  Cone opp = Cone::span_of(3, {{0, 0, -1}});
  Cone Z = cone_intersect(oct, opp);
  CHECK(Z.generators.empty());
}
