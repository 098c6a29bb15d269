#include "doctest.h"

#include <cmath>

#include "lkzeta/conic.hpp"
#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

using namespace lkz;

namespace {

ConicGerm half_plane_germ() {
  return make_germ(2, {Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}})});
}

ConicGerm quarter_plane_germ() {
  return make_germ(2, {Cone::span_of(2, {{1, 0}, {0, 1}})});
}

}  // namespace

TEST_CASE("local LK of the full plane") {
  const auto l = local_lk(
      make_germ(2, {Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})}));
  CHECK(l[0] == doctest::Approx(1.0));
  CHECK(l[2] == doctest::Approx(1.0));  // density of the plane
  // Lambda_1(disc)/alpha_1 = pi/2; cross-checked by the MLCC identity with
  // sigma = (1,1,1)
  CHECK(l[1] == doctest::Approx(kPi / 2.0));
}

TEST_CASE("local LK of the half-plane (half-disc oracle)") {
  const auto l = local_lk(half_plane_germ());
  CHECK(l[0] == doctest::Approx(1.0));
  // half-disc perimeter = pi rho + 2 rho, Lambda_1 = perimeter / 2
  CHECK(l[1] == doctest::Approx(0.5 + kPi / 4.0).epsilon(1e-9));
  CHECK(l[2] == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("local LK of half-line and line") {
  const auto h = local_lk(make_germ(2, {Cone::span_of(2, {{1, 0}})}));
  CHECK(h[0] == doctest::Approx(1.0));
  CHECK(h[1] == doctest::Approx(0.5));
  CHECK(h[2] == doctest::Approx(0.0));

  const auto l = local_lk(make_germ(2, {Cone::span_of(2, {{1, 0}, {-1, 0}})}));
  CHECK(l[1] == doctest::Approx(1.0));
  CHECK(l[2] == doctest::Approx(0.0));
}

TEST_CASE("local LK of unions: k lines through the origin") {
  for (int k = 2; k <= 4; ++k) {
    std::vector<Cone> cones;
    for (int j = 0; j < k; ++j) {
      const double a = kPi * j / k + 0.1;
      cones.push_back(Cone::span_of(
          2, {{std::cos(a), std::sin(a)}, {-std::cos(a), -std::sin(a)}}));
    }
    const auto l = local_lk(make_germ(2, std::move(cones)));
    CHECK(l[0] == doctest::Approx(1.0));  // a cone germ is contractible
    CHECK(l[1] == doctest::Approx(static_cast<double>(k)));
  }
}

TEST_CASE("density examples") {
  CHECK(density(quarter_plane_germ()) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(density(make_germ(2, {Cone::span_of(2, {{1, 0}})})) == doctest::Approx(0.5));
  CHECK(density(make_germ(
            2, {Cone::span_of(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})})) ==
        doctest::Approx(1.0));
  ConicGerm mixed = make_germ(2, {Cone::span_of(2, {{1, 0}}),
                                  Cone::span_of(2, {{1, 0}, {0, 1}})});
  CHECK_THROWS_AS(density(mixed), validation_error);
}

TEST_CASE("conic scale invariance of truncations") {
  const ConicGerm germs[] = {
      half_plane_germ(), quarter_plane_germ(),
      make_germ(3, {Cone::span_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})})};
  for (const auto& g : germs) {
    const LKVector base = lk_of_truncation(g, 1.0);
    for (double rho : {0.5, 2.0}) {
      const LKVector lk = lk_of_truncation(g, rho);
      for (int i = 0; i <= g.ambient_dim; ++i) {
        const double expect = base[i] * std::pow(rho, i);
        CHECK(lk[i] == doctest::Approx(expect).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("local LK of three-dimensional cones") {
  // full space: (1, 2, 2, 1)
  const auto f = local_lk(make_germ(
      3, {Cone::span_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0},
                            {0, 0, 1}, {0, 0, -1}})}));
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(2.0));
  CHECK(f[2] == doctest::Approx(2.0));
  CHECK(f[3] == doctest::Approx(1.0));

  // half-space: (1, 1 + pi/4, 3/2, 1/2)
  const auto h = local_lk(make_germ(
      3, {Cone::span_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0},
                            {0, 0, 1}})}));
  CHECK(h[0] == doctest::Approx(1.0));
  CHECK(h[1] == doctest::Approx(1.0 + kPi / 4.0));
  CHECK(h[2] == doctest::Approx(1.5));
  CHECK(h[3] == doctest::Approx(0.5));

  // octant
  const auto o = local_lk(
      make_germ(3, {Cone::span_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}));
  CHECK(o[0] == doctest::Approx(1.0));
  CHECK(o[3] == doctest::Approx(0.125));
  CHECK(o[2] == doctest::Approx((0.75 * kPi + 0.5 * kPi) / (2.0 * kPi)));
  const double lam1 = (kPi / 2.0 + kPi / 4.0 * 1.5 * kPi + 0.5 * 1.5 * kPi) / kPi;
  CHECK(o[1] == doctest::Approx(lam1 / 2.0));
}

TEST_CASE("plane germ inside R^3") {
  const auto p = local_lk(make_germ(
      3, {Cone::span_of(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}})}));
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(kPi / 2.0));  // disc Lambda_1 / 2
  CHECK(p[2] == doctest::Approx(1.0));        // density
  CHECK(p[3] == doctest::Approx(0.0));
}

TEST_CASE("weighted germ: multiplicity scales linearly on one piece") {
  ConicGerm g = quarter_plane_germ();
  g.pieces[0].mult = 3;
  const auto l3 = local_lk(g);
  const auto l1 = local_lk(quarter_plane_germ());
  for (int i = 0; i <= 2; ++i) CHECK(l3[i] == doctest::Approx(3.0 * l1[i]));
}

TEST_CASE("bad multiplicities rejected") {
  ConicGerm g = quarter_plane_germ();
  g.pieces[0].mult = 0;
  CHECK_THROWS_AS(local_lk(g), validation_error);
}
