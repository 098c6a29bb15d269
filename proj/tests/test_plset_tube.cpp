#include "doctest.h"

#include <cmath>

#include "lkzeta/constants.hpp"
#include "lkzeta/plset.hpp"
#include "lkzeta/rng.hpp"
#include "lkzeta/steiner.hpp"
#include "lkzeta/tube.hpp"

using namespace lkz;

namespace {

PLSet two_points_at_distance_2() {
  return PLSet(2, {make_point({0, 0}), make_point({2, 0})});
}

}  // namespace

TEST_CASE("chi_ball basics") {
  const PLSet sq(2, {make_box({0, 0}, {1, 1})});
  CHECK(chi_ball(sq, {0.5, 0.5}, 0.1) == 1);   // convex hit
  CHECK(chi_ball(sq, {3.0, 0.5}, 0.5) == 0);   // too far
  const PLSet two = two_points_at_distance_2();
  CHECK(chi_ball(two, {1.0, 0.0}, 1.5) == 2);  // both points in reach
  CHECK(chi_ball(two, {1.0, 0.0}, 0.5) == 0);
  CHECK(chi_ball(two, {0.1, 0.0}, 0.5) == 1);
}

TEST_CASE("chi_ball sees the nerve of overlapping squares") {
  const PLSet X(2, {make_box({0, 0}, {1, 1}), make_box({1, 0}, {2, 1})});
  // shared edge: chi = 1 + 1 - 1
  CHECK(chi_ball(X, {1.0, 0.5}, 0.2) == 1);
  CHECK(chi_ball(X, {0.2, 0.5}, 0.1) == 1);
}

TEST_CASE("lk_curvatures: single piece equals steiner") {
  const Polytope B = make_box({0, 0}, {2, 3});
  const PLSet X(2, {B});
  const LKVector a = lk_curvatures(X);
  const LKVector b = steiner_coefficients(B);
  for (int i = 0; i <= 2; ++i) CHECK(a[i] == doctest::Approx(b[i]));
}

TEST_CASE("lk_curvatures: disjoint and edge-glued squares") {
  {
    const PLSet X(2, {make_box({0, 0}, {1, 1}), make_box({3, 0}, {4, 1})});
    const LKVector lk = lk_curvatures(X);
    CHECK(lk[0] == doctest::Approx(2.0));
    CHECK(lk[1] == doctest::Approx(4.0));
    CHECK(lk[2] == doctest::Approx(2.0));
  }
  {
    // sharing an edge: intersection is a segment with LK (1, 1, 0)
    const PLSet X(2, {make_box({0, 0}, {1, 1}), make_box({1, 0}, {2, 1})});
    const LKVector lk = lk_curvatures(X);
    CHECK(lk[0] == doctest::Approx(1.0));
    CHECK(lk[1] == doctest::Approx(3.0));  // 2 + 2 - 1
    CHECK(lk[2] == doctest::Approx(2.0));
  }
}

TEST_CASE("lk additivity on random axis-aligned box pairs") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(rng.bits() % 2);
    Vec lo1(n), hi1(n), lo2(n), hi2(n);
    for (int i = 0; i < n; ++i) {
      lo1[i] = rng.uniform(-1, 0.4);
      hi1[i] = lo1[i] + rng.uniform(0.3, 1.2);
      lo2[i] = rng.uniform(-1, 0.4);
      hi2[i] = lo2[i] + rng.uniform(0.3, 1.2);
    }
    const Polytope A = make_box(lo1, hi1), B = make_box(lo2, hi2);
    // overlap box (may be empty or degenerate: skip those trials)
    Vec lo(n), hi(n);
    bool overlap = true;
    for (int i = 0; i < n; ++i) {
      lo[i] = std::max(lo1[i], lo2[i]);
      hi[i] = std::min(hi1[i], hi2[i]);
      if (hi[i] - lo[i] < 0.05) overlap = false;
    }
    if (!overlap) continue;
    const LKVector lk_union = lk_curvatures(PLSet(n, {A, B}));
    const LKVector lk_a = steiner_coefficients(A);
    const LKVector lk_b = steiner_coefficients(B);
    const LKVector lk_i = steiner_coefficients(make_box(lo, hi));
    for (int i = 0; i <= n; ++i) {
      const double lhs = lk_union[i] + lk_i[i];
      const double rhs = lk_a[i] + lk_b[i];
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
  }
}

TEST_CASE("tube_volume_mc: radius zero and point disc") {
  const PLSet sq(2, {make_box({0, 0}, {1, 1})});
  const McEstimate e0 = tube_volume_mc(sq, 0.0, {200000, 1, 2});
  CHECK(std::fabs(e0.value - 1.0) <= 3.0 * e0.stderr_ + 1e-12);

  const PLSet pt(2, {make_point({0, 0})});
  const double eps = 0.7;
  const McEstimate e1 = tube_volume_mc(pt, eps, {200000, 2, 2});
  CHECK(std::fabs(e1.value - kPi * eps * eps) <= 3.0 * e1.stderr_);

  CHECK(tube_volume_mc(PLSet(2, {}), 0.3, {1000, 0, 1}).value == 0.0);
}

TEST_CASE("tube_volume_mc matches the square steiner polynomial") {
  const PLSet sq(2, {make_box({0, 0}, {1, 1})});
  const LKVector lk = steiner_coefficients(make_box({0, 0}, {1, 1}));
  for (double eps : {0.1, 0.2}) {
    const McEstimate e = tube_volume_mc(sq, eps, {300000, 7, 4});
    CHECK(std::fabs(e.value - steiner_polynomial(lk, eps)) <= 3.0 * e.stderr_);
  }
}

TEST_CASE("weighted tube integral: convex agreement and fig-3 regime") {
  const PLSet sq(2, {make_box({0, 0}, {1, 1})});
  const double eps = 0.15;
  const McEstimate w = weighted_tube_integral_mc(sq, eps, {200000, 3, 2});
  const McEstimate t = tube_volume_mc(sq, eps, {200000, 3, 2});
  CHECK(std::fabs(w.value - t.value) <=
        3.0 * std::sqrt(w.stderr_ * w.stderr_ + t.stderr_ * t.stderr_) + 1e-12);

  // two points at distance 2, eps = 1.5: integral = sum of two disc areas
  const PLSet two = two_points_at_distance_2();
  const McEstimate wi = weighted_tube_integral_mc(two, 1.5, {400000, 11, 4});
  CHECK(std::fabs(wi.value - 2.0 * kPi * 1.5 * 1.5) <= 3.0 * wi.stderr_);

  CHECK(weighted_tube_integral_mc(PLSet(2, {}), 0.5, {1000, 0, 1}).value == 0.0);
}

TEST_CASE("determinism across runs, worker count fixed") {
  const PLSet sq(2, {make_box({0, 0}, {1, 1})});
  const McEstimate a = tube_volume_mc(sq, 0.1, {50000, 42, 3});
  const McEstimate b = tube_volume_mc(sq, 0.1, {50000, 42, 3});
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
}

TEST_CASE("smooth benchmark tubes") {
  CHECK(smooth_benchmark_tube(BenchmarkShape::Circle, 1.0, 0.25) ==
        doctest::Approx(kPi * (1.25 * 1.25 - 0.75 * 0.75)));
  CHECK(smooth_benchmark_tube(BenchmarkShape::Disc, 2.0, 0.5) ==
        doctest::Approx(kPi * 6.25));
  CHECK(smooth_benchmark_tube(BenchmarkShape::Sphere, 1.0, 0.5) ==
        doctest::Approx((4.0 * kPi / 3.0) * (std::pow(1.5, 3) - std::pow(0.5, 3))));
  CHECK_THROWS(smooth_benchmark_tube(BenchmarkShape::Circle, 1.0, 1.5));
}
