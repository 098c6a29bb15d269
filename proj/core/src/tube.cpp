#include "lkzeta/tube.hpp"

#include <cmath>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"
#include "lkzeta/rng.hpp"

namespace lkz {

namespace {

struct Box {
  Vec lo, hi;
  double volume() const {
    double v = 1.0;
    for (size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
    return v;
  }
};

Box inflated_box(const PLSet& X, double eps) {
  auto [lo, hi] = X.bounding_box();
  for (size_t i = 0; i < lo.size(); ++i) {
    lo[i] -= eps;
    hi[i] += eps;
  }
  return {lo, hi};
}

Vec sample_in_box(const Box& b, Rng& rng) {
  Vec x(b.lo.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(b.lo[i], b.hi[i]);
  return x;
}

}  // namespace

McEstimate tube_volume_mc(const PLSet& X, double eps, const McOptions& opts) {
  if (eps < 0) throw validation_error("tube_volume_mc: eps >= 0 required");
  if (opts.samples < 1) throw validation_error("tube_volume_mc: samples >= 1");
  if (X.empty()) return {0.0, 0.0, opts.samples};

  const Box box = inflated_box(X, eps);
  const double vol = box.volume();

  std::vector<std::int64_t> hits(opts.workers, 0);
  run_sharded(opts.samples, opts.workers, opts.seed,
              [&](int w, std::int64_t count, std::uint64_t s) {
                Rng rng(s);
                std::int64_t h = 0;
                for (std::int64_t i = 0; i < count; ++i) {
                  const Vec x = sample_in_box(box, rng);
                  for (const auto& piece : X.pieces) {
                    if (dist_to_hull(piece.vertices, x) <= eps + kGeomTol) {
                      ++h;
                      break;
                    }
                  }
                }
                hits[w] = h;
              });
  std::int64_t total = 0;
  for (std::int64_t h : hits) total += h;

  const double p = static_cast<double>(total) / static_cast<double>(opts.samples);
  const double se = vol * std::sqrt(std::max(0.0, p * (1.0 - p)) /
                                    static_cast<double>(opts.samples));
  return {vol * p, se, opts.samples};
}

McEstimate weighted_tube_integral_mc(const PLSet& X, double eps,
                                     const McOptions& opts) {
  if (eps < 0) throw validation_error("weighted_tube_integral_mc: eps >= 0 required");
  if (opts.samples < 1) throw validation_error("weighted_tube_integral_mc: samples >= 1");
  if (X.empty()) return {0.0, 0.0, opts.samples};

  X.nerve();  // build before the threads fan out
  const Box box = inflated_box(X, eps);
  const double vol = box.volume();

  std::vector<std::int64_t> sums(opts.workers, 0), sums2(opts.workers, 0);
  run_sharded(opts.samples, opts.workers, opts.seed,
              [&](int w, std::int64_t count, std::uint64_t s) {
                Rng rng(s);
                std::int64_t acc = 0, acc2 = 0;
                for (std::int64_t i = 0; i < count; ++i) {
                  const Vec x = sample_in_box(box, rng);
                  const int chi = chi_ball(X, x, eps);
                  acc += chi;
                  acc2 += static_cast<std::int64_t>(chi) * chi;
                }
                sums[w] = acc;
                sums2[w] = acc2;
              });
  std::int64_t s1 = 0, s2 = 0;
  for (int w = 0; w < opts.workers; ++w) {
    s1 += sums[w];
    s2 += sums2[w];
  }
  const double N = static_cast<double>(opts.samples);
  const double mean = static_cast<double>(s1) / N;
  const double var = std::max(0.0, static_cast<double>(s2) / N - mean * mean);
  return {vol * mean, vol * std::sqrt(var / N), opts.samples};
}

double smooth_benchmark_tube(BenchmarkShape shape, double r, double eps) {
  if (r <= 0) throw validation_error("smooth_benchmark_tube: radius > 0 required");
  if (eps < 0) throw validation_error("smooth_benchmark_tube: eps >= 0 required");
  switch (shape) {
    case BenchmarkShape::Circle:
      if (eps >= r) throw validation_error("smooth_benchmark_tube: eps beyond reach");
      return kPi * (r + eps) * (r + eps) - kPi * (r - eps) * (r - eps);
    case BenchmarkShape::Disc:
      return kPi * (r + eps) * (r + eps);
    case BenchmarkShape::Sphere:
      if (eps >= r) throw validation_error("smooth_benchmark_tube: eps beyond reach");
      return (4.0 * kPi / 3.0) * (std::pow(r + eps, 3) - std::pow(r - eps, 3));
  }
  throw validation_error("smooth_benchmark_tube: unknown shape");
}

BenchmarkShape benchmark_shape_from_string(const std::string& s) {
  if (s == "circle") return BenchmarkShape::Circle;
  if (s == "sphere") return BenchmarkShape::Sphere;
  if (s == "disc") return BenchmarkShape::Disc;
  throw validation_error("unknown benchmark shape: " + s);
}

}  // namespace lkz
