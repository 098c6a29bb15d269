#include "lkzeta/crofton.hpp"

#include <cmath>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"
#include "lkzeta/grassmann.hpp"
#include "lkzeta/rng.hpp"

namespace lkz {

namespace {

constexpr double kDegenerateTol = 1e-9;

struct Shard {
  double sum = 0.0, sum2 = 0.0;
  std::int64_t zero_hits = 0, resampled = 0;
};

// corners of the window projected onto the frame give the offset box
std::pair<Vec, Vec> projected_box(const Window& w, const std::vector<Vec>& frame) {
  const int n = static_cast<int>(w.lo.size());
  const int k = static_cast<int>(frame.size());
  Vec lo(k, 1e300), hi(k, -1e300);
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vec corner(n);
    for (int i = 0; i < n; ++i) corner[i] = (mask >> i & 1) ? w.hi[i] : w.lo[i];
    for (int j = 0; j < k; ++j) {
      const double c = dot(corner, frame[j]);
      lo[j] = std::min(lo[j], c);
      hi[j] = std::max(hi[j], c);
    }
  }
  return {lo, hi};
}

struct SegmentData {
  Vec a, d;  // a + t d, t in [0,1]
};

struct TriangleData {
  Vec v0, e1, e2;  // v0 + s e1 + t e2, s,t >= 0, s + t <= 1
};

// -1 signals a non-generic configuration that wants a resample
int count_segment_hits(const std::vector<SegmentData>& segs,
                       const std::vector<Vec>& frame, const Vec& x0) {
  const Vec& u = frame[0];
  int hits = 0;
  for (const auto& s : segs) {
    const double den = dot(s.d, u);
    const double num = x0[0] - dot(s.a, u);
    if (std::fabs(den) < kDegenerateTol * std::max(1.0, norm(s.d))) {
      if (std::fabs(num) < kDegenerateTol) return -1;  // flat contains the segment
      continue;
    }
    const double t = num / den;
    if (t < -kDegenerateTol || t > 1.0 + kDegenerateTol) continue;
    if (t < kDegenerateTol || t > 1.0 - kDegenerateTol) return -1;  // endpoint graze
    ++hits;
  }
  return hits;
}

int count_triangle_hits(const std::vector<TriangleData>& tris,
                        const std::vector<Vec>& frame, const Vec& x0) {
  int hits = 0;
  for (const auto& tr : tris) {
    Mat A(2, 2);
    Vec b(2);
    for (int k = 0; k < 2; ++k) {
      A(k, 0) = dot(tr.e1, frame[k]);
      A(k, 1) = dot(tr.e2, frame[k]);
      b[k] = x0[k] - dot(tr.v0, frame[k]);
    }
    const double det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    if (std::fabs(det) < kDegenerateTol) {
      // flat parallel to the triangle plane; a graze wants a resample
      if (std::fabs(b[0]) < kDegenerateTol && std::fabs(b[1]) < kDegenerateTol)
        return -1;
      continue;
    }
    const double s = (b[0] * A(1, 1) - b[1] * A(0, 1)) / det;
    const double t = (A(0, 0) * b[1] - A(1, 0) * b[0]) / det;
    const double m = std::min({s, t, 1.0 - s - t});
    if (m < -kDegenerateTol) continue;
    if (m < kDegenerateTol) return -1;  // edge graze
    ++hits;
  }
  return hits;
}

SliceStatistics finish(const std::vector<Shard>& shards, std::int64_t samples,
                       double beta) {
  double s1 = 0.0, s2 = 0.0;
  std::int64_t zero = 0, res = 0;
  for (const auto& sh : shards) {
    s1 += sh.sum;
    s2 += sh.sum2;
    zero += sh.zero_hits;
    res += sh.resampled;
  }
  if (res > samples / 100)
    throw numeric_error("crofton: more than 1% non-generic flat samples");
  const double N = static_cast<double>(samples);
  const double mean = s1 / N;
  const double var = std::max(0.0, s2 / N - mean * mean);
  SliceStatistics st;
  st.estimate = mean / beta;
  st.stderr_ = std::sqrt(var / N) / beta;
  st.samples = samples;
  st.zero_hit_fraction = static_cast<double>(zero) / N;
  st.resampled = res;
  return st;
}

}  // namespace

Window natural_window(const PLSet& X) {
  auto [lo, hi] = X.bounding_box();
  return {lo, hi};
}

SliceStatistics crofton_volume_mc(const PLSet& X, const Window& window,
                                  const McOptions& opts) {
  if (X.empty()) return {0.0, 0.0, opts.samples, 1.0, 0};
  const int n = X.ambient_dim;
  int d = -1;
  for (const auto& p : X.pieces) {
    if (d < 0) d = p.dim;
    if (p.dim != d)
      throw validation_error("crofton_volume_mc: pieces of mixed dimension");
  }
  if (!((d == 1 && (n == 2 || n == 3)) || (d == 2 && n == 3)))
    throw validation_error(
        "crofton_volume_mc: supported (d,n) are (1,2), (1,3), (2,3)");

  for (const auto& p : X.pieces)
    for (const Vec& v : p.vertices)
      for (int i = 0; i < n; ++i)
        if (v[i] < window.lo[i] - kGeomTol || v[i] > window.hi[i] + kGeomTol)
          throw validation_error("crofton_volume_mc: X not contained in the window");

  std::vector<SegmentData> segs;
  std::vector<TriangleData> tris;
  for (const auto& p : X.pieces) {
    if (d == 1) {
      const Face& T = p.top();
      segs.push_back({p.vertices[T.verts[0]],
                      p.vertices[T.verts[1]] - p.vertices[T.verts[0]]});
    } else {
      const Vec c = p.centroid();
      for (int ei : p.faces_of_dim(1)) {
        const Face& E = p.faces[ei];
        const Vec& a = p.vertices[E.verts[0]];
        const Vec& b = p.vertices[E.verts[1]];
        tris.push_back({c, a - c, b - c});
      }
    }
  }

  const double beta = crofton_constant(d, n);
  std::vector<Shard> shards(opts.workers);
  run_sharded(opts.samples, opts.workers, opts.seed,
              [&](int w, std::int64_t count, std::uint64_t s) {
                Rng rng(s);
                Shard sh;
                std::int64_t done = 0;
                while (done < count) {
                  if (sh.resampled > 8 * count + 1024) break;  // reported by finish()
                  auto frame = sample_frame(d, n, rng);
                  auto [lo, hi] = projected_box(window, frame);
                  double bvol = 1.0;
                  Vec x0(d);
                  for (int j = 0; j < d; ++j) {
                    x0[j] = rng.uniform(lo[j], hi[j]);
                    bvol *= hi[j] - lo[j];
                  }
                  const int hits = (d == 1) ? count_segment_hits(segs, frame, x0)
                                            : count_triangle_hits(tris, frame, x0);
                  if (hits < 0) {
                    ++sh.resampled;
                    continue;
                  }
                  const double val = bvol * hits;
                  sh.sum += val;
                  sh.sum2 += val * val;
                  if (hits == 0) ++sh.zero_hits;
                  ++done;
                }
                shards[w] = sh;
              });
  return finish(shards, opts.samples, beta);
}

SliceStatistics lk_via_slices_mc(const PLSet& X, int i, const Window& window,
                                 const McOptions& opts) {
  const int n = X.ambient_dim;
  if (i < 0 || i > n)
    throw validation_error("lk_via_slices_mc: need 0 <= i <= n");
  if (n > 4)
    throw validation_error("lk_via_slices_mc: ambient dimension <= 4 supported");
  if (X.empty()) return {0.0, 0.0, 1, 1.0, 0};

  if (i == 0) {
    // G(0,n) carries a single flat: the whole space
    int chi = 0;
    for (const auto& e : X.nerve()) chi += (e.subset.size() % 2 == 1) ? 1 : -1;
    return {static_cast<double>(chi), 0.0, 1, chi == 0 ? 1.0 : 0.0, 0};
  }

  X.nerve();
  const double beta = crofton_constant(i, n);
  std::vector<Shard> shards(opts.workers);
  run_sharded(opts.samples, opts.workers, opts.seed,
              [&](int w, std::int64_t count, std::uint64_t s) {
                Rng rng(s);
                Shard sh;
                for (std::int64_t k = 0; k < count; ++k) {
                  const auto frame = sample_frame(i, n, rng);
                  auto [lo, hi] = projected_box(window, frame);
                  double bvol = 1.0;
                  Vec x0(i);
                  for (int j = 0; j < i; ++j) {
                    x0[j] = rng.uniform(lo[j], hi[j]);
                    bvol *= hi[j] - lo[j];
                  }
                  // the flat meets a convex body iff x0 lies in the body's
                  // projection onto the frame coordinates
                  int chi = 0;
                  for (const auto& e : X.nerve()) {
                    std::vector<Vec> proj;
                    proj.reserve(e.vertices.size());
                    for (const Vec& v : e.vertices)
                      proj.push_back(coords_in_basis(v, frame));
                    if (dist_to_hull(proj, x0) <= kGeomTol)
                      chi += (e.subset.size() % 2 == 1) ? 1 : -1;
                  }
                  const double val = bvol * chi;
                  sh.sum += val;
                  sh.sum2 += val * val;
                  if (chi == 0) ++sh.zero_hits;
                }
                shards[w] = sh;
              });
  return finish(shards, opts.samples, beta);
}

}  // namespace lkz
