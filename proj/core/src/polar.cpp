#include "lkzeta/polar.hpp"

#include <algorithm>
#include <cmath>

#include "lkzeta/constants.hpp"
#include "lkzeta/rng.hpp"

namespace lkz {

namespace {

// does (cone cap unit ball cap {x : frame^T x = y}) meet anything?
int slice_hit(const Cone& c, const std::vector<Vec>& frame, const Vec& y) {
  if (c.generators.empty()) return norm(y) <= 1e-9 ? 1 : 0;
  const int n = c.ambient_dim;
  const int i = static_cast<int>(frame.size());
  const int g = static_cast<int>(c.generators.size());

  // feasibility of cone cap flat
  Mat A1(i, g);
  for (int r = 0; r < i; ++r)
    for (int j = 0; j < g; ++j) A1(r, j) = dot(frame[r], c.generators[j]);
  Vec lam;
  const double r1 = nnls(A1, y, lam);
  if (r1 > 1e-7 * std::max(1.0, norm(y))) return 0;

  // min-norm point on the flat within the cone, via a penalty row block
  const double W = 1e5;
  Mat A2(n + i, g);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < g; ++j) A2(r, j) = c.generators[j][r];
  for (int r = 0; r < i; ++r)
    for (int j = 0; j < g; ++j) A2(n + r, j) = W * A1(r, j);
  Vec b2(n + i, 0.0);
  for (int r = 0; r < i; ++r) b2[n + r] = W * y[r];
  Vec lam2;
  nnls(A2, b2, lam2);
  Vec z(n, 0.0);
  for (int j = 0; j < g; ++j)
    for (int r = 0; r < n; ++r) z[r] += lam2[j] * c.generators[j][r];
  return norm(z) <= 1.0 + 1e-6 ? 1 : 0;
}

}  // namespace

int fiber_chi(const std::vector<SignedConeTerm>& terms,
              const std::vector<Vec>& frame, const Vec& y) {
  int chi = 0;
  for (const auto& t : terms) chi += t.coeff * slice_hit(t.cone, frame, y);
  return chi;
}

double ConstructibleFn::theta() const {
  if (target_dim == 0) return static_cast<double>(value_origin);
  if (target_dim == 1) return 0.5 * (value_pos + value_neg);
  double s = 0.0;
  for (const auto& sec : sectors) s += sec.value * (sec.end - sec.begin);
  return s / (2.0 * kPi);
}

std::vector<std::pair<Cone, int>> ConstructibleFn::region_cones() const {
  std::vector<std::pair<Cone, int>> out;
  if (target_dim == 1) {
    out.emplace_back(Cone::span_of(1, {{1.0}}), value_pos);
    out.emplace_back(Cone::span_of(1, {{-1.0}}), value_neg);
    out.emplace_back(Cone::zero(1), value_origin);
    return out;
  }
  for (const auto& sec : sectors) {
    // split wide sectors so each cone stays convex
    const int parts = std::max(1, static_cast<int>(std::ceil((sec.end - sec.begin) / 1.5)));
    for (int p = 0; p < parts; ++p) {
      const double a = sec.begin + (sec.end - sec.begin) * p / parts;
      const double b = sec.begin + (sec.end - sec.begin) * (p + 1) / parts;
      out.emplace_back(
          Cone::span_of(2, {{std::cos(a), std::sin(a)}, {std::cos(b), std::sin(b)}}),
          sec.value);
    }
  }
  out.emplace_back(Cone::zero(2), value_origin);
  return out;
}

namespace {

ConstructibleFn pushforward_impl(const std::vector<SignedConeTerm>& terms,
                                 const std::vector<Vec>& frame,
                                 const PushforwardOptions& opts) {
  ConstructibleFn fn;
  fn.target_dim = static_cast<int>(frame.size());
  fn.frame = frame;
  fn.value_origin = fiber_chi(terms, frame, Vec(fn.target_dim, 0.0));

  const double delta = opts.probe_radius;
  if (fn.target_dim == 1) {
    const int cp = fiber_chi(terms, frame, {delta});
    const int cm = fiber_chi(terms, frame, {-delta});
    // probe-radius stability doubles as the genericity test
    if (cp != fiber_chi(terms, frame, {delta / 2}) ||
        cm != fiber_chi(terms, frame, {-delta / 2}))
      throw genericity_error("pushforward: unstable fiber chi on a line target");
    fn.value_pos = cp;
    fn.value_neg = cm;
    return fn;
  }
  if (fn.target_dim != 2)
    throw validation_error("pushforward: target dimension must be 1 or 2");

  auto probe = [&](double phi) {
    return fiber_chi(terms, frame, {delta * std::cos(phi), delta * std::sin(phi)});
  };

  const int base = std::max(8, opts.base_sectors);
  std::vector<int> vals(base);
  for (int k = 0; k < base; ++k) vals[k] = probe(2.0 * kPi * k / base);

  std::vector<double> boundaries;
  for (int k = 0; k < base; ++k) {
    const int next = (k + 1) % base;
    if (vals[k] == vals[next]) continue;
    double lo = 2.0 * kPi * k / base;
    double hi = 2.0 * kPi * (k + 1) / base;
    int vlo = vals[k];
    for (int step = 0; step < opts.refine_steps; ++step) {
      const double mid = 0.5 * (lo + hi);
      if (probe(mid) == vlo) lo = mid;
      else hi = mid;
    }
    boundaries.push_back(0.5 * (lo + hi));
  }

  if (boundaries.empty()) {
    fn.sectors.push_back({0.0, 2.0 * kPi, vals[0]});
    return fn;
  }
  std::sort(boundaries.begin(), boundaries.end());
  const int m = static_cast<int>(boundaries.size());
  for (int j = 0; j < m; ++j) {
    const double gap = (j + 1 < m) ? boundaries[j + 1] - boundaries[j]
                                   : boundaries[0] + 2.0 * kPi - boundaries[m - 1];
    if (gap < kAngularTol)
      throw genericity_error("pushforward: region boundaries within angular tolerance");
  }
  for (int j = 0; j < m; ++j) {
    const double a = boundaries[j];
    const double b = (j + 1 < m) ? boundaries[j + 1] : boundaries[0] + 2.0 * kPi;
    fn.sectors.push_back({a, b, probe(0.5 * (a + b))});
  }
  return fn;
}

}  // namespace

ConstructibleFn pushforward(const ConicGerm& germ, const std::vector<Vec>& frame,
                            const PushforwardOptions& opts) {
  return pushforward_impl(signed_cone_terms(germ), frame, opts);
}

PolarEstimate polar_invariant(const ConicGerm& germ, int i, const PolarOptions& opts) {
  const int n = germ.ambient_dim;
  if (i < 0 || i > n) throw validation_error("polar_invariant: need 0 <= i <= n");
  if (germ.empty()) return {0.0, 0.0, 0, 0};

  const auto terms = signed_cone_terms(germ);
  if (i == 0) {
    double v = 0.0;
    for (const auto& t : terms) v += t.coeff;
    return {v, 0.0, 0, 0};
  }
  if (i > germ_dim(germ)) return {0.0, 0.0, 0, 0};  // generic flats miss the germ
  if (i == n) return {density(germ), 0.0, 0, 0};
  if (n > 3)
    throw validation_error("polar_invariant: 0 < i < n requires ambient dimension <= 3");

  struct Shard {
    double sum = 0.0, sum2 = 0.0;
    std::int64_t resampled = 0, done = 0;
  };
  std::vector<Shard> shards(opts.workers);
  run_sharded(opts.plane_samples, opts.workers, opts.seed,
              [&](int w, std::int64_t count, std::uint64_t s) {
                Rng rng(s);
                Shard sh;
                while (sh.done < count) {
                  if (sh.resampled > 2 * count + 64) break;
                  const auto frame = sample_frame(i, n, rng);
                  try {
                    const ConstructibleFn fn = pushforward_impl(terms, frame, opts.push);
                    const double th = fn.theta();
                    sh.sum += th;
                    sh.sum2 += th * th;
                    ++sh.done;
                  } catch (const genericity_error&) {
                    ++sh.resampled;
                  }
                }
                shards[w] = sh;
              });
  double s1 = 0.0, s2 = 0.0;
  std::int64_t res = 0, done = 0;
  for (const auto& sh : shards) {
    s1 += sh.sum;
    s2 += sh.sum2;
    res += sh.resampled;
    done += sh.done;
  }
  if (done < opts.plane_samples || res * 10 > opts.plane_samples)
    throw numeric_error("polar_invariant: persistent genericity failure (> 10% resamples)");
  const double N = static_cast<double>(opts.plane_samples);
  const double mean = s1 / N;
  const double var = std::max(0.0, s2 / N - mean * mean);
  return {mean, std::sqrt(var / N), opts.plane_samples, res};
}

MLCCMatrix mlcc_matrix(int n) {
  if (n < 1) throw validation_error("mlcc_matrix: n >= 1 required");
  auto binom = [](int a, int b) -> double {
    if (b < 0 || b > a) return 0.0;
    double r = 1.0;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  MLCCMatrix M;
  M.n = n;
  M.entries.assign(n, std::vector<double>(n, 0.0));
  for (int i = 1; i <= n; ++i) {
    M.entries[i - 1][i - 1] = 1.0;
    for (int j = i + 1; j <= n; ++j) {
      const double a = unit_ball_volume(j) /
                       (unit_ball_volume(j - i) * unit_ball_volume(i)) * binom(j, i);
      const double b = unit_ball_volume(j - 1) /
                       (unit_ball_volume(j - 1 - i) * unit_ball_volume(i)) *
                       binom(j - 1, i);
      M.entries[i - 1][j - 1] = a - b;
    }
  }
  return M;
}

MLCCReport mlcc_verify(const ConicGerm& germ, double tolerance,
                       const PolarOptions& opts) {
  const int n = germ.ambient_dim;
  const auto lloc = local_lk(germ);
  const MLCCMatrix M = mlcc_matrix(n);

  MLCCReport rep;
  rep.sigma.reserve(n);
  for (int j = 1; j <= n; ++j) {
    PolarOptions o = opts;
    o.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(j));
    rep.sigma.push_back(polar_invariant(germ, j, o));
  }
  rep.pass = true;
  for (int i = 1; i <= n; ++i) {
    MLCCRow row;
    row.i = i;
    row.lhs = lloc[i];
    double rhs = 0.0, var = 0.0;
    for (int j = i; j <= n; ++j) {
      const double mij = M.at(i, j);
      rhs += mij * rep.sigma[j - 1].value;
      var += mij * mij * rep.sigma[j - 1].stderr_ * rep.sigma[j - 1].stderr_;
    }
    row.rhs = rhs;
    row.rhs_stderr = std::sqrt(var);
    row.residual = row.lhs - row.rhs;
    row.pass = std::fabs(row.residual) < std::max(tolerance, 3.0 * row.rhs_stderr);
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

SphericalValuations spherical_valuations(const Cone& K_hat, const PolarOptions& opts) {
  const int n = K_hat.ambient_dim;
  ConicGerm germ;
  germ.ambient_dim = n;
  germ.pieces.push_back({K_hat, 1});

  SphericalValuations out;
  out.lambda_hat = local_lk(germ);
  out.sigma_hat.assign(n + 1, 0.0);
  out.sigma_stderr.assign(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    PolarOptions o = opts;
    o.seed = derive_seed(opts.seed, 100 + static_cast<std::uint64_t>(i));
    const auto est = polar_invariant(germ, i, o);
    out.sigma_hat[i] = est.value;
    out.sigma_stderr[i] = est.stderr_;
  }

  // Xi_i: spherical face volumes weighted by exterior angles of the cone
  out.xi.assign(n, 0.0);
  std::vector<Vec> comp;
  {
    auto span = cone_span(K_hat);
    std::vector<Vec> all = span;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0.0);
      e[i] = 1.0;
      all.push_back(e);
    }
    auto full = gram_schmidt(all, kGeomTol);
    comp.assign(full.begin() + static_cast<long>(span.size()), full.end());
  }
  for (const auto& face : cone_face_lattice(K_hat)) {
    if (face.dim < 1) continue;
    const int i = face.dim - 1;
    const double vol = angle_fraction(face.cone) * sphere_surface(i);
    std::vector<Vec> ngens = face.active_normals;
    for (const Vec& c : comp) {
      ngens.push_back(c);
      ngens.push_back(-1.0 * c);
    }
    const double gamma = ngens.empty() ? 1.0 : angle_fraction(Cone::span_of(n, ngens));
    out.xi[i] += vol * gamma;
  }
  return out;
}

}  // namespace lkz
