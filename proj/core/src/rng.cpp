#include "lkzeta/rng.hpp"

#include <cmath>

#include "lkzeta/constants.hpp"
#include "lkzeta/errors.hpp"

namespace lkz {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed;
  (void)splitmix64(s);
  s ^= 0xA0761D6478BD642Full * (stream + 1);
  return splitmix64(s);
}

double Rng::gaussian() {
  if (has_cache_) {
    has_cache_ = false;
    return cache_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * kPi * u2;
  cache_ = r * std::sin(a);
  has_cache_ = true;
  return r * std::cos(a);
}

std::vector<double> Rng::gaussian_vec(int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = gaussian();
  return v;
}

std::vector<std::int64_t> shard_counts(std::int64_t total, int workers) {
  if (workers < 1) throw validation_error("shard_counts: workers >= 1 required");
  if (total < 0) throw validation_error("shard_counts: negative total");
  std::vector<std::int64_t> counts(workers, total / workers);
  for (int i = 0; i < workers; ++i)
    if (i < total % workers) ++counts[i];
  return counts;
}

}  // namespace lkz
