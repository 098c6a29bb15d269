#ifndef LKZETA_RNG_HPP
#define LKZETA_RNG_HPP

#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace lkz {

/// splitmix64 step, used to derive decorrelated per-worker seeds.
std::uint64_t splitmix64(std::uint64_t& state);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic generator. Distributions are implemented in-house so that
/// output is identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller (cached second value).
  double gaussian();

  std::vector<double> gaussian_vec(int n);

private:
  std::mt19937_64 eng_;
  bool has_cache_ = false;
  double cache_ = 0.0;
};

/// Per-worker shard sizes: first (total % workers) shards get one extra.
std::vector<std::int64_t> shard_counts(std::int64_t total, int workers);

/// Runs fn(worker_index, shard_size, derived_seed) on `workers` threads and
/// returns when all are done. Results must be merged by the caller in worker
/// order to stay deterministic.
template <typename Fn>
void run_sharded(std::int64_t total, int workers, std::uint64_t seed, Fn&& fn) {
  const auto counts = shard_counts(total, workers);
  std::vector<std::thread> pool;
  pool.reserve(counts.size());
  for (std::size_t w = 0; w < counts.size(); ++w) {
    pool.emplace_back([&fn, w, &counts, seed]() {
      fn(static_cast<int>(w), counts[w], derive_seed(seed, w));
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lkz

#endif
