#include "lkzeta/grassmann.hpp"

#include <cmath>

#include "lkzeta/errors.hpp"

namespace lkz {

std::vector<Vec> sample_frame(int k, int n, Rng& rng) {
  if (k < 0 || n < 0 || k > n)
    throw validation_error("sample_frame: need 0 <= k <= n");
  if (k == 0) return {};
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> raw;
    raw.reserve(k);
    for (int i = 0; i < k; ++i) raw.push_back(rng.gaussian_vec(n));
    auto basis = gram_schmidt(raw, 1e-8);
    if (static_cast<int>(basis.size()) == k) return basis;
  }
  throw numeric_error("sample_frame: repeated rank deficiency");
}

std::vector<Vec> complement_basis(const std::vector<Vec>& frame, int n) {
  std::vector<Vec> vs = frame;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    vs.push_back(e);
  }
  auto full = gram_schmidt(vs, 1e-10);
  return {full.begin() + static_cast<long>(frame.size()), full.end()};
}

bool frame_orthonormal(const std::vector<Vec>& frame, double tol) {
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = i; j < frame.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::fabs(dot(frame[i], frame[j]) - target) >= tol) return false;
    }
  return true;
}

}  // namespace lkz
