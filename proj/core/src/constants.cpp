#include "lkzeta/constants.hpp"

#include <string>

#include "lkzeta/errors.hpp"

namespace lkz {

double unit_ball_volume(int i) {
  if (i < 0) throw validation_error("unit_ball_volume: negative dimension");
  return std::pow(kPi, 0.5 * i) / std::tgamma(0.5 * i + 1.0);
}

double sphere_surface(int i) {
  if (i < 0) throw validation_error("sphere_surface: negative dimension");
  return (i + 1) * unit_ball_volume(i + 1);
}

double crofton_constant(int d, int n) {
  if (d < 0 || n < 0 || d > n)
    throw validation_error("crofton_constant: need 0 <= d <= n, got d=" +
                           std::to_string(d) + " n=" + std::to_string(n));
  const double lg = std::lgamma(0.5 * (n - d + 1)) + std::lgamma(0.5 * (d + 1)) -
                    std::lgamma(0.5 * (n + 1)) - std::lgamma(0.5);
  return std::exp(lg);
}

double ensure_finite(double x, const char* where) {
  if (!std::isfinite(x))
    throw numeric_error(std::string("non-finite value in ") + where);
  return x;
}

}  // namespace lkz
