#include "widthlab/singular.hpp"

#include <cmath>
#include <stdexcept>

#include "widthlab/basis.hpp"

namespace widthlab::problems {

namespace {
constexpr double kPi = std::numbers::pi;
}

double cutoff_c2(double r, double rho) {
  if (r <= 0.5 * rho) return 1.0;
  if (r >= rho) return 0.0;
  const double sigma = (r - 0.5 * rho) / (0.5 * rho);
  return 1.0 - sigma * sigma * sigma * (10.0 - 15.0 * sigma + 6.0 * sigma * sigma);
}

bool SingularFunction::log_variant() const {
  const double lam = exponent();
  return std::abs(lam - std::round(lam)) < 1e-12;
}

double SingularFunction::eval_polar(double r, double theta) const {
  if (r <= 0.0) return 0.0;  // lambda > 0, also covers the log variant
  const double z = cutoff_c2(r, cutoff_radius);
  if (z == 0.0) return 0.0;
  const double lam = exponent();
  const double ang = mode * kPi * theta / omega;
  const double rl = std::pow(r, lam);
  if (!log_variant()) return z * rl * std::sin(ang);
  return z * rl * (std::log(r) * std::sin(ang) + theta * std::cos(ang));
}

double SingularFunction::eval(double x, double y) const {
  // closed L-shape membership (boundary allowed)
  const bool inside = x >= -1.0 && x <= 1.0 && y >= -1.0 && y <= 1.0 && !(x > 0.0 && y < 0.0);
  if (!inside) throw std::domain_error("SingularFunction::eval: point outside the L-shape");
  const double r = std::hypot(x, y);
  double theta = std::atan2(y, x);
  if (theta < 0.0) theta += 2.0 * kPi;
  return eval_polar(r, theta);
}

}  // namespace widthlab::problems
