#include "widthlab/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "widthlab/errors.hpp"
#include "widthlab/kernels.hpp"

namespace widthlab::bases {

double SobolevWeight::operator()(const WaveletIndex& idx) const {
  if (basis == BasisKind::sine) {
    const double k = std::sqrt(double(idx.tx) * idx.tx + double(idx.ty) * idx.ty);
    return std::pow(std::numbers::pi * k, s);
  }
  return std::exp2(s * idx.level);
}

double sequence_norm(const CoeffVector& coeffs, const SobolevWeight& weight) {
  std::vector<double> w(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) w[i] = weight(coeffs.index(i));
  return std::sqrt(kernels::weighted_sumsq(w, coeffs.values()));
}

double besov_norm(const CoeffVector& coeffs, double s, double p, double q, int d) {
  if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error("besov_norm: p, q must be positive");
  const bool p_inf = std::isinf(p);
  const bool q_inf = std::isinf(q);
  const double inv_p = p_inf ? 0.0 : 1.0 / p;

  // Entries are sorted level-major, so one pass groups them.
  double outer = 0.0;   // lq accumulation over levels
  double outer_max = 0.0;
  std::size_t i = 0;
  while (i < coeffs.size()) {
    const int j = coeffs.index(i).level;
    double inner = 0.0;  // lp over the level
    double inner_max = 0.0;
    for (; i < coeffs.size() && coeffs.index(i).level == j; ++i) {
      const double a = std::abs(coeffs.value(i));
      if (p_inf)
        inner_max = std::max(inner_max, a);
      else
        inner += std::pow(a, p);
    }
    const double level_lp = p_inf ? inner_max : std::pow(inner, inv_p);
    const double scaled = std::exp2(j * (s + d * (0.5 - inv_p))) * level_lp;
    if (q_inf)
      outer_max = std::max(outer_max, scaled);
    else
      outer += std::pow(scaled, q);
  }
  return q_inf ? outer_max : std::pow(outer, 1.0 / q);
}

}  // namespace widthlab::bases
