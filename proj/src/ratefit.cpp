#include "widthlab/ratefit.hpp"

#include <cmath>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab::rates {

RateFit fit_rate(const widths::WidthCurve& curve, int n_min, int n_max) {
  if (n_min < 1 || n_max < n_min) throw config_error("fit_rate: bad window");
  // doubling-spaced subset, greedily from the smallest admitted n
  std::vector<std::pair<int, double>> pts;
  int last = 0;
  for (const auto& [n, v] : curve.samples()) {
    if (n < n_min || n > n_max) continue;
    if (!pts.empty() && n < 2 * last) continue;
    if (!(v > 0.0))
      throw std::domain_error(
          "fit_rate: nonpositive value in window (exact representation reached?)");
    pts.emplace_back(n, v);
    last = n;
  }
  if (pts.size() < 4) throw config_error("fit_rate: need at least 4 samples in the window");

  double sx = 0.0, sy = 0.0;
  for (const auto& [n, v] : pts) {
    sx += std::log(double(n));
    sy += std::log(v);
  }
  const double mx = sx / double(pts.size());
  const double my = sy / double(pts.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [n, v] : pts) {
    const double dx = std::log(double(n)) - mx;
    const double dy = std::log(v) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_min = pts.front().first;
  fit.n_max = pts.back().first;
  fit.points = static_cast<int>(pts.size());
  if (syy < 1e-30) {
    fit.r_squared = 1.0;  // constant data: the flat fit is exact
  } else {
    double ss_res = 0.0;
    for (const auto& [n, v] : pts) {
      const double r = std::log(v) - (fit.intercept + fit.slope * std::log(double(n)));
      ss_res += r * r;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

std::vector<std::pair<int, double>> dyadic_ratio_test(const widths::WidthCurve& curve) {
  std::vector<std::pair<int, double>> out;
  for (const auto& [n, v] : curve.samples()) {
    if (n < 1 || !curve.has(2 * n)) continue;  // missing pair: skipped
    out.emplace_back(n, v / curve.value_at(2 * n));
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict judge_theorem(const RateFit& fit, double predicted_exponent, double epsilon_margin,
                      Sidedness sidedness) {
  if (fit.r_squared < 0.95) return Verdict::inconclusive;
  if (sidedness == Sidedness::two_sided)
    return std::abs(fit.slope - predicted_exponent) <= epsilon_margin ? Verdict::pass
                                                                      : Verdict::fail;
  return fit.slope <= predicted_exponent + epsilon_margin ? Verdict::pass : Verdict::fail;
}

double nterm_upper_branch_exponent(double t, int d) {
  if (d < 2) throw config_error("nterm_upper_branch_exponent: defined for d >= 2");
  if (!(t > 0.0)) throw config_error("nterm_upper_branch_exponent: t must be positive");
  const double branch_point = (d + 2.0) / (2.0 * (d - 1.0));
  if (t <= 0.5) return t / d;
  if (t <= branch_point) return (t + 1.0) / (3.0 * d);
  return double(d) / (2.0 * d * (d - 1.0));
}

}  // namespace widthlab::rates
