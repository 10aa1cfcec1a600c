#pragma once

#include <string>
#include <utility>
#include <vector>

#include "widthlab/widths.hpp"

namespace widthlab::rates {

// Least-squares fit of log(value) against log(n) over a doubling-spaced
// subset of the samples inside [n_min, n_max].
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_min = 0;
  int n_max = 0;
  int points = 0;
};

RateFit fit_rate(const widths::WidthCurve& curve, int n_min, int n_max);

// Ratios value(n) / value(2n) for every sample whose double is present.
std::vector<std::pair<int, double>> dyadic_ratio_test(const widths::WidthCurve& curve);

enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

enum class Sidedness {
  two_sided,   // asymptotic equivalence: |slope - predicted| <= margin
  upper_bound  // decay at least as fast: slope <= predicted + margin
};

// R^2 below 0.95 is inconclusive; otherwise the margin rule applies.
Verdict judge_theorem(const RateFit& fit, double predicted_exponent, double epsilon_margin,
                      Sidedness sidedness);

// Decay exponent of the best n-term upper bound for the general-domain
// Poisson solution at source smoothness t in dimension d >= 2:
// t/d for t <= 1/2, (t+1)/(3d) up to t = (d+2)/(2(d-1)), d/(2d(d-1)) beyond.
double nterm_upper_branch_exponent(double t, int d);

}  // namespace widthlab::rates
