#pragma once

#include <numbers>

namespace widthlab::problems {

// C^2 radial cutoff: 1 for r <= rho/2, a quintic smoothstep complement on
// (rho/2, rho), 0 for r >= rho.
double cutoff_c2(double r, double rho);

// Corner singularity function zeta(r) r^lambda sin(m pi theta / omega) in
// polar coordinates attached to a polygon corner; the log variant applies
// when lambda = m pi / omega is an integer.  The default corner is the
// reentrant corner of the L-shape at the origin (omega = 3 pi / 2, theta
// measured counterclockwise from the positive x-axis).
struct SingularFunction {
  int corner = 0;
  int mode = 1;
  double omega = 1.5 * std::numbers::pi;
  double cutoff_radius = 0.25;  // 1/4 of the shortest edge of the L-shape

  double exponent() const { return mode * std::numbers::pi / omega; }
  bool log_variant() const;

  // Value from polar data; no domain membership check.
  double eval_polar(double r, double theta) const;

  // Value at a Cartesian point of the L-shape.  Points outside the closed
  // domain raise std::domain_error; boundary points evaluate to their limit.
  double eval(double x, double y) const;
};

}  // namespace widthlab::problems
