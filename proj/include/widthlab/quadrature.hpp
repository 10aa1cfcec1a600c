#pragma once

#include <functional>
#include <vector>

namespace widthlab::quad {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
  explicit GaussLegendre(int n);
};

using Fn1 = std::function<double(double)>;
using Fn2 = std::function<double(double, double)>;

double integrate(const Fn1& f, double a, double b, int n = 8);

// Tensor rule over an axis-aligned cell [x0, x0+size] x [y0, y0+size].
double integrate_cell(const Fn2& f, double x0, double y0, double size, int n = 4);

// Cell integration with dyadic grading towards the corner at the origin:
// cells close to the origin (relative to their size) are split recursively
// so that r^lambda-type integrands are resolved.
double integrate_cell_graded(const Fn2& f, double x0, double y0, double size, int n = 4,
                             int max_depth = 24);

// Polar quadrature over the sector {0 < r < radius, theta0 < theta < theta1}
// with geometrically graded radial panels (factor 1/2) and a tensor
// Gauss-Legendre rule per panel.  f takes (r, theta); the r measure factor is
// applied internally.
double integrate_sector(const Fn2& f_polar, double radius, double theta0, double theta1,
                        int panels = 12, int n_per_panel = 8);

}  // namespace widthlab::quad
