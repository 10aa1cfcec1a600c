#include "widthlab/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "widthlab/errors.hpp"

namespace widthlab::quad {

GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw config_error("GaussLegendre: order must be positive");
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n, initial guesses from the Chebyshev angles.
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p0, p1;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double integrate(const Fn1& f, double a, double b, int n) {
  const GaussLegendre gl(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return acc * half;
}

double integrate_cell(const Fn2& f, double x0, double y0, double size, int n) {
  const GaussLegendre gl(n);
  const double half = 0.5 * size;
  const double cx = x0 + half;
  const double cy = y0 + half;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = cx + half * gl.nodes[i];
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += gl.weights[j] * f(x, cy + half * gl.nodes[j]);
    acc += gl.weights[i] * row;
  }
  return acc * half * half;
}

namespace {

double graded_rec(const Fn2& f, double x0, double y0, double size, int n, int depth) {
  // distance of the nearest cell corner from the origin
  const double ax = std::min(std::abs(x0), std::abs(x0 + size));
  const double ay = std::min(std::abs(y0), std::abs(y0 + size));
  const bool spans_x = x0 < 0.0 && x0 + size > 0.0;
  const bool spans_y = y0 < 0.0 && y0 + size > 0.0;
  const double rx = spans_x ? 0.0 : ax;
  const double ry = spans_y ? 0.0 : ay;
  const double r = std::hypot(rx, ry);
  if (depth > 0 && r < 4.0 * size) {
    const double h = 0.5 * size;
    return graded_rec(f, x0, y0, h, n, depth - 1) + graded_rec(f, x0 + h, y0, h, n, depth - 1) +
           graded_rec(f, x0, y0 + h, h, n, depth - 1) +
           graded_rec(f, x0 + h, y0 + h, h, n, depth - 1);
  }
  return integrate_cell(f, x0, y0, size, n);
}

}  // namespace

double integrate_cell_graded(const Fn2& f, double x0, double y0, double size, int n,
                             int max_depth) {
  return graded_rec(f, x0, y0, size, n, max_depth);
}

double integrate_sector(const Fn2& f_polar, double radius, double theta0, double theta1,
                        int panels, int n_per_panel) {
  const GaussLegendre gl(n_per_panel);
  double acc = 0.0;
  double outer = radius;
  for (int p = 0; p < panels; ++p) {
    const double inner = (p + 1 == panels) ? 0.0 : outer * 0.5;
    const double rmid = 0.5 * (outer + inner);
    const double rhal = 0.5 * (outer - inner);
    const double tmid = 0.5 * (theta1 + theta0);
    const double thal = 0.5 * (theta1 - theta0);
    for (int i = 0; i < n_per_panel; ++i) {
      const double r = rmid + rhal * gl.nodes[i];
      double row = 0.0;
      for (int j = 0; j < n_per_panel; ++j) {
        const double th = tmid + thal * gl.nodes[j];
        row += gl.weights[j] * f_polar(r, th);
      }
      acc += gl.weights[i] * row * r * rhal * thal;
    }
    outer = inner;
  }
  return acc;
}

}  // namespace widthlab::quad
