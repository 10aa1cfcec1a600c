#include "widthlab/singular.hpp"

#include <cmath>

#include "doctest.h"
#include "widthlab/quadrature.hpp"

using namespace widthlab;
using namespace widthlab::problems;

TEST_CASE("reentrant exponent and base values") {
  SingularFunction s;  // omega = 3 pi / 2, m = 1
  CHECK(s.exponent() == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(!s.log_variant());

  CHECK(s.eval_polar(0.0, 1.0) == 0.0);  // r = 0
  // (r, theta) = (rho/2, 3 pi / 4): cutoff still 1 there, sine factor 1
  const double r = 0.5 * s.cutoff_radius;
  CHECK(s.eval_polar(r, 0.75 * M_PI) == doctest::Approx(std::pow(r, 2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("vanishes on both corner edges") {
  SingularFunction s;
  for (double r : {1e-3, 0.05, 0.12}) {
    CHECK(std::abs(s.eval_polar(r, 0.0)) <= 1e-12);                // theta = 0
    CHECK(std::abs(s.eval_polar(r, 1.5 * M_PI)) <= 1e-12);        // theta = omega
    CHECK(std::abs(s.eval(r, 0.0)) <= 1e-12);                      // on the +x edge
    CHECK(std::abs(s.eval(0.0, -r)) <= 1e-12);                     // on the -y edge
  }
}

TEST_CASE("cutoff profile") {
  const double rho = 0.25;
  CHECK(cutoff_c2(0.0, rho) == 1.0);
  CHECK(cutoff_c2(0.5 * rho, rho) == 1.0);
  CHECK(cutoff_c2(rho, rho) == 0.0);
  CHECK(cutoff_c2(2.0 * rho, rho) == 0.0);
  // monotone decline in between, continuous at the seams
  double prev = 1.0;
  for (int i = 1; i <= 100; ++i) {
    const double r = 0.5 * rho + 0.5 * rho * i / 100.0;
    const double v = cutoff_c2(r, rho);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  CHECK(cutoff_c2(0.5 * rho + 1e-9, rho) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cutoff_c2(rho - 1e-9, rho) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("domain membership errors") {
  SingularFunction s;
  CHECK_THROWS_AS(s.eval(0.5, -0.5), std::domain_error);  // removed quadrant
  CHECK_THROWS_AS(s.eval(1.5, 0.5), std::domain_error);
  CHECK(s.eval(0.0, 0.0) == 0.0);  // the corner itself
}

TEST_CASE("log variant at integer exponents") {
  SingularFunction s;
  s.omega = 0.5 * M_PI;  // convex corner: lambda = 2m
  s.mode = 1;
  CHECK(s.exponent() == doctest::Approx(2.0));
  CHECK(s.log_variant());
  // r^2 (log r sin(2 theta) + theta cos(2 theta)) inside the plateau
  const double r = 0.05, th = 0.3;
  const double expect = r * r * (std::log(r) * std::sin(2 * th) + th * std::cos(2 * th));
  CHECK(s.eval_polar(r, th) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("harmonicity of r^{2/3} sin(2 theta / 3) by quadrature residual") {
  // integrate u * laplace(phi) over a box inside the cutoff plateau, with a
  // polynomial bump phi; both factors are analytic there, so the tensor
  // Gauss rule resolves the integral to roundoff.
  const double a = 0.02, b = 0.08;
  const auto bump = [&](double t) {
    const double xi = (2.0 * t - (a + b)) / (b - a);
    const double u = 1.0 - xi * xi;
    return u > 0.0 ? std::pow(u, 8) : 0.0;
  };
  const auto bump_dd = [&](double t) {
    const double j = 2.0 / (b - a);
    const double xi = (2.0 * t - (a + b)) / (b - a);
    const double u = 1.0 - xi * xi;
    if (u <= 0.0) return 0.0;
    // d^2/dxi^2 (u^8) = 8 u^6 (14 xi^2 u^0... ) expanded:
    // d/dxi u^8 = -16 xi u^7; d^2/dxi^2 = -16 u^7 + 224 xi^2 u^6
    return (-16.0 * std::pow(u, 7) + 224.0 * xi * xi * std::pow(u, 6)) * j * j;
  };
  const auto u_exact = [](double x, double y) {
    const double r = std::hypot(x, y);
    double th = std::atan2(y, x);
    if (th < 0) th += 2 * M_PI;
    return std::pow(r, 2.0 / 3.0) * std::sin(2.0 * th / 3.0);
  };

  const auto integrand = [&](double x, double y) {
    const double lap_phi = bump_dd(x) * bump(y) + bump(x) * bump_dd(y);
    return u_exact(x, y) * lap_phi;
  };
  const double residual = quad::integrate_cell(integrand, a, a, b - a, 64);
  double scale = quad::integrate_cell(
      [&](double x, double y) { return std::abs(u_exact(x, y)) * std::abs(bump_dd(x) * bump(y)); },
      a, a, b - a, 64);
  CHECK(std::abs(residual) / scale < 1e-8);
}
