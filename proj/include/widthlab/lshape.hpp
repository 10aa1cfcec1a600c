#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "widthlab/galerkin.hpp"
#include "widthlab/problems.hpp"
#include "widthlab/singular.hpp"
#include "widthlab/wavelet_index.hpp"

namespace widthlab::problems {

// Manufactured L-shape solution u = u_regular + sum c * S_{l,m}.
struct ManufacturedLShape {
  std::function<double(double, double)> u_regular;  // may be empty
  std::vector<std::pair<SingularFunction, double>> singular;

  double eval(double x, double y) const;
};

// Polynomial regular part 2 x y (1 - x^2)(1 - y^2): smooth on the whole
// plane and zero on every edge of the L-shape (the reentrant edges lie on
// the axes).
double polynomial_regular_part(double x, double y);

ManufacturedLShape default_manufactured(double singular_coefficient);

// Haar coefficients of a function on the L-shape: one pyramid per unit
// square, each holding all coefficients up to `level`.
struct LShapeCoeffs {
  int level = 0;
  std::array<std::vector<double>, 3> pyramid;

  std::size_t total() const;
  double coeff(const bases::WaveletIndex& idx) const;
  bases::CoeffVector to_coeff_vector(const bases::BasisDescriptor& basis) const;
};

// Integrals of f over the 4^level cells of one unit patch, row-major (iy,
// ix) local ordering.  With grading, cells near the reentrant corner are
// subdivided dyadically towards it (resolves r^lambda integrands); cells
// outside `support_radius` from the corner are skipped entirely when it is
// positive.
std::vector<double> cell_integrals_callable(const std::function<double(double, double)>& f,
                                            int square, int level, bool graded,
                                            double support_radius = 0.0);

LShapeCoeffs analyze_manufactured(const ManufacturedLShape& u, int haar_level);
LShapeCoeffs analyze_p1(const fem::LShapeP1::Solution& u, int haar_level);

// Manufactured mode: the solution is prescribed; returns its Haar
// coefficients up to haar_level.
bases::CoeffVector lshape_solution_manufactured(const ManufacturedLShape& u, int haar_level);

// Black-box mode: f given, u computed by conforming P1 Galerkin on the
// uniformly refined reference mesh.  Requires reference_level >= haar_level + 2.
bases::CoeffVector lshape_solution_blackbox(const RightHandSide& f, int reference_level,
                                            int haar_level);

// Binary coefficient dump with a version header, for regression baselines.
void write_coeff_dump(const std::string& path, const bases::CoeffVector& coeffs);
bases::CoeffVector read_coeff_dump(const std::string& path);

}  // namespace widthlab::problems
