#pragma once

#include <Eigen/Core>

#include "widthlab/basis.hpp"
#include "widthlab/sobolev.hpp"

namespace widthlab::bases {

// Two-sided l2 norm-equivalence constants of a Riesz basis.
struct RieszBounds {
  double lower = 1.0;      // A
  double upper = 1.0;      // B
  double condition = 1.0;  // C = B / A

  RieszBounds() = default;
  RieszBounds(double a, double b);
};

// A = sqrt(lambda_min), B = sqrt(lambda_max) of a symmetric Gram matrix.
// Throws numerical_error with a condition report if the matrix is not
// numerically positive definite.
RieszBounds bounds_from_gram(const Eigen::MatrixXd& gram);

// Riesz bounds of the basis rescaled to the given sequence norm, valid for
// all coefficient vectors supported on levels <= max_level (Haar) or the
// full mode range (sine).  For a diagonal (basis, weight) pair the rescaled
// system is orthonormal and the bounds are exactly (1, 1); measuring the
// Haar system in a non-diagonal norm goes through HaarSpectralFrame.
RieszBounds riesz_bounds(const BasisDescriptor& basis, const SobolevWeight& weight,
                         int max_level);

}  // namespace widthlab::bases
