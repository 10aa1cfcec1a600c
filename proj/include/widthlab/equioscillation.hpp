#pragma once

#include <Eigen/Core>
#include <functional>
#include <vector>

#include "widthlab/riesz.hpp"

namespace widthlab::widths {

// Extremal vector of an n-dimensional subspace of R^N in the sup norm:
// |y|_inf = 1 with at least n coordinates at absolute value 1.  Found by
// exhaustive sign-pattern search: for every choice of n coordinates and
// signs, solve the n x n system pinning those coordinates and accept when
// the sup norm is attained there.  Combinatorial by construction; dimension
// capped at n <= 6, N <= 16.
struct EquioscillationResult {
  Eigen::VectorXd y;
  std::vector<int> active;  // coordinates with |y_i| = 1 within tolerance
  double residual = 0.0;    // sup-norm excess of the accepted candidate
};

EquioscillationResult equioscillation_point(const Eigen::MatrixXd& subspace, double tol = 1e-9);

// Certificate A sqrt(n) |y|_inf <= |sum_i y_i h_i|_H + tol for a coefficient
// vector against a Riesz basis with lower constant A; returns both sides.
struct Lemma3Report {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

Lemma3Report lemma3_certificate(const Eigen::VectorXd& y, const bases::RieszBounds& bounds,
                                int n,
                                const std::function<double(const Eigen::VectorXd&)>& target_norm,
                                double tol = 1e-9);

}  // namespace widthlab::widths
