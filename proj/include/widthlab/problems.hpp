#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "widthlab/basis.hpp"
#include "widthlab/sobolev.hpp"
#include "widthlab/wavelet_index.hpp"
#include "widthlab/widths.hpp"

namespace widthlab::problems {

// Model elliptic problem with a known solution operator.  Diagonal problems
// (interval/square Poisson, identity) carry their eigenbasis and eigenvalue
// rule; the L-shape problem carries the Haar basis and a reference Galerkin
// level.
struct ModelProblem {
  bases::Domain domain;
  double s = 1.0;  // operator order parameter, 1 for Poisson
  bool diagonal = true;
  bool identity = false;  // eigenvalues identically 1 (test problem)
  bases::BasisDescriptor basis;
  int reference_level = 0;

  double eigenvalue(const bases::WaveletIndex& mode) const;
  std::string id() const;
};

ModelProblem poisson_interval(int modes);
ModelProblem poisson_square(int modes_per_direction);
ModelProblem identity_interval(int modes);
ModelProblem poisson_lshape(int reference_level, int haar_level);

// u_k = f_k / eigenvalue(k) in the eigenbasis.
bases::CoeffVector solve_diagonal(const ModelProblem& problem, const bases::CoeffVector& f);
// f_k = eigenvalue(k) u_k (round-trip checks).
bases::CoeffVector apply_forward(const ModelProblem& problem, const bases::CoeffVector& u);

// Finite section of the solution operator from the H^{source_smoothness}
// sequence-norm unit ball into the H^{target_smoothness} sequence norm.
widths::FiniteSection operator_section(const ModelProblem& problem, double source_smoothness,
                                       double target_smoothness, int N);

// Right-hand side: spectral coefficients, a point evaluator, or both.
struct RightHandSide {
  std::optional<bases::CoeffVector> coeffs;
  std::optional<bases::BasisDescriptor> coeff_basis;  // synthesis rule for coeffs
  std::function<double(double, double)> evaluator;
  double declared_smoothness = 0.0;  // order of the space the data lives in
};

// Exact point values (standard information).  Closed-form evaluators are
// used directly; coefficient-only data is synthesized through its basis,
// which requires declared smoothness > d/2 for point values to be
// meaningful.
std::vector<double> sample_values(const RightHandSide& f,
                                  std::span<const std::array<double, 2>> points);

}  // namespace widthlab::problems
