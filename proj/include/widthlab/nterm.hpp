#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "widthlab/problems.hpp"
#include "widthlab/riesz.hpp"
#include "widthlab/sobolev.hpp"
#include "widthlab/spectral_norm.hpp"
#include "widthlab/wavelet_index.hpp"
#include "widthlab/widths.hpp"

namespace widthlab::nterm {

// Best n-term approximation with respect to a fixed basis: keep the n
// largest norm-weighted coefficients, ties broken by canonical index order.
// The tail in the weighted sequence norm brackets the true target-norm error
// through the Riesz bounds: error in [A, B] * tail.
struct NTermResult {
  std::vector<std::pair<bases::WaveletIndex, double>> kept;
  int n = 0;
  double error = 0.0;
  std::pair<double, double> certified_band{0.0, 0.0};
};

NTermResult best_n_term(const bases::CoeffVector& u, int n, const bases::SobolevWeight& weight,
                        const bases::RieszBounds& bounds);

// Same greedy rule in the rescaled coordinates of a Haar-in-spectral-norm
// frame; the error is the true (Gram) norm of the tail and must land inside
// the certified band.
struct FramedNTermResult {
  std::vector<int> kept;  // positions in the frame's index order
  int n = 0;
  double error = 0.0;
  std::pair<double, double> certified_band{0.0, 0.0};
};

FramedNTermResult best_n_term_framed(const Eigen::VectorXd& rescaled_coeffs, int n,
                                     const bases::HaarSpectralFrame& frame);

widths::WidthCurve nterm_error_curve(const bases::CoeffVector& u, std::span<const int> n_list,
                                     const bases::SobolevWeight& weight,
                                     const bases::RieszBounds& bounds, std::string problem = "",
                                     double t = 0.0);

// Tail curve straight from an array of norm-weighted magnitudes (the fast
// path for multi-million coefficient sets; equivalent to nterm_error_curve
// with A = B = 1).
widths::WidthCurve tail_curve_from_weighted(std::vector<double> weighted_magnitudes,
                                            std::span<const int> n_list, std::string problem,
                                            double t, Eigen::Index truncation);

enum class Scheme { linear_first_n, best_n_term };

// Exact worst case over the unit source ball for diagonal problems
// approximated in their own eigenbasis.  The linear rule keeps the first n
// modes (worst case sigma_{n+1}); the n-term rule concentrates on a
// prefix-equalized extremal load, scanned exactly.
widths::WidthCurve worst_case_over_ball(const problems::ModelProblem& problem, double t,
                                        std::span<const int> n_list, Scheme scheme);

// Empirical lower estimate: the maximum over seeded random unit-norm
// right-hand sides.  Never exceeds the analytic worst case.
widths::WidthCurve empirical_worst_case(const problems::ModelProblem& problem, double t,
                                        std::span<const int> n_list, Scheme scheme,
                                        int sample_count, std::uint64_t seed);

}  // namespace widthlab::nterm
