#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "widthlab/basis.hpp"
#include "widthlab/riesz.hpp"
#include "widthlab/wavelet_index.hpp"

namespace widthlab::bases {

// Spectral realization of H^s(0,1): a function is identified with its
// coefficients against the L2-normalized sine system e_k = sqrt(2) sin(k pi x)
// and |f|_{H^s}^2 := sum_{k <= modes} (k pi)^{2s} <f, e_k>^2.  Truncation at
// `modes` is part of the definition; it makes the norm of any finitely
// represented object exactly computable.  Against this norm the Haar system
// is genuinely non-orthogonal, which is what the measured Riesz bounds and
// the certified n-term bands exercise.
class SpectralNorm {
public:
  SpectralNorm(double s, int modes);

  double smoothness() const { return s_; }
  int modes() const { return modes_; }

  // Exact <e_k, h_idx> for an interval Haar function.
  static double haar_overlap(int k, const WaveletIndex& idx);

  // K x M matrix A, A(k, m) = (k pi)^s <e_k, 2^{-j(m) s} h_m>; columns run
  // over the canonical enumeration of the interval Haar basis at max_level.
  Eigen::MatrixXd weighted_overlap(int max_level) const;

  double norm_of_sine_coeffs(std::span<const double> u) const;

private:
  double s_;
  int modes_;
};

// Interval Haar system of a fixed truncation, measured in a SpectralNorm.
// Caches the weighted overlap matrix and the Gram of the rescaled system;
// immutable after construction and safe to share.
class HaarSpectralFrame {
public:
  HaarSpectralFrame(double s, int modes, int max_level);

  const SpectralNorm& norm() const { return norm_; }
  int max_level() const { return max_level_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<WaveletIndex>& index_order() const { return order_; }
  double rescale_weight(std::size_t m) const;  // 2^{j(m) s}

  const Eigen::MatrixXd& gram() const { return gram_; }
  RieszBounds bounds() const { return bounds_; }

  // |sum_m x_m 2^{-j s} h_m|_{H^s} for rescaled coordinates x.
  double norm_rescaled(const Eigen::VectorXd& x) const;

  // Unrescaled Haar coefficients <e_k, h_m> of one sine mode, in column order.
  Eigen::VectorXd haar_coeffs_of_sine(int k) const;

private:
  SpectralNorm norm_;
  int max_level_;
  std::vector<WaveletIndex> order_;
  Eigen::MatrixXd overlap_;  // weighted, K x M
  Eigen::MatrixXd gram_;     // M x M
  RieszBounds bounds_;
};

}  // namespace widthlab::bases
