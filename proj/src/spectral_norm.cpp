#include "widthlab/spectral_norm.hpp"

#include <cmath>
#include <numbers>

#include "widthlab/errors.hpp"
#include "widthlab/kernels.hpp"

namespace widthlab::bases {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
}

SpectralNorm::SpectralNorm(double s, int modes) : s_(s), modes_(modes) {
  if (modes < 1) throw config_error("SpectralNorm: need at least one mode");
}

double SpectralNorm::haar_overlap(int k, const WaveletIndex& idx) {
  const double kp = k * kPi;
  if (idx.kind == 0) {
    // integral of sqrt(2) sin(k pi x) over [0,1]
    return kSqrt2 * (1.0 - std::cos(kp)) / kp;
  }
  const double h = std::exp2(-double(idx.level));
  const double a = idx.tx * h;
  const double b = a + h;
  const double mid = a + 0.5 * h;
  const double scale = std::exp2(0.5 * idx.level);
  return scale * kSqrt2 * (std::cos(kp * a) + std::cos(kp * b) - 2.0 * std::cos(kp * mid)) / kp;
}

Eigen::MatrixXd SpectralNorm::weighted_overlap(int max_level) const {
  BasisDescriptor basis(Domain::interval, BasisKind::haar, max_level);
  const auto order = basis.enumerate();
  const auto M = static_cast<Eigen::Index>(order.size());
  Eigen::MatrixXd A(modes_, M);
  for (Eigen::Index m = 0; m < M; ++m) {
    const WaveletIndex& idx = order[static_cast<std::size_t>(m)];
    const double rescale = std::exp2(-s_ * idx.level);
    for (int k = 1; k <= modes_; ++k) {
      const double w = std::pow(k * kPi, s_);
      A(k - 1, m) = w * rescale * haar_overlap(k, idx);
    }
  }
  return A;
}

double SpectralNorm::norm_of_sine_coeffs(std::span<const double> u) const {
  if (u.size() > static_cast<std::size_t>(modes_))
    throw config_error("SpectralNorm: more coefficients than modes");
  std::vector<double> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::pow((double(i) + 1.0) * kPi, s_);
  return std::sqrt(kernels::weighted_sumsq(w, u));
}

HaarSpectralFrame::HaarSpectralFrame(double s, int modes, int max_level)
    : norm_(s, modes), max_level_(max_level) {
  BasisDescriptor basis(Domain::interval, BasisKind::haar, max_level);
  order_ = basis.enumerate();
  overlap_ = norm_.weighted_overlap(max_level);
  gram_.noalias() = overlap_.transpose() * overlap_;
  bounds_ = bounds_from_gram(gram_);
}

double HaarSpectralFrame::rescale_weight(std::size_t m) const {
  return std::exp2(norm_.smoothness() * order_[m].level);
}

double HaarSpectralFrame::norm_rescaled(const Eigen::VectorXd& x) const {
  return std::sqrt(x.dot(gram_ * x));
}

Eigen::VectorXd HaarSpectralFrame::haar_coeffs_of_sine(int k) const {
  Eigen::VectorXd c(static_cast<Eigen::Index>(order_.size()));
  for (std::size_t m = 0; m < order_.size(); ++m)
    c[static_cast<Eigen::Index>(m)] = SpectralNorm::haar_overlap(k, order_[m]);
  return c;
}

}  // namespace widthlab::bases
