#include "widthlab/widths.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "widthlab/errors.hpp"

namespace widthlab::widths {

namespace {
constexpr double kDegeneracyCut = 1e-13;  // sigma below this (rel. to max) counts as zero
}

void FiniteSection::validate() const {
  if (matrix.rows() < 1 || matrix.rows() != matrix.cols())
    throw config_error("FiniteSection: matrix must be square and nonempty");
  if (source_weights.size() != matrix.cols() || target_weights.size() != matrix.rows())
    throw config_error("FiniteSection: weight lengths do not match the matrix");
  if (!matrix.allFinite()) throw config_error("FiniteSection: non-finite matrix entries");
  if ((source_weights.array() <= 0.0).any() || (target_weights.array() <= 0.0).any())
    throw config_error("FiniteSection: weights must be strictly positive");
}

bool FiniteSection::is_diagonal() const {
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < matrix.cols(); ++j)
      if (i != j && matrix(i, j) != 0.0) return false;
  return true;
}

Eigen::MatrixXd FiniteSection::weighted() const {
  return target_weights.asDiagonal() * matrix *
         source_weights.cwiseInverse().asDiagonal();
}

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::linear: return "linear";
    case CurveKind::bernstein: return "bernstein";
    case CurveKind::nterm: return "nterm";
    case CurveKind::sampling: return "sampling";
  }
  return "?";
}

WidthCurve::WidthCurve(CurveKind kind, std::vector<std::pair<int, double>> samples,
                       std::string problem, double t, Eigen::Index truncation)
    : kind_(kind), samples_(std::move(samples)), problem_(std::move(problem)), t_(t),
      truncation_(truncation) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].second) || samples_[i].second < 0.0)
      throw config_error("WidthCurve: values must be finite and nonnegative");
    if (i > 0) {
      if (samples_[i].first <= samples_[i - 1].first)
        throw config_error("WidthCurve: n must be strictly increasing");
      if (samples_[i].second > samples_[i - 1].second * (1.0 + 1e-12))
        throw config_error("WidthCurve: values must be nonincreasing in n");
    }
  }
}

bool WidthCurve::has(int n) const {
  for (const auto& s : samples_)
    if (s.first == n) return true;
  return false;
}

double WidthCurve::value_at(int n) const {
  for (const auto& s : samples_)
    if (s.first == n) return s.second;
  throw std::out_of_range("WidthCurve: no sample at n = " + std::to_string(n));
}

std::vector<double> weighted_singular_values(const FiniteSection& section) {
  section.validate();
  const Eigen::MatrixXd W = section.weighted();
  Eigen::VectorXd sv;
  if (W.rows() <= 64) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(W);
    sv = svd.singularValues();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(W);
    sv = svd.singularValues();
  }
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

namespace {

std::vector<std::pair<int, double>> sv_samples(const std::vector<double>& sv, int first_n,
                                               int n_max, int shift) {
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(n_max - first_n + 1));
  for (int n = first_n; n <= n_max; ++n)
    out.emplace_back(n, sv[static_cast<std::size_t>(n + shift)]);
  return out;
}

void check_truncation_dominance(const FiniteSection& section, const std::vector<double>& sv,
                                int n_max) {
  if (section.is_diagonal()) return;  // leading singular values are exact
  const double tail = sv.back();
  const double lead = sv[static_cast<std::size_t>(n_max) + 1];
  if (tail >= 0.1 * lead) {
    std::ostringstream os;
    os << "truncation dominance violated: sigma_N = " << tail << " vs sigma_{n_max+1}/10 = "
       << 0.1 * lead << "; enlarge the section";
    throw truncation_error(os.str());
  }
}

}  // namespace

WidthCurve approximation_numbers(const FiniteSection& section, int n_max, std::string problem,
                                 double t) {
  if (n_max < 0 || n_max >= section.size())
    throw config_error("approximation_numbers: need 0 <= n_max < N");
  const auto sv = weighted_singular_values(section);
  check_truncation_dominance(section, sv, n_max);
  return WidthCurve(CurveKind::linear, sv_samples(sv, 0, n_max, 1), std::move(problem), t,
                    section.size());
}

WidthCurve bernstein_widths(const FiniteSection& section, int n_max, std::string problem,
                            double t) {
  if (n_max < 0 || n_max >= section.size())
    throw config_error("bernstein_widths: need 0 <= n_max < N");
  const auto sv = weighted_singular_values(section);
  if (sv.back() < kDegeneracyCut * sv.front())
    throw degeneracy_error("bernstein_widths: section is numerically singular");
  return WidthCurve(CurveKind::bernstein, sv_samples(sv, 0, n_max, 1), std::move(problem), t,
                    section.size());
}

WidthCurve bernstein_widths_variant(const FiniteSection& section, int n_max, std::string problem,
                                    double t) {
  if (n_max < 1 || n_max > section.size())
    throw config_error("bernstein_widths_variant: need 1 <= n_max <= N");
  const auto sv = weighted_singular_values(section);
  if (sv.back() < kDegeneracyCut * sv.front())
    throw degeneracy_error("bernstein_widths_variant: section is numerically singular");
  return WidthCurve(CurveKind::bernstein, sv_samples(sv, 1, n_max, -1), std::move(problem), t,
                    section.size());
}

double bernstein_rayleigh(const FiniteSection& section, const Eigen::MatrixXd& subspace) {
  section.validate();
  if (subspace.rows() != section.size() || subspace.cols() < 1)
    throw config_error("bernstein_rayleigh: bad subspace shape");
  // Orthonormalize in the weighted source metric, then the infimum of the
  // quotient is the smallest singular value of the weighted image.
  const Eigen::MatrixXd B = section.source_weights.asDiagonal() * subspace;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(B);
  const Eigen::MatrixXd Q =
      qr.householderQ() * Eigen::MatrixXd::Identity(B.rows(), subspace.cols());
  const Eigen::MatrixXd A = section.weighted() * Q;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
  return svd.singularValues().minCoeff();
}

Eigen::MatrixXd top_singular_subspace(const FiniteSection& section, int dim) {
  section.validate();
  if (dim < 1 || dim > section.size())
    throw config_error("top_singular_subspace: bad dimension");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(section.weighted(), Eigen::ComputeThinV);
  const Eigen::MatrixXd V = svd.matrixV().leftCols(dim);
  return section.source_weights.cwiseInverse().asDiagonal() * V;
}

int theorem1_m(double C, int n) {
  if (C < 1.0) throw config_error("condition must satisfy C >= 1");
  return static_cast<int>(std::ceil(4.0 * C * C * n));
}

double nonlinear_width_lower_bound(const WidthCurve& bernstein, double C, int n) {
  if (n < 0) throw config_error("nonlinear_width_lower_bound: n must be nonnegative");
  const int m = theorem1_m(C, n);
  if (!bernstein.has(m))
    throw std::out_of_range("nonlinear_width_lower_bound: Bernstein curve has no sample at m = " +
                            std::to_string(m));
  return bernstein.value_at(m) / (2.0 * C);
}

}  // namespace widthlab::widths
