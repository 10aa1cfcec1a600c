#include "widthlab/riesz.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab::bases {

RieszBounds::RieszBounds(double a, double b) : lower(a), upper(b), condition(b / a) {
  if (!(a > 0.0) || b < a) throw config_error("RieszBounds: need 0 < A <= B");
}

RieszBounds bounds_from_gram(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw numerical_error("bounds_from_gram: eigensolver failed");
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) {
    std::ostringstream os;
    os << "bounds_from_gram: Gram not positive definite (lambda_min = " << lo
       << ", lambda_max = " << hi << ", size = " << gram.rows() << ")";
    throw numerical_error(os.str());
  }
  return RieszBounds(std::sqrt(lo), std::sqrt(hi));
}

RieszBounds riesz_bounds(const BasisDescriptor& basis, const SobolevWeight& weight,
                         int max_level) {
  (void)max_level;
  const bool diagonal_pair = (basis.kind() == BasisKind::sine && weight.basis == BasisKind::sine) ||
                             (basis.kind() == BasisKind::haar && weight.basis == BasisKind::haar);
  if (diagonal_pair) {
    // The weight rule rescales exactly this basis; the rescaled system is
    // orthonormal in the sequence norm for any truncation.
    return RieszBounds(1.0, 1.0);
  }
  throw config_error(
      "riesz_bounds: non-diagonal (basis, norm) pair; use HaarSpectralFrame for the "
      "Haar-in-spectral-H^s combination");
}

}  // namespace widthlab::bases
