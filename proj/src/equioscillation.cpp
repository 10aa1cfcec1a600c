#include "widthlab/equioscillation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab::widths {

namespace {

// next k-combination of {0..N-1} in lexicographic order
bool next_combination(std::vector<int>& c, int N) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < N - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

EquioscillationResult equioscillation_point(const Eigen::MatrixXd& subspace, double tol) {
  const int N = static_cast<int>(subspace.rows());
  const int n = static_cast<int>(subspace.cols());
  if (n < 1 || n > N) throw config_error("equioscillation_point: need 1 <= n <= N");
  if (n > 6 || N > 16)
    throw config_error("equioscillation_point: combinatorial search capped at n <= 6, N <= 16");
  {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(subspace);
    if (lu.rank() < n)
      throw config_error("equioscillation_point: subspace columns are not independent");
  }

  Eigen::MatrixXd sub(n, n);
  Eigen::VectorXd rhs(n);
  double best_excess = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_y;

  std::vector<int> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = i;
  do {
    for (int i = 0; i < n; ++i) sub.row(i) = subspace.row(rows[i]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
    if (!lu.isInvertible()) continue;
    // sign patterns; y and -y are equivalent, so pin the first sign
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      rhs[0] = 1.0;
      for (int i = 1; i < n; ++i) rhs[i] = (mask >> (i - 1)) & 1u ? -1.0 : 1.0;
      const Eigen::VectorXd c = lu.solve(rhs);
      const Eigen::VectorXd y = subspace * c;
      const double excess = y.cwiseAbs().maxCoeff() - 1.0;
      if (excess <= tol) {
        EquioscillationResult out;
        out.y = y;
        out.residual = std::max(excess, 0.0);
        for (int i = 0; i < N; ++i)
          if (std::abs(std::abs(y[i]) - 1.0) <= tol) out.active.push_back(i);
        return out;
      }
      if (excess < best_excess) {
        best_excess = excess;
        best_y = y;
      }
    }
  } while (next_combination(rows, N));

  // No pinned candidate realized the sup norm; renormalize the best one and
  // accept it if the active set is still large enough.
  if (best_y.size() > 0) {
    const double m = best_y.cwiseAbs().maxCoeff();
    Eigen::VectorXd y = best_y / m;
    std::vector<int> active;
    for (int i = 0; i < N; ++i)
      if (std::abs(std::abs(y[i]) - 1.0) <= tol) active.push_back(static_cast<int>(i));
    if (static_cast<int>(active.size()) >= n) {
      EquioscillationResult out;
      out.y = std::move(y);
      out.active = std::move(active);
      out.residual = best_excess;
      return out;
    }
  }
  std::ostringstream os;
  os << "equioscillation_point: no certified candidate (best sup-norm excess = " << best_excess
     << "); the subspace is likely ill-conditioned";
  throw numerical_error(os.str());
}

Lemma3Report lemma3_certificate(const Eigen::VectorXd& y, const bases::RieszBounds& bounds,
                                int n,
                                const std::function<double(const Eigen::VectorXd&)>& target_norm,
                                double tol) {
  if (n < 1) throw config_error("lemma3_certificate: n must be positive");
  Lemma3Report rep;
  rep.lhs = bounds.lower * std::sqrt(double(n)) * y.cwiseAbs().maxCoeff();
  rep.rhs = target_norm(y);
  rep.holds = rep.lhs <= rep.rhs + tol;
  return rep;
}

}  // namespace widthlab::widths
