#include "widthlab/problems.hpp"

#include <cmath>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab::problems {

double ModelProblem::eigenvalue(const bases::WaveletIndex& mode) const {
  if (!diagonal) throw config_error("eigenvalue rule requires a diagonal problem");
  if (identity) return 1.0;
  return basis.eigenvalue(mode);  // pi^2 |k|^2 for the sine systems
}

std::string ModelProblem::id() const {
  std::ostringstream os;
  os << (identity ? "identity" : "poisson") << "-" << bases::to_string(domain);
  return os.str();
}

ModelProblem poisson_interval(int modes) {
  return ModelProblem{bases::Domain::interval, 1.0, true, false,
                      bases::build_basis(bases::Domain::interval, bases::BasisKind::sine, modes),
                      0};
}

ModelProblem poisson_square(int modes_per_direction) {
  return ModelProblem{bases::Domain::square, 1.0, true, false,
                      bases::build_basis(bases::Domain::square, bases::BasisKind::sine,
                                         modes_per_direction),
                      0};
}

ModelProblem identity_interval(int modes) {
  return ModelProblem{bases::Domain::interval, 1.0, true, true,
                      bases::build_basis(bases::Domain::interval, bases::BasisKind::sine, modes),
                      0};
}

ModelProblem poisson_lshape(int reference_level, int haar_level) {
  if (reference_level < haar_level + 2)
    throw config_error("poisson_lshape: reference mesh level must exceed experiment level + 2");
  return ModelProblem{bases::Domain::lshape, 1.0, false, false,
                      bases::build_basis(bases::Domain::lshape, bases::BasisKind::haar,
                                         haar_level),
                      reference_level};
}

bases::CoeffVector solve_diagonal(const ModelProblem& problem, const bases::CoeffVector& f) {
  if (!problem.diagonal) throw config_error("solve_diagonal: problem is not diagonal");
  std::vector<bases::WaveletIndex> idx(f.indices().begin(), f.indices().end());
  std::vector<double> val(f.values().begin(), f.values().end());
  for (std::size_t i = 0; i < idx.size(); ++i) val[i] /= problem.eigenvalue(idx[i]);
  return bases::CoeffVector(f.domain_id(), std::move(idx), std::move(val));
}

bases::CoeffVector apply_forward(const ModelProblem& problem, const bases::CoeffVector& u) {
  if (!problem.diagonal) throw config_error("apply_forward: problem is not diagonal");
  std::vector<bases::WaveletIndex> idx(u.indices().begin(), u.indices().end());
  std::vector<double> val(u.values().begin(), u.values().end());
  for (std::size_t i = 0; i < idx.size(); ++i) val[i] *= problem.eigenvalue(idx[i]);
  return bases::CoeffVector(u.domain_id(), std::move(idx), std::move(val));
}

namespace {

widths::FiniteSection diagonal_section(const ModelProblem& problem, double source_smoothness,
                                       double target_smoothness, int N) {
  const auto modes = problem.basis.enumerate();
  if (N < 1 || static_cast<std::size_t>(N) > modes.size())
    throw config_error("operator_section: N exceeds the available truncation");
  const bases::SobolevWeight ws{source_smoothness, bases::BasisKind::sine};
  const bases::SobolevWeight wt{target_smoothness, bases::BasisKind::sine};
  widths::FiniteSection sec;
  sec.matrix = Eigen::MatrixXd::Zero(N, N);
  sec.source_weights.resize(N);
  sec.target_weights.resize(N);
  for (int i = 0; i < N; ++i) {
    const auto& mode = modes[static_cast<std::size_t>(i)];
    sec.matrix(i, i) = 1.0 / problem.eigenvalue(mode);
    sec.source_weights[i] = problem.identity ? 1.0 : ws(mode);
    sec.target_weights[i] = problem.identity ? 1.0 : wt(mode);
  }
  return sec;
}

}  // namespace

// The L-shape variant lives in lshape.cpp.
widths::FiniteSection lshape_operator_section(const ModelProblem& problem,
                                              double source_smoothness, double target_smoothness,
                                              int N);

widths::FiniteSection operator_section(const ModelProblem& problem, double source_smoothness,
                                       double target_smoothness, int N) {
  if (problem.diagonal) return diagonal_section(problem, source_smoothness, target_smoothness, N);
  return lshape_operator_section(problem, source_smoothness, target_smoothness, N);
}

std::vector<double> sample_values(const RightHandSide& f,
                                  std::span<const std::array<double, 2>> points) {
  std::vector<double> out;
  out.reserve(points.size());
  if (f.evaluator) {
    for (const auto& p : points) out.push_back(f.evaluator(p[0], p[1]));
    return out;
  }
  if (f.coeffs && f.coeff_basis) {
    const int d = f.coeff_basis->dimension();
    if (!(f.declared_smoothness > 0.5 * d))
      throw config_error(
          "sample_values: point evaluation needs declared smoothness above d/2");
    for (const auto& p : points) {
      double acc = 0.0;
      for (std::size_t i = 0; i < f.coeffs->size(); ++i)
        acc += f.coeffs->value(i) * f.coeff_basis->eval(f.coeffs->index(i), p[0], p[1]);
      out.push_back(acc);
    }
    return out;
  }
  throw capability_error("sample_values: no evaluator and no synthesizable coefficients");
}

}  // namespace widthlab::problems
