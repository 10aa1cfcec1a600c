#pragma once

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace widthlab::widths {

// A solution operator restricted to the span of the first N modes,
// represented between weighted coordinate spaces: the source unit ball is
// { f : |diag(source_weights) f|_2 <= 1 } and errors are measured in
// |diag(target_weights) u|_2.
struct FiniteSection {
  Eigen::MatrixXd matrix;  // raw coordinates: u = matrix * f
  Eigen::VectorXd source_weights;
  Eigen::VectorXd target_weights;

  Eigen::Index size() const { return matrix.rows(); }
  void validate() const;
  bool is_diagonal() const;
  // D_target * M * D_source^{-1}
  Eigen::MatrixXd weighted() const;
};

enum class CurveKind { linear, bernstein, nterm, sampling };
const char* to_string(CurveKind k);

// (n, value) samples of one width/error curve, n strictly increasing,
// values nonincreasing and finite.
class WidthCurve {
public:
  WidthCurve(CurveKind kind, std::vector<std::pair<int, double>> samples, std::string problem,
             double t, Eigen::Index truncation);

  CurveKind kind() const { return kind_; }
  const std::vector<std::pair<int, double>>& samples() const { return samples_; }
  const std::string& problem() const { return problem_; }
  double t() const { return t_; }
  Eigen::Index truncation() const { return truncation_; }

  bool has(int n) const;
  double value_at(int n) const;  // throws std::out_of_range if absent

private:
  CurveKind kind_;
  std::vector<std::pair<int, double>> samples_;
  std::string problem_;
  double t_;
  Eigen::Index truncation_;
};

// Singular values of the weighted section, nonincreasing.
std::vector<double> weighted_singular_values(const FiniteSection& section);

// Linear widths / approximation numbers: value at n is the (n+1)-st singular
// value.  Requires n_max < N and the truncation-dominance certificate
// sigma_N < sigma_{n_max+1} / 10; exactly diagonal sections pass the
// certificate a fortiori (their leading singular values are unaffected by
// the cut) and are admitted directly.
WidthCurve approximation_numbers(const FiniteSection& section, int n_max,
                                 std::string problem = "", double t = 0.0);

// Bernstein widths of the section: b_n = sigma_{n+1} (largest (n+1)-ball
// inside the image of the unit ball).  Requires an injective section.
WidthCurve bernstein_widths(const FiniteSection& section, int n_max, std::string problem = "",
                            double t = 0.0);

// Subspace variant b~_n = sup_{dim X = n} inf_{x in X} |Sx| / |x| = sigma_n,
// defined for n >= 1.
WidthCurve bernstein_widths_variant(const FiniteSection& section, int n_max,
                                    std::string problem = "", double t = 0.0);

// Rayleigh-quotient value of the subspace characterization on a candidate
// subspace given by columns in source coordinates:
// inf_{x in span} |S x|_H / |x|_F.  Independent check route (QR + small SVD)
// against the singular-value formula.
double bernstein_rayleigh(const FiniteSection& section, const Eigen::MatrixXd& subspace);

// Optimal candidate subspace: span of the top `dim` right singular vectors,
// mapped back to source coordinates.
Eigen::MatrixXd top_singular_subspace(const FiniteSection& section, int dim);

// Certified lower bound (1 / 2C) * b_m with m = ceil(4 C^2 n) for the
// best n-term width over all bases of condition <= C.
double nonlinear_width_lower_bound(const WidthCurve& bernstein, double C, int n);
int theorem1_m(double C, int n);

}  // namespace widthlab::widths
