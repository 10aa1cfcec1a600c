#include "widthlab/nterm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "widthlab/errors.hpp"
#include "widthlab/kernels.hpp"
#include "widthlab/rng.hpp"

namespace widthlab::nterm {

namespace {

// descending argsort of weighted magnitudes; canonical index order breaks ties
std::vector<std::size_t> greedy_order(const bases::CoeffVector& u,
                                      const bases::SobolevWeight& weight,
                                      std::vector<double>& wmag) {
  wmag.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) wmag[i] = weight(u.index(i)) * std::abs(u.value(i));
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return wmag[a] > wmag[b]; });
  return order;
}

// suffix sums of squares, accumulated from the small end
std::vector<double> suffix_sumsq(const std::vector<double>& sorted_desc) {
  std::vector<double> suf(sorted_desc.size() + 1, 0.0);
  long double acc = 0.0L;
  for (std::size_t i = sorted_desc.size(); i-- > 0;) {
    acc += static_cast<long double>(sorted_desc[i]) * sorted_desc[i];
    suf[i] = static_cast<double>(acc);
  }
  return suf;
}

}  // namespace

NTermResult best_n_term(const bases::CoeffVector& u, int n, const bases::SobolevWeight& weight,
                        const bases::RieszBounds& bounds) {
  if (n < 0) throw std::domain_error("best_n_term: n must be nonnegative");
  std::vector<double> wmag;
  const auto order = greedy_order(u, weight, wmag);

  NTermResult out;
  out.n = n;
  const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(n), u.size());
  out.kept.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i)
    out.kept.emplace_back(u.index(order[i]), u.value(order[i]));

  std::vector<double> tail_sorted;
  tail_sorted.reserve(u.size() - keep);
  for (std::size_t i = keep; i < order.size(); ++i) tail_sorted.push_back(wmag[order[i]]);
  const double tail = std::sqrt(suffix_sumsq(tail_sorted).front());
  out.error = tail;
  out.certified_band = {bounds.lower * tail, bounds.upper * tail};
  return out;
}

FramedNTermResult best_n_term_framed(const Eigen::VectorXd& rescaled_coeffs, int n,
                                     const bases::HaarSpectralFrame& frame) {
  if (n < 0) throw std::domain_error("best_n_term_framed: n must be nonnegative");
  const auto M = rescaled_coeffs.size();
  std::vector<int> order(static_cast<std::size_t>(M));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(rescaled_coeffs[a]) > std::abs(rescaled_coeffs[b]);
  });

  FramedNTermResult out;
  out.n = n;
  Eigen::VectorXd tail = rescaled_coeffs;
  const int keep = std::min<int>(n, static_cast<int>(M));
  for (int i = 0; i < keep; ++i) {
    out.kept.push_back(order[static_cast<std::size_t>(i)]);
    tail[order[static_cast<std::size_t>(i)]] = 0.0;
  }
  out.error = frame.norm_rescaled(tail);
  const double l2 = tail.norm();
  out.certified_band = {frame.bounds().lower * l2, frame.bounds().upper * l2};
  return out;
}

widths::WidthCurve nterm_error_curve(const bases::CoeffVector& u, std::span<const int> n_list,
                                     const bases::SobolevWeight& weight,
                                     const bases::RieszBounds& bounds, std::string problem,
                                     double t) {
  (void)bounds;  // the curve records the weighted tail; bands live in NTermResult
  std::vector<double> wmag;
  const auto order = greedy_order(u, weight, wmag);
  std::vector<double> sorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = wmag[order[i]];
  const auto suf = suffix_sumsq(sorted);

  std::vector<std::pair<int, double>> samples;
  for (int n : n_list) {
    if (n < 0) throw std::domain_error("nterm_error_curve: n must be nonnegative");
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n), sorted.size());
    samples.emplace_back(n, std::sqrt(suf[k]));
  }
  return widths::WidthCurve(widths::CurveKind::nterm, std::move(samples), std::move(problem), t,
                            static_cast<Eigen::Index>(u.size()));
}

widths::WidthCurve tail_curve_from_weighted(std::vector<double> weighted_magnitudes,
                                            std::span<const int> n_list, std::string problem,
                                            double t, Eigen::Index truncation) {
  std::sort(weighted_magnitudes.begin(), weighted_magnitudes.end(), std::greater<double>());
  const auto suf = suffix_sumsq(weighted_magnitudes);
  std::vector<std::pair<int, double>> samples;
  for (int n : n_list) {
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(std::max(n, 0)),
                                                weighted_magnitudes.size());
    samples.emplace_back(n, std::sqrt(suf[k]));
  }
  return widths::WidthCurve(widths::CurveKind::nterm, std::move(samples), std::move(problem), t,
                            truncation);
}

namespace {

// weighted mode gains of a diagonal problem, in enumeration order
std::vector<double> diagonal_gains(const problems::ModelProblem& problem, double t) {
  if (!problem.diagonal)
    throw config_error("worst_case_over_ball: needs a diagonal model problem");
  const double s = problem.s;
  const bases::SobolevWeight ws{t - s, bases::BasisKind::sine};
  const bases::SobolevWeight wt{s, bases::BasisKind::sine};
  const auto modes = problem.basis.enumerate();
  std::vector<double> g(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const double num = problem.identity ? 1.0 : wt(modes[i]);
    const double den = problem.identity ? 1.0 : ws(modes[i]);
    g[i] = num / (problem.eigenvalue(modes[i]) * den);
  }
  return g;
}

}  // namespace

widths::WidthCurve worst_case_over_ball(const problems::ModelProblem& problem, double t,
                                        std::span<const int> n_list, Scheme scheme) {
  auto gains = diagonal_gains(problem, t);
  std::vector<double> sorted = gains;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());

  std::vector<std::pair<int, double>> samples;
  if (scheme == Scheme::linear_first_n) {
    // the rule keeps the first n modes in eigenvalue order; the adversary
    // loads the best remaining mode
    for (int n : n_list) {
      double worst = 0.0;
      for (std::size_t k = static_cast<std::size_t>(n); k < gains.size(); ++k)
        worst = std::max(worst, gains[k]);
      samples.emplace_back(n, worst);
    }
  } else {
    // prefix-equalized extremal loads: error^2 = (m - n) / sum_{k<=m} g_k^{-2}
    std::vector<double> inv2(sorted.size() + 1, 0.0);
    for (std::size_t k = 0; k < sorted.size(); ++k)
      inv2[k + 1] = inv2[k] + 1.0 / (sorted[k] * sorted[k]);
    for (int n : n_list) {
      double best = 0.0;
      for (std::size_t m = static_cast<std::size_t>(n) + 1; m <= sorted.size(); ++m)
        best = std::max(best, (double(m) - double(n)) / inv2[m]);
      samples.emplace_back(n, std::sqrt(best));
    }
  }
  return widths::WidthCurve(widths::CurveKind::nterm, std::move(samples), problem.id(), t,
                            static_cast<Eigen::Index>(gains.size()));
}

widths::WidthCurve empirical_worst_case(const problems::ModelProblem& problem, double t,
                                        std::span<const int> n_list, Scheme scheme,
                                        int sample_count, std::uint64_t seed) {
  if (sample_count < 1) throw config_error("empirical_worst_case: sample_count must be >= 1");
  auto gains = diagonal_gains(problem, t);
  const std::size_t K = gains.size();

  std::mt19937_64 rng(seed);
  util::Gaussian gauss;
  std::vector<double> worst(n_list.size(), 0.0);
  std::vector<double> v(K);
  for (int s = 0; s < sample_count; ++s) {
    double norm2 = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      v[k] = gauss(rng);
      norm2 += v[k] * v[k];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    // v is the normalized source load; the target-weighted solution
    // coefficients are the gains times the load
    for (std::size_t k = 0; k < K; ++k) v[k] = std::abs(v[k]) * inv * gains[k];
    if (scheme == Scheme::best_n_term) {
      std::vector<double> sorted = v;
      std::sort(sorted.begin(), sorted.end(), std::greater<double>());
      const auto suf = suffix_sumsq(sorted);
      for (std::size_t i = 0; i < n_list.size(); ++i) {
        const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n_list[i]), K);
        worst[i] = std::max(worst[i], std::sqrt(suf[k]));
      }
    } else {
      const auto suf = suffix_sumsq(v);  // enumeration order = first-n rule
      for (std::size_t i = 0; i < n_list.size(); ++i) {
        const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(n_list[i]), K);
        worst[i] = std::max(worst[i], std::sqrt(suf[k]));
      }
    }
  }
  std::vector<std::pair<int, double>> samples;
  for (std::size_t i = 0; i < n_list.size(); ++i) samples.emplace_back(n_list[i], worst[i]);
  return widths::WidthCurve(widths::CurveKind::nterm, std::move(samples), problem.id(), t,
                            static_cast<Eigen::Index>(K));
}

}  // namespace widthlab::nterm
