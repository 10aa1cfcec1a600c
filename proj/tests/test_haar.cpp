#include "widthlab/haar.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "widthlab/basis.hpp"
#include "widthlab/kernels.hpp"

using namespace widthlab;
using namespace widthlab::bases;

namespace {

// Brute-force analysis oracle: <u, h_lambda> = sum over finest cells of
// (cell integral of u) * (value of h_lambda on that cell).
double brute_coeff_1d(const std::vector<double>& cellint, const BasisDescriptor& basis,
                      const WaveletIndex& idx) {
  const int n = static_cast<int>(cellint.size());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double xc = (i + 0.5) / n;
    acc += cellint[i] * basis.eval(idx, xc);
  }
  return acc;
}

double brute_coeff_2d(const std::vector<double>& cellint, int n, const BasisDescriptor& basis,
                      const WaveletIndex& idx) {
  double acc = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double xc = (c + 0.5) / n;
      const double yc = (r + 0.5) / n;
      acc += cellint[std::size_t(r) * n + c] * basis.eval(idx, xc, yc);
    }
  return acc;
}

}  // namespace

TEST_CASE("1D forward transform matches the inner-product oracle") {
  const int L = 5;
  const int n = 1 << L;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> cellint(n);
  for (double& v : cellint) v = dist(rng) / n;

  auto basis = build_basis(Domain::interval, BasisKind::haar, L);
  auto pyr = cellint;
  haar::scale_cell_integrals_1d(pyr, L);
  haar::forward_1d(pyr);

  for (const auto& idx : basis.enumerate()) {
    const double oracle = brute_coeff_1d(cellint, basis, idx);
    CHECK(pyr[haar::position_1d(idx)] == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("2D forward transform matches the inner-product oracle") {
  const int L = 3;
  const int n = 1 << L;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> cellint(std::size_t(n) * n);
  for (double& v : cellint) v = dist(rng) / (double(n) * n);

  auto basis = build_basis(Domain::square, BasisKind::haar, L);
  auto pyr = cellint;
  haar::scale_cell_integrals_2d(pyr, L);
  haar::forward_2d(pyr, n);

  for (const auto& idx : basis.enumerate()) {
    const double oracle = brute_coeff_2d(cellint, n, basis, idx);
    auto [row, col] = haar::position_2d(idx);
    CHECK(pyr[row * n + col] == doctest::Approx(oracle).epsilon(1e-12));
  }
}

TEST_CASE("2D transform round trip and isometry") {
  const int n = 64;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> a(std::size_t(n) * n);
  for (double& v : a) v = dist(rng);

  const double before = kernels::sumsq(a);
  auto t = a;
  haar::forward_2d(t, n);
  CHECK(kernels::sumsq(t) == doctest::Approx(before).epsilon(1e-13));
  haar::inverse_2d(t, n);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(t[i] == doctest::Approx(a[i]).epsilon(1e-12));
}

TEST_CASE("position maps invert each other") {
  for (std::size_t p = 0; p < 64; ++p) CHECK(haar::position_1d(haar::index_1d(p)) == p);
  const std::size_t n = 16;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      auto idx = haar::index_2d(r, c);
      auto [rr, cc] = haar::position_2d(idx);
      CHECK(rr == r);
      CHECK(cc == c);
    }
}

TEST_CASE("orthonormality: Gram of the transform-realized basis is identity") {
  // The columns of the inverse transform applied to unit vectors are the
  // basis functions sampled on cells; their mutual l2 products must be
  // delta_{ij}.
  const int L = 4;
  const int n = 1 << L;
  for (int a = 0; a < n; ++a) {
    std::vector<double> ea(n, 0.0);
    ea[a] = 1.0;
    haar::inverse_1d(ea);
    for (int b = a; b < n; ++b) {
      std::vector<double> eb(n, 0.0);
      eb[b] = 1.0;
      haar::inverse_1d(eb);
      const double g = kernels::dot(ea, eb);
      CHECK(g == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
}
