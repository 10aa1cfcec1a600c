#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "widthlab/errors.hpp"
#include "widthlab/haar.hpp"
#include "widthlab/sobolev.hpp"
#include "widthlab/wavelet_index.hpp"

using namespace widthlab;
using namespace widthlab::bases;

namespace {

CoeffVector random_dyadic_coeffs(std::mt19937_64& rng, int levels, int per_level) {
  std::vector<WaveletIndex> idx;
  std::vector<double> val;
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int j = 0; j < levels; ++j)
    for (int k = 0; k < per_level && k < (1 << j); ++k) {
      idx.push_back({k, 0, static_cast<std::int16_t>(j), 1, 0});
      val.push_back(dist(rng));
    }
  return CoeffVector("interval:haar:test", std::move(idx), std::move(val));
}

}  // namespace

TEST_CASE("sequence_norm basics") {
  CoeffVector zero;
  CHECK(sequence_norm(zero, SobolevWeight{1.0, BasisKind::haar}) == 0.0);

  // unit coefficient at sine mode 3, s = 1 -> 3 pi
  auto f = CoeffVector::single("interval:sine:K16", WaveletIndex{3, 0, 0, 0, 0}, 1.0);
  CHECK(sequence_norm(f, SobolevWeight{1.0, BasisKind::sine}) == doctest::Approx(3 * M_PI));
}

TEST_CASE("sequence_norm matches direct summation oracle") {
  std::mt19937_64 rng(7);
  auto c = random_dyadic_coeffs(rng, 5, 4);
  SobolevWeight w{0.7, BasisKind::haar};
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double wi = std::exp2(0.7 * c.index(i).level);
    acc += wi * wi * c.value(i) * c.value(i);
  }
  CHECK(sequence_norm(c, w) == doctest::Approx(std::sqrt(acc)).epsilon(1e-13));
}

TEST_CASE("besov_norm single coefficient") {
  for (double s : {0.0, 0.5, 1.25}) {
    for (double p : {1.0, 2.0, 4.0}) {
      for (int d : {1, 2}) {
        const int j = 3;
        auto c = CoeffVector::single("x", WaveletIndex{1, 0, j, 1, 0}, 1.0);
        const double expected = std::exp2(j * (s + d * (0.5 - 1.0 / p)));
        CHECK(besov_norm(c, s, p, 3.0, d) == doctest::Approx(expected).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("besov_norm geometric level sum") {
  // one unit entry per level j = 0..3, s = 1, p = q = 2, d = 1 -> sqrt(85)
  std::vector<WaveletIndex> idx;
  std::vector<double> val;
  for (int j = 0; j <= 3; ++j) {
    idx.push_back({0, 0, static_cast<std::int16_t>(j), 1, 0});
    val.push_back(1.0);
  }
  CoeffVector c("interval:haar:test", idx, val);
  CHECK(besov_norm(c, 1.0, 2.0, 2.0, 1) == doctest::Approx(std::sqrt(85.0)).epsilon(1e-14));
}

TEST_CASE("besov_norm of a single Haar wavelet via the transform") {
  // f = chi_[0,1/2) - chi_[1/2,1) is the level-0 Haar wavelet: the analysis
  // of its cell averages must produce exactly one nonzero coefficient.
  const int L = 4;
  const int n = 1 << L;
  std::vector<double> cellint(n);
  for (int i = 0; i < n; ++i) {
    const double mid = (i + 0.5) / n;
    cellint[i] = (mid < 0.5 ? 1.0 : -1.0) / n;
  }
  haar::scale_cell_integrals_1d(cellint, L);
  haar::forward_1d(cellint);
  int nonzero = 0;
  for (int i = 0; i < n; ++i)
    if (std::abs(cellint[i]) > 1e-14) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(cellint[1] == doctest::Approx(1.0));  // position of (j=0, k=0) wavelet

  auto basis = build_basis(Domain::interval, BasisKind::haar, L);
  auto c = haar::pyramid_to_coeffs_1d(cellint, basis);
  for (double s : {0.25, 1.0})
    for (double p : {1.0, 2.0})
      CHECK(besov_norm(c, s, p, p, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("besov_norm p=q=2 equals the dyadic sequence norm exactly") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    auto c = random_dyadic_coeffs(rng, 6, 8);
    for (double s : {-0.5, 0.0, 0.8, 1.0}) {
      const double a = besov_norm(c, s, 2.0, 2.0, 1);
      const double b = sequence_norm(c, SobolevWeight{s, BasisKind::haar});
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
  }
}

TEST_CASE("besov_norm monotone in s for nonnegative levels") {
  std::mt19937_64 rng(13);
  auto c = random_dyadic_coeffs(rng, 5, 6);
  for (double p : {1.0, 2.0}) {
    double prev = 0.0;
    for (double s : {0.0, 0.3, 0.6, 1.2}) {
      const double v = besov_norm(c, s, p, p, 1);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("besov_norm rejects nonpositive p, q") {
  auto c = CoeffVector::single("x", WaveletIndex{0, 0, 0, 1, 0}, 1.0);
  CHECK_THROWS_AS(besov_norm(c, 1.0, 0.0, 2.0, 1), std::domain_error);
  CHECK_THROWS_AS(besov_norm(c, 1.0, 2.0, -1.0, 1), std::domain_error);
}

TEST_CASE("CoeffVector normalization pass") {
  std::vector<WaveletIndex> idx{{0, 0, 1, 1, 0}, {0, 0, 0, 0, 0}};
  std::vector<double> val{1e-301, 2.0};  // first entry is a stored zero
  CoeffVector c("x", idx, val);
  CHECK(c.size() == 1);
  CHECK(c.value(0) == 2.0);
  CHECK(c.index(0).kind == 0);
  CHECK(c.value_at(WaveletIndex{0, 0, 1, 1, 0}) == 0.0);

  CHECK_THROWS_AS(CoeffVector("x", {idx[1], idx[1]}, {1.0, 2.0}), config_error);
}
