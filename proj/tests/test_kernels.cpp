#include "widthlab/kernels.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "widthlab/errors.hpp"

using namespace widthlab;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n, double lo = -1.0,
                               double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("kernel backends: reductions agree up to roundoff") {
  if (!kernels::backend_available(kernels::Backend::avx2)) return;
  std::mt19937_64 rng(42);
  for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                        std::size_t{7}, std::size_t{8}, std::size_t{31}, std::size_t{1000},
                        std::size_t{4096}}) {
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);
    const double tol = 1e-13 * (double(n) + 1.0);
    CHECK(kernels::avx2::sumsq(x) == doctest::Approx(kernels::scalar::sumsq(x)).epsilon(tol));
    CHECK(kernels::avx2::dot(x, y) == doctest::Approx(kernels::scalar::dot(x, y)).epsilon(tol));
    CHECK(kernels::avx2::weighted_sumsq(x, y) ==
          doctest::Approx(kernels::scalar::weighted_sumsq(x, y)).epsilon(tol));
  }
}

TEST_CASE("kernel backends: elementwise ops are bitwise identical") {
  if (!kernels::backend_available(kernels::Backend::avx2)) return;
  std::mt19937_64 rng(43);
  for (std::size_t n : {std::size_t{2}, std::size_t{8}, std::size_t{10}, std::size_t{64},
                        std::size_t{1024}}) {
    auto x = random_vec(rng, n);
    auto y = random_vec(rng, n);

    std::vector<double> a(n), b(n);
    kernels::scalar::hadamard(x, y, a);
    kernels::avx2::hadamard(x, y, b);
    CHECK(a == b);

    std::vector<double> s1(n), s2(n);
    kernels::scalar::haar_split(x, s1);
    kernels::avx2::haar_split(x, s2);
    CHECK(s1 == s2);

    std::vector<double> m1(n), m2(n);
    kernels::scalar::haar_merge(x, m1);
    kernels::avx2::haar_merge(x, m2);
    CHECK(m1 == m2);

    auto c1 = x;
    auto c2 = x;
    kernels::scalar::scale(c1, 0.3);
    kernels::avx2::scale(c2, 0.3);
    CHECK(c1 == c2);

    std::vector<double> t1(n), d1(n), t2(n), d2(n);
    kernels::scalar::haar_split_cols(x.data(), y.data(), t1.data(), d1.data(), n);
    kernels::avx2::haar_split_cols(x.data(), y.data(), t2.data(), d2.data(), n);
    CHECK(t1 == t2);
    CHECK(d1 == d2);

    kernels::scalar::haar_merge_cols(x.data(), y.data(), t1.data(), d1.data(), n);
    kernels::avx2::haar_merge_cols(x.data(), y.data(), t2.data(), d2.data(), n);
    CHECK(t1 == t2);
    CHECK(d1 == d2);
  }
}

TEST_CASE("haar_split / haar_merge invert each other") {
  std::mt19937_64 rng(44);
  auto x = random_vec(rng, 256);
  std::vector<double> mid(x.size()), back(x.size());
  kernels::haar_split(x, mid);
  kernels::haar_merge(mid, back);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-15));
}

TEST_CASE("haar_split preserves the l2 norm") {
  std::mt19937_64 rng(45);
  auto x = random_vec(rng, 512);
  std::vector<double> out(x.size());
  kernels::haar_split(x, out);
  CHECK(kernels::sumsq(out) == doctest::Approx(kernels::sumsq(x)).epsilon(1e-13));
}

TEST_CASE("backend dispatch") {
  const auto original = kernels::active_backend();
  kernels::force_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  std::vector<double> v{1.0, 2.0, 2.0};
  CHECK(kernels::sumsq(v) == doctest::Approx(9.0));
  kernels::force_backend(original);
#if defined(__x86_64__)
  if (kernels::backend_available(kernels::Backend::avx2)) {
    INFO("avx2 backend active on this machine");
    CHECK(kernels::backend_name(kernels::Backend::avx2) == std::string("avx2"));
  }
#endif
}
