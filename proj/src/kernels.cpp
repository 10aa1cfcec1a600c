#include "widthlab/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cmath>

#include "widthlab/errors.hpp"

namespace widthlab::kernels {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

namespace scalar {

double sumsq(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc;
}

double weighted_sumsq(std::span<const double> w, std::span<const double> x) {
  assert(w.size() == x.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = w[i] * x[i];
    acc += t * t;
  }
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

void scale(std::span<double> x, double a) {
  for (double& v : x) v *= a;
}

void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void haar_split(std::span<const double> src, std::span<double> dst) {
  assert(src.size() % 2 == 0 && dst.size() == src.size());
  const std::size_t m = src.size() / 2;
  for (std::size_t i = 0; i < m; ++i) {
    const double a = src[2 * i];
    const double b = src[2 * i + 1];
    dst[i] = (a + b) * kInvSqrt2;
    dst[m + i] = (a - b) * kInvSqrt2;
  }
}

void haar_merge(std::span<const double> src, std::span<double> dst) {
  assert(src.size() % 2 == 0 && dst.size() == src.size());
  const std::size_t m = src.size() / 2;
  for (std::size_t i = 0; i < m; ++i) {
    const double s = src[i];
    const double d = src[m + i];
    dst[2 * i] = (s + d) * kInvSqrt2;
    dst[2 * i + 1] = (s - d) * kInvSqrt2;
  }
}

void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = top[i];
    const double b = bot[i];
    avg[i] = (a + b) * kInvSqrt2;
    diff[i] = (a - b) * kInvSqrt2;
  }
}

void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double s = avg[i];
    const double d = diff[i];
    top[i] = (s + d) * kInvSqrt2;
    bot[i] = (s - d) * kInvSqrt2;
  }
}

}  // namespace scalar

namespace {

Backend pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2::available()) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend> g_backend{pick_default()};

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) {
  if (b == Backend::scalar) return true;
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::avx2) return avx2::available();
#endif
  return false;
}

void force_backend(Backend b) {
  if (!backend_available(b))
    throw config_error(std::string("kernel backend unavailable: ") + backend_name(b));
  g_backend.store(b, std::memory_order_relaxed);
}

#if defined(__x86_64__) || defined(_M_X64)
#define WL_DISPATCH(call_scalar, call_avx2) \
  return active_backend() == Backend::avx2 ? call_avx2 : call_scalar
#else
#define WL_DISPATCH(call_scalar, call_avx2) return call_scalar
#endif

double sumsq(std::span<const double> x) {
  WL_DISPATCH(scalar::sumsq(x), avx2::sumsq(x));
}

double weighted_sumsq(std::span<const double> w, std::span<const double> x) {
  WL_DISPATCH(scalar::weighted_sumsq(w, x), avx2::weighted_sumsq(w, x));
}

double dot(std::span<const double> x, std::span<const double> y) {
  WL_DISPATCH(scalar::dot(x, y), avx2::dot(x, y));
}

void scale(std::span<double> x, double a) {
  WL_DISPATCH(scalar::scale(x, a), avx2::scale(x, a));
}

void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  WL_DISPATCH(scalar::hadamard(a, b, out), avx2::hadamard(a, b, out));
}

void haar_split(std::span<const double> src, std::span<double> dst) {
  WL_DISPATCH(scalar::haar_split(src, dst), avx2::haar_split(src, dst));
}

void haar_merge(std::span<const double> src, std::span<double> dst) {
  WL_DISPATCH(scalar::haar_merge(src, dst), avx2::haar_merge(src, dst));
}

void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n) {
  WL_DISPATCH(scalar::haar_split_cols(top, bot, avg, diff, n),
              avx2::haar_split_cols(top, bot, avg, diff, n));
}

void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n) {
  WL_DISPATCH(scalar::haar_merge_cols(avg, diff, top, bot, n),
              avx2::haar_merge_cols(avg, diff, top, bot, n));
}

#undef WL_DISPATCH

}  // namespace widthlab::kernels
