// AVX2 backends.  This translation unit is compiled with -mavx2 -mfma; the
// dispatcher only routes here after the cpuid check in available().

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>
#include <cstddef>
#include <span>

namespace widthlab::kernels::avx2 {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}
}  // namespace

bool available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double sumsq(std::span<const double> x) {
  const std::size_t n = x.size();
  const double* p = x.data();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += p[i] * p[i];
  return s;
}

double weighted_sumsq(std::span<const double> w, std::span<const double> x) {
  assert(w.size() == x.size());
  const std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(x.data() + i));
    acc = _mm256_fmadd_pd(t, t, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double t = w[i] * x[i];
    s += t * t;
  }
  return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void scale(std::span<double> x, double a) {
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(_mm256_loadu_pd(x.data() + i), va));
  }
  for (; i < n; ++i) x[i] *= a;
}

void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void haar_split(std::span<const double> src, std::span<double> dst) {
  assert(src.size() % 2 == 0 && dst.size() == src.size());
  const std::size_t m = src.size() / 2;
  const double* p = src.data();
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(p + 2 * i);      // a0 b0 a1 b1
    const __m256d v1 = _mm256_loadu_pd(p + 2 * i + 4);  // a2 b2 a3 b3
    const __m256d t0 = _mm256_permute2f128_pd(v0, v1, 0x20);  // a0 b0 a2 b2
    const __m256d t1 = _mm256_permute2f128_pd(v0, v1, 0x31);  // a1 b1 a3 b3
    const __m256d ev = _mm256_unpacklo_pd(t0, t1);            // a0 a1 a2 a3
    const __m256d od = _mm256_unpackhi_pd(t0, t1);            // b0 b1 b2 b3
    _mm256_storeu_pd(dst.data() + i, _mm256_mul_pd(_mm256_add_pd(ev, od), f));
    _mm256_storeu_pd(dst.data() + m + i, _mm256_mul_pd(_mm256_sub_pd(ev, od), f));
  }
  for (; i < m; ++i) {
    const double a = p[2 * i];
    const double b = p[2 * i + 1];
    dst[i] = (a + b) * kInvSqrt2;
    dst[m + i] = (a - b) * kInvSqrt2;
  }
}

void haar_merge(std::span<const double> src, std::span<double> dst) {
  assert(src.size() % 2 == 0 && dst.size() == src.size());
  const std::size_t m = src.size() / 2;
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d s = _mm256_loadu_pd(src.data() + i);
    const __m256d d = _mm256_loadu_pd(src.data() + m + i);
    const __m256d ev = _mm256_mul_pd(_mm256_add_pd(s, d), f);  // e0 e1 e2 e3
    const __m256d od = _mm256_mul_pd(_mm256_sub_pd(s, d), f);  // o0 o1 o2 o3
    const __m256d lo = _mm256_unpacklo_pd(ev, od);             // e0 o0 e2 o2
    const __m256d hi = _mm256_unpackhi_pd(ev, od);             // e1 o1 e3 o3
    _mm256_storeu_pd(dst.data() + 2 * i, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(dst.data() + 2 * i + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
  }
  for (; i < m; ++i) {
    const double s = src[i];
    const double d = src[m + i];
    dst[2 * i] = (s + d) * kInvSqrt2;
    dst[2 * i + 1] = (s - d) * kInvSqrt2;
  }
}

void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n) {
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(top + i);
    const __m256d b = _mm256_loadu_pd(bot + i);
    _mm256_storeu_pd(avg + i, _mm256_mul_pd(_mm256_add_pd(a, b), f));
    _mm256_storeu_pd(diff + i, _mm256_mul_pd(_mm256_sub_pd(a, b), f));
  }
  for (; i < n; ++i) {
    avg[i] = (top[i] + bot[i]) * kInvSqrt2;
    diff[i] = (top[i] - bot[i]) * kInvSqrt2;
  }
}

void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n) {
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d s = _mm256_loadu_pd(avg + i);
    const __m256d d = _mm256_loadu_pd(diff + i);
    _mm256_storeu_pd(top + i, _mm256_mul_pd(_mm256_add_pd(s, d), f));
    _mm256_storeu_pd(bot + i, _mm256_mul_pd(_mm256_sub_pd(s, d), f));
  }
  for (; i < n; ++i) {
    top[i] = (avg[i] + diff[i]) * kInvSqrt2;
    bot[i] = (avg[i] - diff[i]) * kInvSqrt2;
  }
}

}  // namespace widthlab::kernels::avx2

#endif  // x86-64
