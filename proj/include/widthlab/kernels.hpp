#pragma once

#include <cstddef>
#include <span>
#include <string>

namespace widthlab::kernels {

// Data-parallel inner loops used by the norm, transform and thresholding
// code.  Every operation has a scalar reference implementation and, on
// x86-64 hardware that supports it, an AVX2 variant.  The backend is chosen
// once at runtime; force_backend() pins it (used by the equivalence tests).
//
// The Haar pair passes and the elementwise operations perform the same
// floating-point operations per element in both backends, so their results
// are bitwise identical.  Reductions re-associate and agree only up to
// roundoff.

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);
bool backend_available(Backend b);
void force_backend(Backend b);  // throws config_error if unavailable

// sum_i x_i^2
double sumsq(std::span<const double> x);
// sum_i (w_i * x_i)^2
double weighted_sumsq(std::span<const double> w, std::span<const double> x);
// sum_i x_i * y_i
double dot(std::span<const double> x, std::span<const double> y);
// x_i *= a
void scale(std::span<double> x, double a);
// out_i = a_i * b_i
void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out);

// One forward Haar pass over adjacent pairs: src holds 2m values,
// dst[i] = (src[2i] + src[2i+1]) * 2^{-1/2}  (averages, first half)
// dst[m+i] = (src[2i] - src[2i+1]) * 2^{-1/2} (details, second half).
void haar_split(std::span<const double> src, std::span<double> dst);
// Inverse of haar_split.
void haar_merge(std::span<const double> src, std::span<double> dst);

// Column variant for 2D transforms: combines two rows of length n.
void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n);
void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n);

namespace scalar {
double sumsq(std::span<const double> x);
double weighted_sumsq(std::span<const double> w, std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void scale(std::span<double> x, double a);
void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out);
void haar_split(std::span<const double> src, std::span<double> dst);
void haar_merge(std::span<const double> src, std::span<double> dst);
void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n);
void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool available();
double sumsq(std::span<const double> x);
double weighted_sumsq(std::span<const double> w, std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void scale(std::span<double> x, double a);
void hadamard(std::span<const double> a, std::span<const double> b, std::span<double> out);
void haar_split(std::span<const double> src, std::span<double> dst);
void haar_merge(std::span<const double> src, std::span<double> dst);
void haar_split_cols(const double* top, const double* bot, double* avg, double* diff, std::size_t n);
void haar_merge_cols(const double* avg, const double* diff, double* top, double* bot, std::size_t n);
}  // namespace avx2
#endif

}  // namespace widthlab::kernels
