#pragma once

#include "widthlab/wavelet_index.hpp"

namespace widthlab::bases {

// Diagonal weight realizing a smoothness-s sequence norm on coefficients.
// Dyadic bases use 2^{j s} per level j, the spectral sine basis
// (pi |k|_2)^s per mode k.  Negative s gives the dual-side weights.
struct SobolevWeight {
  double s = 0.0;
  BasisKind basis = BasisKind::haar;

  double operator()(const WaveletIndex& idx) const;
};

// Weighted l2 norm of the coefficients; equals besov_norm at p = q = 2 for
// dyadic weights.
double sequence_norm(const CoeffVector& coeffs, const SobolevWeight& weight);

// Wavelet-characterization Besov norm: per level j an lp sum of |c|,
// scaled by 2^{j (s + d(1/2 - 1/p))}, combined across levels in lq.
// p, q in (0, inf]; infinity means a maximum.  Intended for coefficients of
// a dyadic (Haar) basis; the levels stored in `coeffs` are used as j.
double besov_norm(const CoeffVector& coeffs, double s, double p, double q, int d);

}  // namespace widthlab::bases
