#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "widthlab/wavelet_index.hpp"

namespace widthlab::bases {

// Enumerable realization of one concrete Riesz basis on a dyadic domain:
// L2-normalized Haar (interval, square, L-shape) or L2-normalized sine
// (interval, square).  `resolution` means the maximal dyadic level for Haar
// (the span is then all piecewise constants on 2^{level} cells per
// direction) and the per-direction mode count for sine.
class BasisDescriptor {
public:
  BasisDescriptor(Domain domain, BasisKind kind, int resolution);

  Domain domain() const { return domain_; }
  BasisKind kind() const { return kind_; }
  int dimension() const { return d_; }          // spatial dimension
  int max_level() const { return resolution_; } // Haar
  int modes() const { return resolution_; }     // sine
  std::string domain_id() const;

  std::size_t index_count() const;

  // All indices.  Haar: canonical (level-major) order.  Sine: by eigenvalue
  // of -Laplace (|k|^2 ascending, lexicographic ties).
  std::vector<WaveletIndex> enumerate() const;

  bool valid(const WaveletIndex& idx) const;

  // Point value of the basis function (y ignored on the interval).
  double eval(const WaveletIndex& idx, double x, double y = 0.0) const;

  // Dirichlet eigenvalue of -Laplace for a sine index.
  double eigenvalue(const WaveletIndex& idx) const;

  // Structured text manifest (experiment provenance).
  std::string manifest() const;

private:
  Domain domain_;
  BasisKind kind_;
  int resolution_;
  int d_;
};

BasisDescriptor build_basis(Domain domain, BasisKind kind, int resolution);

// Point membership in the open domain.  The L-shape is
// (-1,1)^2 \ [0,1) x (-1,0].
bool domain_contains(Domain domain, double x, double y);

// Lower-left corner of an L-shape patch (0 = SW, 1 = NW, 2 = NE).
void lshape_square_origin(int square, double& ox, double& oy);

}  // namespace widthlab::bases
