#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "widthlab/basis.hpp"
#include "widthlab/wavelet_index.hpp"

namespace widthlab::haar {

// Fast orthonormal Haar transforms.  Input is the vector of finest-level
// scaling coefficients s_L[c] = <u, phi_{L,c}> (1D: 2^{L/2} * cell integral,
// 2D: 2^L * cell integral); output is the pyramid of all coefficients
// <u, h_lambda> for the basis truncated at max_level L.
//
// Pyramid layout, 1D (size 2^L): position 0 holds the scaling coefficient,
// the level-j wavelet with translation k sits at 2^j + k.
// 2D (n x n row-major, n = 2^L): scaling at (0,0); level-j translation
// (kx, ky): kind 1 at (ky, 2^j + kx), kind 2 at (2^j + ky, kx),
// kind 3 at (2^j + ky, 2^j + kx).

void forward_1d(std::vector<double>& a);
void inverse_1d(std::vector<double>& a);
void forward_2d(std::vector<double>& a, std::size_t n);
void inverse_2d(std::vector<double>& a, std::size_t n);

std::size_t position_1d(const bases::WaveletIndex& idx);
bases::WaveletIndex index_1d(std::size_t pos);

// (row, col) of a 2D index; inverse mapping takes the pyramid side n.
std::pair<std::size_t, std::size_t> position_2d(const bases::WaveletIndex& idx);
bases::WaveletIndex index_2d(std::size_t row, std::size_t col);

// Dyadic level of a pyramid position (0 for the scaling slot).
int level_of_position_1d(std::size_t pos);
int level_of_position_2d(std::size_t row, std::size_t col);

// Scale raw cell integrals to finest-level scaling coefficients in place.
void scale_cell_integrals_1d(std::vector<double>& integrals, int level);
void scale_cell_integrals_2d(std::vector<double>& integrals, int level);

// Pyramid -> CoeffVector against the descriptor's index set (small sizes).
bases::CoeffVector pyramid_to_coeffs_1d(const std::vector<double>& pyr,
                                        const bases::BasisDescriptor& basis);
bases::CoeffVector pyramid_to_coeffs_2d(const std::vector<double>& pyr,
                                        const bases::BasisDescriptor& basis,
                                        int square = 0);

}  // namespace widthlab::haar
