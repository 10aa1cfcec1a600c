#include "widthlab/haar.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "widthlab/errors.hpp"
#include "widthlab/kernels.hpp"

namespace widthlab::haar {

namespace {

void require_pow2(std::size_t n, const char* who) {
  if (n == 0 || !std::has_single_bit(n))
    throw config_error(std::string(who) + ": size must be a power of two");
}

}  // namespace

void forward_1d(std::vector<double>& a) {
  require_pow2(a.size(), "forward_1d");
  std::vector<double> tmp(a.size());
  for (std::size_t m = a.size(); m > 1; m /= 2) {
    kernels::haar_split({a.data(), m}, {tmp.data(), m});
    std::memcpy(a.data(), tmp.data(), m * sizeof(double));
  }
}

void inverse_1d(std::vector<double>& a) {
  require_pow2(a.size(), "inverse_1d");
  std::vector<double> tmp(a.size());
  for (std::size_t m = 2; m <= a.size(); m *= 2) {
    kernels::haar_merge({a.data(), m}, {tmp.data(), m});
    std::memcpy(a.data(), tmp.data(), m * sizeof(double));
  }
}

void forward_2d(std::vector<double>& a, std::size_t n) {
  require_pow2(n, "forward_2d");
  if (a.size() != n * n) throw config_error("forward_2d: data is not n*n");
  std::vector<double> rowtmp(n);
  std::vector<double> block(a.size());
  for (std::size_t m = n; m > 1; m /= 2) {
    // rows
    for (std::size_t r = 0; r < m; ++r) {
      double* row = a.data() + r * n;
      kernels::haar_split({row, m}, {rowtmp.data(), m});
      std::memcpy(row, rowtmp.data(), m * sizeof(double));
    }
    // columns; snapshot the active block first (destination rows overlap
    // later source rows)
    for (std::size_t r = 0; r < m; ++r)
      std::memcpy(block.data() + r * n, a.data() + r * n, m * sizeof(double));
    for (std::size_t r = 0; r < m / 2; ++r) {
      kernels::haar_split_cols(block.data() + (2 * r) * n, block.data() + (2 * r + 1) * n,
                               a.data() + r * n, a.data() + (m / 2 + r) * n, m);
    }
  }
}

void inverse_2d(std::vector<double>& a, std::size_t n) {
  require_pow2(n, "inverse_2d");
  if (a.size() != n * n) throw config_error("inverse_2d: data is not n*n");
  std::vector<double> rowtmp(n);
  std::vector<double> block(a.size());
  for (std::size_t m = 2; m <= n; m *= 2) {
    for (std::size_t r = 0; r < m; ++r)
      std::memcpy(block.data() + r * n, a.data() + r * n, m * sizeof(double));
    for (std::size_t r = 0; r < m / 2; ++r) {
      kernels::haar_merge_cols(block.data() + r * n, block.data() + (m / 2 + r) * n,
                               a.data() + (2 * r) * n, a.data() + (2 * r + 1) * n, m);
    }
    for (std::size_t r = 0; r < m; ++r) {
      double* row = a.data() + r * n;
      kernels::haar_merge({row, m}, {rowtmp.data(), m});
      std::memcpy(row, rowtmp.data(), m * sizeof(double));
    }
  }
}

std::size_t position_1d(const bases::WaveletIndex& idx) {
  if (idx.kind == 0) return 0;
  return (std::size_t{1} << idx.level) + static_cast<std::size_t>(idx.tx);
}

bases::WaveletIndex index_1d(std::size_t pos) {
  if (pos == 0) return {0, 0, 0, 0, 0};
  const int j = std::bit_width(pos) - 1;
  const std::size_t k = pos - (std::size_t{1} << j);
  return {static_cast<std::int32_t>(k), 0, static_cast<std::int16_t>(j), 1, 0};
}

std::pair<std::size_t, std::size_t> position_2d(const bases::WaveletIndex& idx) {
  if (idx.kind == 0) return {0, 0};
  const std::size_t half = std::size_t{1} << idx.level;
  const std::size_t kx = static_cast<std::size_t>(idx.tx);
  const std::size_t ky = static_cast<std::size_t>(idx.ty);
  switch (idx.kind) {
    case 1: return {ky, half + kx};
    case 2: return {half + ky, kx};
    case 3: return {half + ky, half + kx};
  }
  throw config_error("position_2d: bad wavelet kind");
}

bases::WaveletIndex index_2d(std::size_t row, std::size_t col) {
  if (row == 0 && col == 0) return {0, 0, 0, 0, 0};
  const int jr = row == 0 ? -1 : std::bit_width(row) - 1;
  const int jc = col == 0 ? -1 : std::bit_width(col) - 1;
  const int j = jr > jc ? jr : jc;
  const std::size_t half = std::size_t{1} << j;
  const bool dx = col >= half;
  const bool dy = row >= half;
  const std::uint8_t kind = static_cast<std::uint8_t>((dx ? 1 : 0) | (dy ? 2 : 0));
  return {static_cast<std::int32_t>(dx ? col - half : col),
          static_cast<std::int32_t>(dy ? row - half : row),
          static_cast<std::int16_t>(j), kind, 0};
}

int level_of_position_1d(std::size_t pos) {
  return pos == 0 ? 0 : std::bit_width(pos) - 1;
}

int level_of_position_2d(std::size_t row, std::size_t col) {
  const std::size_t m = row > col ? row : col;
  return m == 0 ? 0 : std::bit_width(m) - 1;
}

void scale_cell_integrals_1d(std::vector<double>& integrals, int level) {
  kernels::scale(integrals, std::exp2(0.5 * level));
}

void scale_cell_integrals_2d(std::vector<double>& integrals, int level) {
  kernels::scale(integrals, std::exp2(level));
}

bases::CoeffVector pyramid_to_coeffs_1d(const std::vector<double>& pyr,
                                        const bases::BasisDescriptor& basis) {
  std::vector<bases::WaveletIndex> idx(pyr.size());
  for (std::size_t p = 0; p < pyr.size(); ++p) idx[p] = index_1d(p);
  return bases::CoeffVector(basis.domain_id(), std::move(idx),
                            std::vector<double>(pyr.begin(), pyr.end()));
}

bases::CoeffVector pyramid_to_coeffs_2d(const std::vector<double>& pyr,
                                        const bases::BasisDescriptor& basis, int square) {
  const std::size_t n = static_cast<std::size_t>(std::sqrt(double(pyr.size())) + 0.5);
  if (n * n != pyr.size()) throw config_error("pyramid_to_coeffs_2d: not square");
  std::vector<bases::WaveletIndex> idx;
  std::vector<double> val;
  idx.reserve(pyr.size());
  val.reserve(pyr.size());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      bases::WaveletIndex w = index_2d(r, c);
      w.square = static_cast<std::uint8_t>(square);
      idx.push_back(w);
      val.push_back(pyr[r * n + c]);
    }
  return bases::CoeffVector(basis.domain_id(), std::move(idx), std::move(val));
}

}  // namespace widthlab::haar
