#include "widthlab/wavelet_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "widthlab/errors.hpp"

namespace widthlab::bases {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::interval: return "interval";
    case Domain::square: return "square";
    case Domain::lshape: return "lshape";
  }
  return "?";
}

const char* to_string(BasisKind k) {
  switch (k) {
    case BasisKind::haar: return "haar";
    case BasisKind::sine: return "sine";
  }
  return "?";
}

std::string to_string(const WaveletIndex& idx) {
  return "(j=" + std::to_string(idx.level) + ",k=(" + std::to_string(idx.tx) + "," +
         std::to_string(idx.ty) + "),e=" + std::to_string(idx.kind) +
         ",q=" + std::to_string(idx.square) + ")";
}

CoeffVector::CoeffVector(std::string domain_id, std::vector<WaveletIndex> indices,
                         std::vector<double> values)
    : domain_id_(std::move(domain_id)) {
  if (indices.size() != values.size())
    throw config_error("CoeffVector: index/value length mismatch");

  std::vector<std::size_t> order(indices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });

  indices_.reserve(indices.size());
  values_.reserve(values.size());
  for (std::size_t i : order) {
    if (!std::isfinite(values[i])) throw config_error("CoeffVector: non-finite value");
    if (std::abs(values[i]) < kDropThreshold) continue;  // stored-zero elimination
    if (!indices_.empty() && indices_.back() == indices[i])
      throw config_error("CoeffVector: duplicate index " + to_string(indices[i]));
    indices_.push_back(indices[i]);
    values_.push_back(values[i]);
  }
}

CoeffVector CoeffVector::single(std::string domain_id, const WaveletIndex& idx, double value) {
  return CoeffVector(std::move(domain_id), {idx}, {value});
}

double CoeffVector::value_at(const WaveletIndex& idx) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), idx);
  if (it == indices_.end() || !(*it == idx)) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

}  // namespace widthlab::bases
