#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace widthlab::bases {

enum class Domain : std::uint8_t { interval, square, lshape };
enum class BasisKind : std::uint8_t { haar, sine };

const char* to_string(Domain d);
const char* to_string(BasisKind k);

// Address of one basis function: dyadic scale, translation and wavelet type.
// For the L-shape the basis is a union of per-square Haar systems and
// `square` selects the patch (0 = SW, 1 = NW, 2 = NE); elsewhere it is 0.
// Spectral (sine) indices store the mode vector in (tx, ty) with level 0 and
// kind 0.
struct WaveletIndex {
  std::int32_t tx = 0;
  std::int32_t ty = 0;
  std::int16_t level = 0;
  std::uint8_t kind = 0;  // 0 = scaling function, 1..2^d-1 = wavelet type
  std::uint8_t square = 0;

  friend bool operator==(const WaveletIndex&, const WaveletIndex&) = default;
};

// Canonical order: coarse levels first, then patch, type, translation.
// Deterministic tie-breaking in the thresholding code relies on it.
inline bool operator<(const WaveletIndex& a, const WaveletIndex& b) {
  return std::tie(a.level, a.square, a.kind, a.ty, a.tx) <
         std::tie(b.level, b.square, b.kind, b.ty, b.tx);
}

std::string to_string(const WaveletIndex& idx);

// Finitely supported coefficient map, stored as parallel index/value arrays
// sorted in canonical index order.  Construction runs a normalization pass:
// entries with |value| below the drop threshold are removed, duplicate
// indices are rejected.  Instances are immutable afterwards.
class CoeffVector {
public:
  static constexpr double kDropThreshold = 1e-300;

  CoeffVector() = default;
  CoeffVector(std::string domain_id, std::vector<WaveletIndex> indices,
              std::vector<double> values);

  static CoeffVector single(std::string domain_id, const WaveletIndex& idx, double value);

  const std::string& domain_id() const { return domain_id_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  std::span<const WaveletIndex> indices() const { return indices_; }
  std::span<const double> values() const { return values_; }

  // 0 for indices outside the support.
  double value_at(const WaveletIndex& idx) const;

  const WaveletIndex& index(std::size_t i) const { return indices_[i]; }
  double value(std::size_t i) const { return values_[i]; }

private:
  std::string domain_id_;
  std::vector<WaveletIndex> indices_;
  std::vector<double> values_;
};

}  // namespace widthlab::bases
