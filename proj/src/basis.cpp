#include "widthlab/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab::bases {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// 1D Haar mother wavelet on [0,1).
inline double haar_mother(double t) {
  if (t < 0.0 || t >= 1.0) return 0.0;
  return t < 0.5 ? 1.0 : -1.0;
}

inline double haar_father(double t) { return (t >= 0.0 && t < 1.0) ? 1.0 : 0.0; }

}  // namespace

bool domain_contains(Domain domain, double x, double y) {
  switch (domain) {
    case Domain::interval:
      return x > 0.0 && x < 1.0;
    case Domain::square:
      return x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0;
    case Domain::lshape:
      if (x <= -1.0 || x >= 1.0 || y <= -1.0 || y >= 1.0) return false;
      return !(x >= 0.0 && y <= 0.0);
  }
  return false;
}

void lshape_square_origin(int square, double& ox, double& oy) {
  switch (square) {
    case 0: ox = -1.0; oy = -1.0; return;  // SW
    case 1: ox = -1.0; oy = 0.0; return;   // NW
    case 2: ox = 0.0; oy = 0.0; return;    // NE
    default: throw config_error("lshape patch id out of range");
  }
}

BasisDescriptor::BasisDescriptor(Domain domain, BasisKind kind, int resolution)
    : domain_(domain), kind_(kind), resolution_(resolution) {
  d_ = (domain == Domain::interval) ? 1 : 2;
  if (kind == BasisKind::sine) {
    if (domain == Domain::lshape)
      throw config_error("sine basis is not available on the L-shape");
    if (resolution < 1) throw config_error("sine basis needs at least one mode");
  } else {
    if (resolution < 0) throw config_error("haar basis needs max_level >= 0");
  }
}

BasisDescriptor build_basis(Domain domain, BasisKind kind, int resolution) {
  return BasisDescriptor(domain, kind, resolution);
}

std::string BasisDescriptor::domain_id() const {
  std::ostringstream os;
  os << to_string(domain_) << ":" << to_string(kind_) << ":"
     << (kind_ == BasisKind::haar ? "L" : "K") << resolution_;
  return os.str();
}

std::size_t BasisDescriptor::index_count() const {
  if (kind_ == BasisKind::sine) {
    std::size_t m = static_cast<std::size_t>(resolution_);
    return d_ == 1 ? m : m * m;
  }
  // Haar spans all piecewise constants on 2^L cells per direction.
  const std::size_t cells1d = std::size_t{1} << resolution_;
  switch (domain_) {
    case Domain::interval: return cells1d;
    case Domain::square: return cells1d * cells1d;
    case Domain::lshape: return 3 * cells1d * cells1d;
  }
  return 0;
}

std::vector<WaveletIndex> BasisDescriptor::enumerate() const {
  std::vector<WaveletIndex> out;
  out.reserve(index_count());
  if (kind_ == BasisKind::sine) {
    if (d_ == 1) {
      for (int k = 1; k <= resolution_; ++k) out.push_back({k, 0, 0, 0, 0});
    } else {
      for (int k1 = 1; k1 <= resolution_; ++k1)
        for (int k2 = 1; k2 <= resolution_; ++k2) out.push_back({k1, k2, 0, 0, 0});
      std::sort(out.begin(), out.end(), [](const WaveletIndex& a, const WaveletIndex& b) {
        const long ea = long(a.tx) * a.tx + long(a.ty) * a.ty;
        const long eb = long(b.tx) * b.tx + long(b.ty) * b.ty;
        if (ea != eb) return ea < eb;
        return std::tie(a.tx, a.ty) < std::tie(b.tx, b.ty);
      });
    }
    return out;
  }

  const int nsq = (domain_ == Domain::lshape) ? 3 : 1;
  const int kinds = (d_ == 1) ? 1 : 3;
  for (int sq = 0; sq < nsq; ++sq)
    out.push_back({0, 0, 0, 0, static_cast<std::uint8_t>(sq)});  // scaling
  for (int j = 0; j < resolution_; ++j) {
    const int n = 1 << j;
    for (int sq = 0; sq < nsq; ++sq) {
      for (int e = 1; e <= kinds; ++e) {
        if (d_ == 1) {
          for (int k = 0; k < n; ++k)
            out.push_back({k, 0, static_cast<std::int16_t>(j), 1,
                           static_cast<std::uint8_t>(sq)});
        } else {
          for (int ky = 0; ky < n; ++ky)
            for (int kx = 0; kx < n; ++kx)
              out.push_back({kx, ky, static_cast<std::int16_t>(j),
                             static_cast<std::uint8_t>(e),
                             static_cast<std::uint8_t>(sq)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BasisDescriptor::valid(const WaveletIndex& idx) const {
  if (kind_ == BasisKind::sine) {
    if (idx.level != 0 || idx.kind != 0 || idx.square != 0) return false;
    if (idx.tx < 1 || idx.tx > resolution_) return false;
    return d_ == 1 ? idx.ty == 0 : (idx.ty >= 1 && idx.ty <= resolution_);
  }
  const int nsq = (domain_ == Domain::lshape) ? 3 : 1;
  if (idx.square >= nsq) return false;
  if (idx.kind == 0)
    return idx.level == 0 && idx.tx == 0 && idx.ty == 0;
  if (idx.level < 0 || idx.level >= resolution_) return false;
  const int maxkind = (d_ == 1) ? 1 : 3;
  if (idx.kind > maxkind) return false;
  const int n = 1 << idx.level;
  if (idx.tx < 0 || idx.tx >= n) return false;
  if (d_ == 1) return idx.ty == 0;
  return idx.ty >= 0 && idx.ty < n;
}

double BasisDescriptor::eval(const WaveletIndex& idx, double x, double y) const {
  if (kind_ == BasisKind::sine) {
    if (d_ == 1) return kSqrt2 * std::sin(idx.tx * kPi * x);
    return 2.0 * std::sin(idx.tx * kPi * x) * std::sin(idx.ty * kPi * y);
  }
  double lx = x, ly = y;
  if (domain_ == Domain::lshape) {
    double ox, oy;
    lshape_square_origin(idx.square, ox, oy);
    lx = x - ox;
    ly = y - oy;
  }
  if (idx.kind == 0) {
    double v = haar_father(lx);
    if (d_ == 2) v *= haar_father(ly);
    return v;
  }
  const double scale1d = std::pow(2.0, 0.5 * idx.level);
  const double tx = std::ldexp(lx, idx.level) - idx.tx;  // 2^j x - k
  if (d_ == 1) return scale1d * haar_mother(tx);
  const double ty = std::ldexp(ly, idx.level) - idx.ty;
  const double fx = (idx.kind & 1) ? haar_mother(tx) : haar_father(tx);
  const double fy = (idx.kind & 2) ? haar_mother(ty) : haar_father(ty);
  return scale1d * scale1d * fx * fy;
}

double BasisDescriptor::eigenvalue(const WaveletIndex& idx) const {
  if (kind_ != BasisKind::sine)
    throw config_error("eigenvalue rule is defined for the sine basis only");
  const double k2 = double(idx.tx) * idx.tx + double(idx.ty) * idx.ty;
  return kPi * kPi * k2;
}

std::string BasisDescriptor::manifest() const {
  std::ostringstream os;
  os << "domain = " << to_string(domain_) << "\n";
  os << "kind = " << to_string(kind_) << "\n";
  if (kind_ == BasisKind::haar) {
    os << "j0 = 0\n";
    os << "max_level = " << resolution_ << "\n";
  } else {
    os << "modes_per_direction = " << resolution_ << "\n";
  }
  os << "index_count = " << index_count() << "\n";
  return os.str();
}

}  // namespace widthlab::bases
