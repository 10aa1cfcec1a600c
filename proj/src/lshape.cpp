#include "widthlab/lshape.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "widthlab/errors.hpp"
#include "widthlab/haar.hpp"
#include "widthlab/quadrature.hpp"

namespace widthlab::problems {

double ManufacturedLShape::eval(double x, double y) const {
  double v = u_regular ? u_regular(x, y) : 0.0;
  for (const auto& [sf, c] : singular) v += c * sf.eval(x, y);
  return v;
}

double polynomial_regular_part(double x, double y) {
  return 2.0 * x * y * (1.0 - x * x) * (1.0 - y * y);
}

ManufacturedLShape default_manufactured(double singular_coefficient) {
  ManufacturedLShape u;
  u.u_regular = polynomial_regular_part;
  u.singular.push_back({SingularFunction{}, singular_coefficient});
  return u;
}

std::size_t LShapeCoeffs::total() const {
  return pyramid[0].size() + pyramid[1].size() + pyramid[2].size();
}

double LShapeCoeffs::coeff(const bases::WaveletIndex& idx) const {
  const std::size_t n = std::size_t{1} << level;
  auto [row, col] = haar::position_2d(idx);
  return pyramid[idx.square][row * n + col];
}

bases::CoeffVector LShapeCoeffs::to_coeff_vector(const bases::BasisDescriptor& basis) const {
  const std::size_t n = std::size_t{1} << level;
  std::vector<bases::WaveletIndex> idx;
  std::vector<double> val;
  idx.reserve(total());
  val.reserve(total());
  for (int sq = 0; sq < 3; ++sq)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        auto w = haar::index_2d(r, c);
        w.square = static_cast<std::uint8_t>(sq);
        idx.push_back(w);
        val.push_back(pyramid[sq][r * n + c]);
      }
  return bases::CoeffVector(basis.domain_id(), std::move(idx), std::move(val));
}

std::vector<double> cell_integrals_callable(const std::function<double(double, double)>& f,
                                            int square, int level, bool graded,
                                            double support_radius) {
  double ox, oy;
  bases::lshape_square_origin(square, ox, oy);
  const int n = 1 << level;
  const double h = 1.0 / n;
  std::vector<double> out(std::size_t(n) * n, 0.0);
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const double x0 = ox + ix * h;
      const double y0 = oy + iy * h;
      if (support_radius > 0.0) {
        // skip cells entirely outside the disk around the corner
        const double ax = (x0 > 0.0) ? x0 : ((x0 + h < 0.0) ? -(x0 + h) : 0.0);
        const double ay = (y0 > 0.0) ? y0 : ((y0 + h < 0.0) ? -(y0 + h) : 0.0);
        if (std::hypot(ax, ay) >= support_radius) continue;
      }
      out[std::size_t(iy) * n + ix] = graded ? quad::integrate_cell_graded(f, x0, y0, h)
                                             : quad::integrate_cell(f, x0, y0, h);
    }
  return out;
}

namespace {

LShapeCoeffs pyramids_from_integrals(std::array<std::vector<double>, 3> integrals, int level) {
  LShapeCoeffs out;
  out.level = level;
  const std::size_t n = std::size_t{1} << level;
  for (int sq = 0; sq < 3; ++sq) {
    haar::scale_cell_integrals_2d(integrals[sq], level);
    haar::forward_2d(integrals[sq], n);
    out.pyramid[sq] = std::move(integrals[sq]);
  }
  return out;
}

}  // namespace

LShapeCoeffs analyze_manufactured(const ManufacturedLShape& u, int haar_level) {
  std::array<std::vector<double>, 3> integrals;
  const std::size_t cells = std::size_t{1} << (2 * haar_level);
  for (int sq = 0; sq < 3; ++sq) {
    if (u.u_regular)
      integrals[sq] = cell_integrals_callable(u.u_regular, sq, haar_level, false);
    else
      integrals[sq].assign(cells, 0.0);
    for (const auto& [sf, c] : u.singular) {
      if (c == 0.0) continue;
      auto part = cell_integrals_callable([&](double x, double y) { return sf.eval(x, y); }, sq,
                                          haar_level, true, sf.cutoff_radius);
      for (std::size_t i = 0; i < part.size(); ++i) integrals[sq][i] += c * part[i];
    }
  }
  return pyramids_from_integrals(std::move(integrals), haar_level);
}

LShapeCoeffs analyze_p1(const fem::LShapeP1::Solution& u, int haar_level) {
  std::array<std::vector<double>, 3> integrals;
  for (int sq = 0; sq < 3; ++sq) integrals[sq] = u.cell_integrals(sq, haar_level);
  return pyramids_from_integrals(std::move(integrals), haar_level);
}

bases::CoeffVector lshape_solution_manufactured(const ManufacturedLShape& u, int haar_level) {
  const auto basis = bases::build_basis(bases::Domain::lshape, bases::BasisKind::haar, haar_level);
  return analyze_manufactured(u, haar_level).to_coeff_vector(basis);
}

bases::CoeffVector lshape_solution_blackbox(const RightHandSide& f, int reference_level,
                                            int haar_level) {
  if (reference_level < haar_level + 2)
    throw config_error(
        "lshape_solution_blackbox: reference level too small for the requested accuracy "
        "(need haar_level + 2)");
  if (!f.evaluator) throw capability_error("lshape_solution_blackbox: needs a point evaluator");
  const fem::LShapeP1 solver(reference_level);
  const auto uh = solver.solve(f.evaluator, fem::LShapeP1::LoadRule::midedge);
  const auto basis = bases::build_basis(bases::Domain::lshape, bases::BasisKind::haar, haar_level);
  return analyze_p1(uh, haar_level).to_coeff_vector(basis);
}

widths::FiniteSection lshape_operator_section(const ModelProblem& problem,
                                              double source_smoothness, double target_smoothness,
                                              int N) {
  const auto order = problem.basis.enumerate();
  if (N < 1 || static_cast<std::size_t>(N) > order.size())
    throw config_error("operator_section: N exceeds the available truncation");
  const int haar_level = problem.basis.max_level();
  const fem::LShapeP1 solver(problem.reference_level);

  const bases::SobolevWeight ws{source_smoothness, bases::BasisKind::haar};
  const bases::SobolevWeight wt{target_smoothness, bases::BasisKind::haar};

  widths::FiniteSection sec;
  sec.matrix.resize(N, N);
  sec.source_weights.resize(N);
  sec.target_weights.resize(N);
  for (int c = 0; c < N; ++c) {
    const auto& mu = order[static_cast<std::size_t>(c)];
    // piecewise-constant right-hand side: the centroid rule is exact
    const auto uh = solver.solve(
        [&](double x, double y) { return problem.basis.eval(mu, x, y); },
        fem::LShapeP1::LoadRule::centroid);
    const auto coeffs = analyze_p1(uh, haar_level);
    for (int r = 0; r < N; ++r)
      sec.matrix(r, c) = coeffs.coeff(order[static_cast<std::size_t>(r)]);
    sec.source_weights[c] = ws(mu);
    sec.target_weights[c] = wt(mu);
  }
  return sec;
}

namespace {
constexpr char kDumpMagic[8] = {'W', 'L', 'C', 'O', 'E', 'F', '0', '1'};
}

void write_coeff_dump(const std::string& path, const bases::CoeffVector& coeffs) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw config_error("write_coeff_dump: cannot open " + path);
  os.write(kDumpMagic, sizeof(kDumpMagic));
  const std::uint64_t count = coeffs.size();
  const std::uint64_t idlen = coeffs.domain_id().size();
  os.write(reinterpret_cast<const char*>(&idlen), sizeof(idlen));
  os.write(coeffs.domain_id().data(), static_cast<std::streamsize>(idlen));
  os.write(reinterpret_cast<const char*>(&count), sizeof(count));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& idx = coeffs.index(i);
    const std::int32_t rec[4] = {idx.tx, idx.ty, idx.level, static_cast<std::int32_t>(
                                     idx.kind | (std::int32_t(idx.square) << 8))};
    os.write(reinterpret_cast<const char*>(rec), sizeof(rec));
    const double v = coeffs.value(i);
    os.write(reinterpret_cast<const char*>(&v), sizeof(v));
  }
  if (!os) throw numerical_error("write_coeff_dump: write failed for " + path);
}

bases::CoeffVector read_coeff_dump(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw config_error("read_coeff_dump: cannot open " + path);
  char magic[8];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kDumpMagic, sizeof(magic)) != 0)
    throw config_error("read_coeff_dump: bad magic/version in " + path);
  std::uint64_t idlen = 0, count = 0;
  is.read(reinterpret_cast<char*>(&idlen), sizeof(idlen));
  std::string domain_id(idlen, '\0');
  is.read(domain_id.data(), static_cast<std::streamsize>(idlen));
  is.read(reinterpret_cast<char*>(&count), sizeof(count));
  std::vector<bases::WaveletIndex> idx(count);
  std::vector<double> val(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::int32_t rec[4];
    is.read(reinterpret_cast<char*>(rec), sizeof(rec));
    is.read(reinterpret_cast<char*>(&val[i]), sizeof(double));
    idx[i] = bases::WaveletIndex{rec[0], rec[1], static_cast<std::int16_t>(rec[2]),
                                 static_cast<std::uint8_t>(rec[3] & 0xff),
                                 static_cast<std::uint8_t>((rec[3] >> 8) & 0xff)};
  }
  if (!is) throw config_error("read_coeff_dump: truncated file " + path);
  return bases::CoeffVector(domain_id, std::move(idx), std::move(val));
}

}  // namespace widthlab::problems
