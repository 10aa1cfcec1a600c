#include "widthlab/galerkin.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cassert>
#include <cmath>

#include "widthlab/basis.hpp"
#include "widthlab/errors.hpp"

namespace widthlab::fem {

namespace {

struct Tri {
  // global node ids and coordinates
  int v[3];
  double x[3], y[3];
};

}  // namespace

struct LShapeP1::Impl {
  int level;
  int cells1d;          // per unit edge
  int ncell;            // global cells per side (2 * cells1d)
  int nside;            // global nodes per side
  double h;
  std::vector<int> dof;  // node -> dof id or -1
  int ndof = 0;
  std::vector<Tri> tris;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt;

  int node(int ix, int iy) const { return iy * nside + ix; }

  Impl(int lvl) : level(lvl) {
    if (lvl < 1) throw config_error("LShapeP1: level must be >= 1");
    cells1d = 1 << lvl;
    ncell = 2 * cells1d;
    nside = ncell + 1;
    h = 1.0 / cells1d;

    dof.assign(std::size_t(nside) * nside, -1);
    for (int iy = 0; iy <= ncell; ++iy)
      for (int ix = 0; ix <= ncell; ++ix) {
        const double x = -1.0 + ix * h;
        const double y = -1.0 + iy * h;
        if (bases::domain_contains(bases::Domain::lshape, x, y))
          dof[std::size_t(node(ix, iy))] = ndof++;
      }

    for (int cy = 0; cy < ncell; ++cy)
      for (int cx = 0; cx < ncell; ++cx) {
        const double x0 = -1.0 + cx * h;
        const double y0 = -1.0 + cy * h;
        if (!bases::domain_contains(bases::Domain::lshape, x0 + 0.5 * h, y0 + 0.5 * h)) continue;
        const int n00 = node(cx, cy), n10 = node(cx + 1, cy);
        const int n11 = node(cx + 1, cy + 1), n01 = node(cx, cy + 1);
        // lower-left to upper-right diagonal
        tris.push_back(Tri{{n00, n10, n11}, {x0, x0 + h, x0 + h}, {y0, y0, y0 + h}});
        tris.push_back(Tri{{n00, n11, n01}, {x0, x0 + h, x0}, {y0, y0 + h, y0 + h}});
      }

    // stiffness
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(tris.size() * 9);
    for (const auto& t : tris) {
      const double bx[3] = {t.y[1] - t.y[2], t.y[2] - t.y[0], t.y[0] - t.y[1]};
      const double by[3] = {t.x[2] - t.x[1], t.x[0] - t.x[2], t.x[1] - t.x[0]};
      const double area = 0.5 * std::abs((t.x[1] - t.x[0]) * (t.y[2] - t.y[0]) -
                                         (t.x[2] - t.x[0]) * (t.y[1] - t.y[0]));
      for (int a = 0; a < 3; ++a) {
        const int ia = dof[std::size_t(t.v[a])];
        if (ia < 0) continue;
        for (int b = 0; b < 3; ++b) {
          const int ib = dof[std::size_t(t.v[b])];
          if (ib < 0) continue;
          trip.emplace_back(ia, ib, (bx[a] * bx[b] + by[a] * by[b]) / (4.0 * area));
        }
      }
    }
    Eigen::SparseMatrix<double> K(ndof, ndof);
    K.setFromTriplets(trip.begin(), trip.end());
    llt.compute(K);
    if (llt.info() != Eigen::Success)
      throw numerical_error("LShapeP1: Cholesky factorization failed");
  }
};

LShapeP1::LShapeP1(int level) : impl_(new Impl(level)), level_(level) {}
LShapeP1::~LShapeP1() { delete impl_; }

double LShapeP1::mesh_width() const { return impl_->h; }
int LShapeP1::dof_count() const { return impl_->ndof; }

LShapeP1::Solution LShapeP1::solve(const std::function<double(double, double)>& f,
                                   LoadRule rule) const {
  const Impl& im = *impl_;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(im.ndof);
  for (const auto& t : im.tris) {
    const double area = 0.5 * im.h * im.h;
    if (rule == LoadRule::centroid) {
      const double fc = f((t.x[0] + t.x[1] + t.x[2]) / 3.0, (t.y[0] + t.y[1] + t.y[2]) / 3.0);
      for (int a = 0; a < 3; ++a) {
        const int ia = im.dof[std::size_t(t.v[a])];
        if (ia >= 0) rhs[ia] += fc * area / 3.0;
      }
    } else {
      // edge-midpoint rule; lambda_a = 1/2 on its two adjacent midpoints
      for (int e = 0; e < 3; ++e) {
        const int p = (e + 1) % 3, q = (e + 2) % 3;
        const double fm = f(0.5 * (t.x[p] + t.x[q]), 0.5 * (t.y[p] + t.y[q]));
        for (int a : {p, q}) {
          const int ia = im.dof[std::size_t(t.v[a])];
          if (ia >= 0) rhs[ia] += fm * 0.5 * area / 3.0;
        }
      }
    }
  }
  const Eigen::VectorXd u = im.llt.solve(rhs);

  Solution sol;
  sol.level = im.level;
  sol.nodes_per_side = im.nside;
  sol.nodal.assign(std::size_t(im.nside) * im.nside, 0.0);
  for (int iy = 0; iy < im.nside; ++iy)
    for (int ix = 0; ix < im.nside; ++ix) {
      const int d = im.dof[std::size_t(im.node(ix, iy))];
      if (d >= 0) sol.nodal[std::size_t(im.node(ix, iy))] = u[d];
    }
  return sol;
}

double LShapeP1::Solution::eval(double x, double y) const {
  const int ncell = nodes_per_side - 1;
  const double h = 2.0 / ncell;
  if (x < -1.0 || x > 1.0 || y < -1.0 || y > 1.0) return 0.0;
  int cx = static_cast<int>(std::floor((x + 1.0) / h));
  int cy = static_cast<int>(std::floor((y + 1.0) / h));
  if (cx >= ncell) cx = ncell - 1;
  if (cy >= ncell) cy = ncell - 1;
  const double xi = (x + 1.0) - cx * h;
  const double eta = (y + 1.0) - cy * h;
  const auto nd = [&](int i, int j) { return nodal[std::size_t(cy + j) * nodes_per_side + (cx + i)]; };
  const double u00 = nd(0, 0), u10 = nd(1, 0), u11 = nd(1, 1), u01 = nd(0, 1);
  if (xi >= eta)  // lower triangle (00, 10, 11)
    return u00 + (u10 - u00) * (xi / h) + (u11 - u10) * (eta / h);
  return u00 + (u11 - u01) * (xi / h) + (u01 - u00) * (eta / h);
}

std::vector<double> LShapeP1::Solution::cell_integrals(int square, int haar_level) const {
  const int ncell = nodes_per_side - 1;
  const int mesh_cells = ncell / 2;  // per unit edge
  double ox, oy;
  bases::lshape_square_origin(square, ox, oy);
  const int n = 1 << haar_level;
  const double hf = 1.0 / n;
  std::vector<double> out(std::size_t(n) * n, 0.0);

  if (n <= mesh_cells) {
    // aggregate exact per-mesh-cell integrals: area/3 * vertex sums per triangle
    const double h = 1.0 / mesh_cells;
    const double area = 0.5 * h * h;
    const int sub = mesh_cells / n;
    const int bx = static_cast<int>(std::lround((ox + 1.0) * mesh_cells));
    const int by = static_cast<int>(std::lround((oy + 1.0) * mesh_cells));
    for (int cy = 0; cy < mesh_cells; ++cy)
      for (int cx = 0; cx < mesh_cells; ++cx) {
        const int gx = bx + cx, gy = by + cy;
        const auto nd = [&](int i, int j) {
          return nodal[std::size_t(gy + j) * nodes_per_side + (gx + i)];
        };
        const double u00 = nd(0, 0), u10 = nd(1, 0), u11 = nd(1, 1), u01 = nd(0, 1);
        const double cell = area / 3.0 * ((u00 + u10 + u11) + (u00 + u11 + u01));
        out[std::size_t(cy / sub) * n + (cx / sub)] += cell;
      }
    return out;
  }

  // finer than the mesh: fine cells aligned with the mesh diagonal
  const double area_half = 0.5 * hf * hf;
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      const double x0 = ox + ix * hf, y0 = oy + iy * hf;
      const double x1 = x0 + hf, y1 = y0 + hf;
      // position of the fine cell within its mesh cell (units of hf)
      const int sub = n / mesh_cells;
      const int lx = ix % sub, ly = iy % sub;
      double val;
      if (lx != ly) {  // entirely inside one triangle: centroid rule is exact
        val = hf * hf * eval(x0 + 0.5 * hf, y0 + 0.5 * hf);
      } else {  // the mesh diagonal runs corner to corner through this cell
        const double lower = area_half / 3.0 * (eval(x0, y0) + eval(x1, y0) + eval(x1, y1));
        const double upper = area_half / 3.0 * (eval(x0, y0) + eval(x1, y1) + eval(x0, y1));
        val = lower + upper;
      }
      out[std::size_t(iy) * n + ix] = val;
    }
  return out;
}

}  // namespace widthlab::fem
