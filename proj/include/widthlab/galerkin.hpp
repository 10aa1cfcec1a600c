#pragma once

#include <functional>
#include <vector>

namespace widthlab::fem {

// Conforming P1 Galerkin discretization of -Laplace u = f with homogeneous
// Dirichlet data on the L-shape (-1,1)^2 \ [0,1) x (-1,0].  Uniform grid of
// 2^level cells per unit edge, each cell split along its lower-left to
// upper-right diagonal.  The factorized stiffness is cached, so repeated
// solves against new right-hand sides are cheap.
class LShapeP1 {
public:
  enum class LoadRule {
    centroid,  // exact for right-hand sides constant on mesh cells
    midedge    // degree-2 rule for smooth right-hand sides
  };

  struct Solution {
    int level = 0;
    int nodes_per_side = 0;          // global grid including boundary
    std::vector<double> nodal;       // row-major (iy, ix), zeros outside
    double eval(double x, double y) const;
    // Integrals of u_h over the 4^haar_level cells of one unit patch
    // (0 = SW, 1 = NW, 2 = NE), row-major (iy, ix) in local coordinates.
    std::vector<double> cell_integrals(int square, int haar_level) const;
  };

  explicit LShapeP1(int level);
  ~LShapeP1();
  LShapeP1(const LShapeP1&) = delete;
  LShapeP1& operator=(const LShapeP1&) = delete;

  int level() const { return level_; }
  double mesh_width() const;
  int dof_count() const;

  Solution solve(const std::function<double(double, double)>& f,
                 LoadRule rule = LoadRule::midedge) const;

private:
  struct Impl;
  Impl* impl_;
  int level_;
};

}  // namespace widthlab::fem
