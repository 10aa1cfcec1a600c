#include "widthlab/basis.hpp"

#include <cmath>
#include <set>

#include "doctest.h"
#include "widthlab/errors.hpp"

using namespace widthlab;
using namespace widthlab::bases;

TEST_CASE("interval Haar counts: span of piecewise constants on 2^L cells") {
  for (int L : {0, 1, 2, 3, 6}) {
    auto basis = build_basis(Domain::interval, BasisKind::haar, L);
    CHECK(basis.index_count() == std::size_t(1) << L);
    auto idx = basis.enumerate();
    CHECK(idx.size() == basis.index_count());
    for (const auto& i : idx) CHECK(basis.valid(i));
  }
  // max_level = 3: scaling + wavelet levels 0..2
  auto b3 = build_basis(Domain::interval, BasisKind::haar, 3);
  CHECK(b3.index_count() == 8);
}

TEST_CASE("sine basis enumeration") {
  auto basis = build_basis(Domain::interval, BasisKind::sine, 16);
  auto idx = basis.enumerate();
  REQUIRE(idx.size() == 16);
  for (int k = 1; k <= 16; ++k) {
    CHECK(idx[k - 1].tx == k);
    CHECK(basis.eigenvalue(idx[k - 1]) == doctest::Approx(k * k * M_PI * M_PI));
  }
  // square modes sorted by eigenvalue
  auto sq = build_basis(Domain::square, BasisKind::sine, 4);
  auto sidx = sq.enumerate();
  REQUIRE(sidx.size() == 16);
  for (std::size_t i = 1; i < sidx.size(); ++i)
    CHECK(sq.eigenvalue(sidx[i]) >= sq.eigenvalue(sidx[i - 1]));
  CHECK(sidx[0].tx == 1);
  CHECK(sidx[0].ty == 1);
}

TEST_CASE("lshape Haar count equals three squares") {
  // enumerate dyadic cubes inside the L-shape and count
  auto lsh = build_basis(Domain::lshape, BasisKind::haar, 2);
  auto one = build_basis(Domain::square, BasisKind::haar, 2);
  CHECK(lsh.index_count() == 3 * one.index_count());
  CHECK(lsh.index_count() == 48);

  auto idx = lsh.enumerate();
  std::set<std::tuple<int, int, int, int, int>> uniq;
  for (const auto& i : idx) uniq.insert({i.level, i.square, i.kind, i.tx, i.ty});
  CHECK(uniq.size() == idx.size());
}

TEST_CASE("unsupported pairs are configuration errors") {
  CHECK_THROWS_AS(build_basis(Domain::lshape, BasisKind::sine, 8), config_error);
  CHECK_THROWS_AS(build_basis(Domain::interval, BasisKind::haar, -1), config_error);
  CHECK_THROWS_AS(build_basis(Domain::interval, BasisKind::sine, 0), config_error);
}

TEST_CASE("Haar point evaluation") {
  auto basis = build_basis(Domain::interval, BasisKind::haar, 3);
  WaveletIndex scaling{0, 0, 0, 0, 0};
  CHECK(basis.eval(scaling, 0.3) == 1.0);
  WaveletIndex w10{1, 0, 1, 1, 0};  // level 1, second half of the interval
  CHECK(basis.eval(w10, 0.55) == doctest::Approx(std::sqrt(2.0)));
  CHECK(basis.eval(w10, 0.95) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(basis.eval(w10, 0.25) == 0.0);

  auto sq = build_basis(Domain::square, BasisKind::haar, 2);
  WaveletIndex k3{0, 0, 0, 3, 0};  // psi(x) psi(y) on the unit square
  CHECK(sq.eval(k3, 0.25, 0.25) == 1.0);
  CHECK(sq.eval(k3, 0.75, 0.25) == -1.0);
  CHECK(sq.eval(k3, 0.75, 0.75) == 1.0);
}

TEST_CASE("lshape membership and patch evaluation") {
  CHECK(domain_contains(Domain::lshape, -0.5, -0.5));
  CHECK(domain_contains(Domain::lshape, -0.5, 0.5));
  CHECK(domain_contains(Domain::lshape, 0.5, 0.5));
  CHECK(!domain_contains(Domain::lshape, 0.5, -0.5));  // removed quadrant
  CHECK(!domain_contains(Domain::lshape, 1.5, 0.5));

  auto lsh = build_basis(Domain::lshape, BasisKind::haar, 1);
  WaveletIndex sw_scaling{0, 0, 0, 0, 0};
  WaveletIndex ne_scaling{0, 0, 0, 0, 2};
  CHECK(lsh.eval(sw_scaling, -0.5, -0.5) == 1.0);
  CHECK(lsh.eval(sw_scaling, 0.5, 0.5) == 0.0);
  CHECK(lsh.eval(ne_scaling, 0.5, 0.5) == 1.0);
}

TEST_CASE("manifest carries provenance fields") {
  auto basis = build_basis(Domain::lshape, BasisKind::haar, 2);
  auto m = basis.manifest();
  CHECK(m.find("domain = lshape") != std::string::npos);
  CHECK(m.find("kind = haar") != std::string::npos);
  CHECK(m.find("index_count = 48") != std::string::npos);
}
