#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "fig8/dilogarithm.hpp"
#include "fig8/potential.hpp"

using fig8::cplx;
using fig8::ModelParams;
using fig8::phi2;
using fig8::phiN;
using fig8::pi_v;
using fig8::solve_saddle;

namespace {

ModelParams mp(long N, int n, double u) {
  ModelParams p;
  p.N = N;
  p.n = n;
  p.u = u;
  return p;
}

const cplx kZ2Half(0.8525875565894787, 0.06784676202492829);  // saddle, u=1/2

}  // namespace

TEST_CASE("potential matches its dilogarithm composition") {
  const double u = 0.5;
  const cplx xi(u, 2.0 * pi_v);
  for (cplx z : {cplx(0.3, 0.1), cplx(0.6, -0.05), cplx(0.85, 0.07)}) {
    const cplx direct = (fig8::dilog(std::exp(u - z * xi)).value -
                         fig8::dilog(std::exp(u + z * xi)).value) /
                            xi -
                        u * z;
    CHECK(std::abs(phi2(z, u) - direct) < 1e-14);
  }
}

TEST_CASE("rank-n potential degenerates to the n=2 potential") {
  const double u = 0.4;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const cplx z(0.05 + 0.1 * i, -0.27 + 0.06 * j);
      CHECK(std::abs(phiN(z, mp(50, 2, u)) - phi2(z, u)) < 1e-13);
    }
}

TEST_CASE("derivative agrees with central differences") {
  const ModelParams p = mp(100, 4, 0.5);
  const double h = 1e-5;
  for (cplx z : {cplx(0.4, 0.05), cplx(0.7, -0.02)}) {
    const cplx fd = (phiN(z + h, p) - phiN(z - h, p)) / (2.0 * h);
    CHECK(std::abs(fig8::phiN_derivative(z, p) - fd) < 1e-6);
  }
}

TEST_CASE("derivative refuses arguments on the dilogarithm cut") {
  const ModelParams p = mp(50, 2, 0.5);
  const cplx z_cut = cplx(0.0, 2.0 * pi_v) / p.xi();  // z*xi = 2*pi*i
  CHECK_THROWS_AS(fig8::phiN_derivative(z_cut, p), fig8::Error);
}

TEST_CASE("saddle for n=2 and its pinned position") {
  const auto s = solve_saddle(mp(100, 2, 0.5));
  CHECK(std::abs(s.z - kZ2Half) < 1e-12);
  CHECK(s.residual < 1e-12);
  CHECK(std::abs(fig8::phiN_derivative(s.z, mp(100, 2, 0.5))) < 1e-9);
  CHECK(std::abs(s.a - std::exp(0.5)) < 1e-15);
  // saddle stays put as N changes when n=2
  CHECK(std::abs(solve_saddle(mp(2000, 2, 0.5)).z - s.z) < 1e-12);
}

TEST_CASE("pinned n=4 saddle positions drift like 1/M") {
  CHECK(std::abs(solve_saddle(mp(100, 4, 0.5)).z -
                 cplx(0.8300977524011972, 0.06218083727560136)) < 1e-12);
  CHECK(std::abs(solve_saddle(mp(200, 4, 0.5)).z -
                 cplx(0.84111879621376036, 0.064784450764249554)) < 1e-12);
  CHECK(std::abs(solve_saddle(mp(400, 4, 0.5)).z -
                 cplx(0.84679332045173347, 0.066248600979328443)) < 1e-12);
  const double d1 = std::abs(solve_saddle(mp(100, 4, 0.5)).z - kZ2Half);
  const double d2 = std::abs(solve_saddle(mp(200, 4, 0.5)).z - kZ2Half);
  CHECK(d2 / d1 > 0.45);
  CHECK(d2 / d1 < 0.55);
}

TEST_CASE("saddle at tiny u approaches the sixth root of unity") {
  const auto s = solve_saddle(mp(50, 2, 1e-6));
  CHECK(std::abs(s.w - std::exp(cplx(0.0, -pi_v / 3.0))) < 1e-3);
  CHECK(std::abs(fig8::phiN_derivative(s.z, mp(50, 2, 1e-6))) < 1e-9);
}

TEST_CASE("pinned potential and second derivative at the saddle") {
  CHECK(std::abs(phi2(kZ2Half, 0.5) -
                 cplx(0.10837818445977566, 0.008624461890049265)) < 1e-13);
  const cplx dd = fig8::phi_second_at_saddle(mp(100, 2, 0.5));
  CHECK(std::abs(dd - cplx(-9.783108362439190, 0.7785150273429273)) < 1e-9);
}

TEST_CASE("cut side on the descent leg is the strip-interior limit") {
  const double u = 0.5;
  const cplx xi(u, 2.0 * pi_v);
  const cplx A = cplx(0.0, 2.0 * pi_v) / xi;  // descent-path corner
  const cplx z = A + 0.3 * (1.0 - A);         // on the leg, Im(z xi) = 2 pi
  const cplx inside = z - cplx(0.0, 1e-7) / xi;
  const cplx outside = z + cplx(0.0, 1e-7) / xi;
  CHECK(std::abs(phi2(z, u) - phi2(inside, u)) < 1e-5);
  CHECK(std::abs(phi2(z, u) - phi2(outside, u)) > 1e-3);
}

TEST_CASE("difference M*(Phi_n - Phi_2) at moderate N") {
  const double u = 0.5;
  const ModelParams p = mp(100, 4, u);
  const cplx z(0.55, 0.0);
  const cplx diff = phiN(z, p) - phi2(z, u);
  CHECK(std::abs(diff) < 0.05);
  const cplx xi(u, 2.0 * pi_v);
  const cplx target =
      2.0 * std::log((1.0 - std::exp(u - z * xi)) * (1.0 - std::exp(z * xi)));
  CHECK(std::abs(double(p.M()) * diff / target - 1.0) < 0.10);
}

TEST_CASE("second-difference sequence shrinks along doubling N") {
  std::vector<ModelParams> seq{mp(100, 4, 0.5), mp(200, 4, 0.5),
                               mp(400, 4, 0.5), mp(800, 4, 0.5)};
  const auto vals = fig8::diff2_sequence(seq);
  REQUIRE(vals.size() == 4);
  CHECK(std::abs(vals[0]) == doctest::Approx(0.259588).epsilon(1e-4));
  for (size_t i = 1; i < vals.size(); ++i)
    CHECK(std::abs(vals[i]) < std::abs(vals[i - 1]));
  const double tail = fig8::diff2_limit_check(seq);
  CHECK(tail == doctest::Approx(std::abs(vals[2])).epsilon(1e-12));
  CHECK(tail < 0.1);
}

TEST_CASE("second-difference sequence rejects malformed input") {
  CHECK_THROWS_AS(fig8::diff2_sequence({mp(100, 4, 0.5), mp(200, 2, 0.5)}),
                  fig8::Error);
  CHECK_THROWS_AS(fig8::diff2_sequence({mp(200, 4, 0.5), mp(100, 4, 0.5)}),
                  fig8::Error);
  CHECK_THROWS_AS(fig8::diff2_sequence({mp(100, 4, 0.5), mp(200, 4, 0.3)}),
                  fig8::Error);
}
