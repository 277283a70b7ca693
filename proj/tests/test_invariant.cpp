#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fig8/invariant.hpp"

using fig8::cplx;
using fig8::homfly_exact;
using fig8::ModelParams;
using fig8::pi_v;

namespace {

ModelParams mp(long N, int n, double u) {
  ModelParams p;
  p.N = N;
  p.n = n;
  p.u = u;
  return p;
}

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("single-term sum is exactly 1") {
  for (int n : {2, 4, 6})
    for (double u : {0.0, 0.5, 0.9}) {
      const auto v = homfly_exact(mp(1, n, u));
      CHECK(v.value == cplx(1.0, 0.0));
      CHECK(v.terms == 1);
    }
}

TEST_CASE("small root-of-unity values 5 and 13") {
  CHECK(std::abs(homfly_exact(mp(2, 2, 0.0)).value - 5.0) < 5e-12);
  CHECK(std::abs(homfly_exact(mp(3, 2, 0.0)).value - 13.0) < 1.3e-11);
}

TEST_CASE("pinned deformed values") {
  CHECK(rel_err(homfly_exact(mp(5, 2, 0.5)).value,
                cplx(76.44108328460823, 12.85834147515775)) < 1e-11);
  CHECK(rel_err(homfly_exact(mp(5, 4, 0.3)).value,
                cplx(90.35918299060873, -27.26227689903586)) < 1e-11);
  CHECK(rel_err(homfly_exact(mp(10, 2, 0.5)).value,
                cplx(2084.841597539501, 1060.226625585774)) < 1e-11);
  CHECK(rel_err(homfly_exact(mp(12, 2, 0.5)).value,
                cplx(7121.727481818082, 4678.132190124492)) < 1e-11);
  CHECK(rel_err(homfly_exact(mp(12, 4, 0.9)).value,
                cplx(672059.4914905387, -639817.1820905875)) < 1e-11);
}

TEST_CASE("u = 0 reduces to the positive Kashaev sum") {
  for (long N = 2; N <= 12; ++N) {
    const auto v = homfly_exact(mp(N, 2, 0.0));
    const double brute = fig8::kashaev_brute(N);
    CHECK(std::abs(v.value.real() - brute) < 1e-10 * brute);
    CHECK(std::abs(v.value.imag()) < 1e-10 * brute);
  }
}

TEST_CASE("u = 0 values stay real for larger N and n") {
  for (int n : {2, 4})
    for (long N : {20L, 50L}) {
      const auto v = homfly_exact(mp(N, n, 0.0));
      CHECK(std::abs(v.value.imag()) < 1e-10 * std::abs(v.value));
    }
}

TEST_CASE("quantum integers") {
  // [2] at q = -1 vanishes
  CHECK(std::abs(fig8::quantum_integer(2, cplx(-1.0, 0.0))) < 1e-14);
  // [1] at q = e^{2 pi i/5} is 2 i sin(pi/5)
  const cplx q = std::exp(cplx(0.0, 2.0 * pi_v / 5.0));
  CHECK(std::abs(fig8::quantum_integer(1, q) - cplx(0.0, 2.0 * std::sin(pi_v / 5.0))) <
        1e-14);
  const ModelParams p = mp(6, 4, 0.3);
  CHECK(std::abs(fig8::quantum_factorial(2, p) -
                 fig8::quantum_integer(1, p) * fig8::quantum_integer(2, p)) <
        1e-14);
  CHECK_THROWS_AS(fig8::quantum_factorial(-1, p), fig8::Error);
}

TEST_CASE("term bookkeeping is consistent") {
  const auto v = homfly_exact(mp(10, 2, 0.5));
  CHECK(v.max_term_magnitude * 10.0 >= std::abs(v.value));
  CHECK(v.cancellation_digits >= 0.0);
  CHECK(v.precision_digits >= 16);
  CHECK(std::abs(std::exp(v.log_abs) - std::abs(v.value)) <
        1e-12 * std::abs(v.value));
  CHECK(std::abs(v.phase - std::arg(v.value)) < 1e-12);
}

TEST_CASE("dilogarithm-quotient form reproduces the sum") {
  {
    const ModelParams p = mp(4, 2, 0.5);
    CHECK(rel_err(fig8::homfly_qdilog_form(p), homfly_exact(p).value) < 1e-7);
  }
  {
    const ModelParams p = mp(3, 4, 0.3);
    CHECK(rel_err(fig8::homfly_qdilog_form(p), homfly_exact(p).value) < 1e-7);
  }
  CHECK_THROWS_AS(fig8::homfly_qdilog_form(mp(65, 2, 0.5)), fig8::Error);
}

TEST_CASE("pinned residue integrand value") {
  const ModelParams p = mp(4, 2, 0.5);
  const cplx g1 = fig8::g_integrand(cplx(3.0 / 8.0, 0.0), p);
  CHECK(std::abs(g1 - cplx(0.17386871713437656, -0.052604681075597969)) <
        1e-9);
}

TEST_CASE("residue form equals the exact sum") {
  for (ModelParams p : {mp(4, 2, 0.5), mp(5, 2, 0.5), mp(4, 4, 0.5)}) {
    CHECK(rel_err(fig8::homfly_residue_form(p), homfly_exact(p).value) < 1e-7);
  }
}

TEST_CASE("tan through the exponential side stays bounded") {
  CHECK(std::abs(fig8::tan_stable(cplx(0.3, 0.2)) - std::tan(cplx(0.3, 0.2))) <
        1e-13);
  CHECK(std::abs(fig8::tan_stable(cplx(1.0, 50.0)) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(fig8::tan_stable(cplx(-2.0, -40.0)) + cplx(0.0, 1.0)) < 1e-15);
}

TEST_CASE("contour integral of tan * g matches the enclosed residues") {
  const ModelParams p = mp(4, 2, 0.5);
  // eps = 1/4 encloses the poles at 3/8 and 5/8 only
  const cplx by_contour = fig8::tan_contour_integral(p, 0.25);
  const cplx by_residues = fig8::residue_sum_window(p, 0.25);
  CHECK(std::abs(by_contour - by_residues) < 1e-7 * std::abs(by_residues));
}

TEST_CASE("eps = 1/2 degenerates both sides to zero") {
  const ModelParams p = mp(4, 2, 0.5);
  CHECK(std::abs(fig8::residue_sum_window(p, 0.5)) == 0.0);
  CHECK(std::abs(fig8::tan_contour_integral(p, 0.5)) < 1e-9);
  CHECK_THROWS_AS(fig8::tan_contour_integral(p, 0.6), fig8::Error);
  CHECK_THROWS_AS(fig8::tan_contour_integral(p, 0.0), fig8::Error);
}

TEST_CASE("growth of log|J| tracks the predicted rate at moderate N") {
  const auto v = homfly_exact(mp(200, 2, 0.5));
  const double growth = v.log_abs / 200.0;
  // Re(S(1/2)/xi) * M/N with S(1/2) = 3.826865100751279 i
  const cplx S(0.0, 3.826865100751279);
  const double predicted = (S / cplx(0.5, 2.0 * pi_v)).real() * 200.0 / 200.0;
  CHECK(std::abs(growth / predicted - 1.0) < 0.10);
}
