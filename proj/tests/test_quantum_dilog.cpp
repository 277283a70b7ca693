#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fig8/dilogarithm.hpp"
#include "fig8/quantum_dilog.hpp"

using fig8::cplx;
using fig8::GammaParam;
using fig8::ModelParams;
using fig8::pi_v;
using fig8::qdilog;

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

const GammaParam g10 = GammaParam::from_model(mp(10, 2, 0.5));

}  // namespace

TEST_CASE("model gamma is (2 pi - i u)/(2 M)") {
  CHECK(g10.gamma.real() == doctest::Approx(0.3141592653589793).epsilon(1e-15));
  CHECK(g10.gamma.imag() == doctest::Approx(-0.025).epsilon(1e-15));
  CHECK(g10.source.has_value());
  CHECK_THROWS_AS(GammaParam::raw(cplx(-0.1, 0.0)), fig8::Error);
}

TEST_CASE("pinned values of S and of the correction integral") {
  const cplx s = qdilog(cplx(0.3, 0.2), g10);
  CHECK(rel_err(s, cplx(0.34190116786597407, 0.60195523227452823)) < 1e-8);

  const cplx s0 = qdilog(cplx(0.0, 0.0), GammaParam::raw(cplx(0.1, 0.0)));
  CHECK(rel_err(s0, cplx(-0.56124322295697696, -0.82765091958196062)) < 1e-8);

  const cplx ig = fig8::igamma(cplx(0.2, 0.0), g10);
  CHECK(std::abs(ig - cplx(-0.00026436403771824925, 0.013192725074701177)) <
        1e-9);
}

TEST_CASE("S factors as exp(Li2(-e^{iz})/(2 i gamma) + I(z))") {
  for (cplx z : {cplx(0.2, 0.0), cplx(0.4, -0.3), cplx(-1.1, 0.5)}) {
    const cplx li2 = fig8::dilog(-std::exp(cplx(0.0, 1.0) * z)).value;
    const cplx log_s =
        li2 / (cplx(0.0, 2.0) * g10.gamma) + fig8::igamma(z, g10);
    CHECK(rel_err(qdilog(z, g10), std::exp(log_s)) < 1e-8);
  }
}

TEST_CASE("correction integral is O(gamma) small") {
  CHECK(std::abs(fig8::igamma(cplx(0.2, 0.0), g10)) <
        0.1 * std::abs(g10.gamma));
}

TEST_CASE("semicircle radius does not matter away from the integrand poles") {
  const cplx z(0.7, -0.4);
  fig8::QuadratureConfig a, b;
  a.semicircle_radius = 0.25;
  b.semicircle_radius = 0.75;
  const cplx va = qdilog(z, g10, a);
  const cplx vb = qdilog(z, g10, b);
  CHECK(rel_err(va, vb) < 1e-10);
  // radius at or beyond the nearest pole of the integrand is refused
  fig8::QuadratureConfig c;
  c.semicircle_radius = 1.0;
  CHECK_THROWS_AS(qdilog(z, g10, c), fig8::Error);
}

TEST_CASE("shift equation at fixed points") {
  for (cplx z : {cplx(0.5, 0.1), cplx(-1.8, -0.6), cplx(2.0, 0.3)}) {
    const cplx lhs =
        (1.0 + std::exp(cplx(0.0, 1.0) * z)) * qdilog(z + g10.gamma, g10);
    const cplx rhs = qdilog(z - g10.gamma, g10);
    CHECK(rel_err(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("arguments near the strip edge are refused") {
  const double edge = pi_v + g10.gamma.real();
  const auto chk = fig8::qdilog_domain(cplx(edge - 0.04, 0.0), g10);
  CHECK(chk.admissible);  // inside the open strip ...
  CHECK(chk.margin == doctest::Approx(0.04).epsilon(1e-9));
  // ... but below the refusal margin
  CHECK_THROWS_AS(qdilog(cplx(edge - 0.04, 0.0), g10), fig8::Error);
  try {
    qdilog(cplx(edge + 0.1, 0.0), g10);
  } catch (const fig8::Error& e) {
    CHECK(e.kind() == fig8::ErrorKind::outside_domain);
  }
  CHECK_THROWS_AS(fig8::igamma(cplx(3.2, 0.0), g10), fig8::Error);
}

TEST_CASE("closed ratio matches the S quotient") {
  for (int n : {2, 4}) {
    const ModelParams p = mp(10, n, 0.5);
    const GammaParam g = GammaParam::from_model(p);
    const cplx iu(0.0, p.u);
    const cplx num = qdilog(-pi_v - iu + g.gamma, g);
    const cplx den = qdilog(pi_v - iu - double(2 * n - 3) * g.gamma, g);
    CHECK(rel_err(fig8::sratio_closed(p.u, g, n), num / den) < 1e-7);
  }
}

TEST_CASE("closed ratio refuses u = 0 and singular denominators") {
  CHECK_THROWS_AS(fig8::sratio_closed(0.0, g10, 2), fig8::Error);
}

TEST_CASE("geometric-sum identities against the brute sums") {
  const cplx A(0.3, 0.1);
  for (int n : {2, 4, 6}) {
    cplx sum_plus(0, 0), sum_alt(0, 0);
    for (int k = 0; k <= n - 2; ++k) {
      const cplx t = std::exp(-2.0 * double(k) * A);
      sum_plus += t;
      sum_alt += (k % 2 ? -t : t);
    }
    const auto [lhs_sinh, lhs_cosh] = fig8::geom_identities(A, n);
    CHECK(std::abs(lhs_sinh - sum_plus) < 1e-13);
    CHECK(std::abs(lhs_cosh - sum_alt) < 1e-13);
  }
}

TEST_CASE("geometric-sum identities refuse singular denominators") {
  CHECK_THROWS_AS(fig8::geom_identities(cplx(0.0, pi_v), 4), fig8::Error);
  try {
    fig8::geom_identities(cplx(0.0, pi_v), 4);
  } catch (const fig8::Error& e) {
    CHECK(e.kind() == fig8::ErrorKind::singular_argument);
  }
}
