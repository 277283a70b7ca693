#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "fig8/asymptotic.hpp"
#include "fig8/invariant.hpp"
#include "fig8/potential.hpp"
#include "fig8/quadrature.hpp"

using fig8::cplx;
using fig8::ModelParams;
using fig8::phi_u;
using fig8::pi_v;
using fig8::s_of_u;
using fig8::t_of_u;
using fig8::u_max;

namespace {

ModelParams mp(long N, int n, double u) {
  ModelParams p;
  p.N = N;
  p.n = n;
  p.u = u;
  return p;
}

}  // namespace

TEST_CASE("geodesic angle phi(u)") {
  CHECK(std::abs(phi_u(0.5) - cplx(0.0, -0.8922963175199653)) < 1e-14);
  CHECK(std::abs(phi_u(0.0) - cplx(0.0, -pi_v / 3.0)) < 1e-14);
  // defining equation 2 cosh(phi) = 2 cosh(u) - 1
  for (double u : {0.0, 0.2, 0.5, 0.8, 0.95}) {
    CHECK(std::abs(std::cosh(phi_u(u)) - (std::cosh(u) - 0.5)) < 1e-13);
  }
  CHECK(std::abs(phi_u(u_max - 1e-9)) < 1e-3);  // closes up at the endpoint
  CHECK_THROWS_AS(phi_u(-0.1), fig8::Error);
  CHECK_THROWS_AS(phi_u(0.97), fig8::Error);
}

TEST_CASE("action S(u) pinned values") {
  for (auto [u, want] : {std::pair<double, double>{0.0, 2.029883212819307},
                         {0.3, 3.051500554837427},
                         {0.5, 3.826865100751279},
                         {0.9, 5.689513764484097}}) {
    const cplx S = s_of_u(u);
    CHECK(std::abs(S.real()) < 1e-10);
    CHECK(std::abs(S.imag() - want) < 1e-12 * want);
  }
}

TEST_CASE("quadratic prefactor T(u)") {
  CHECK(std::abs(t_of_u(0.5) - cplx(0.0, -1.2844967211654233)) < 1e-12);
  // T^2 (X+1)(X-3) = 4 with X = 2 cosh u
  for (double u : {0.1, 0.5, 0.9}) {
    const double X = 2.0 * std::cosh(u);
    const cplx T = t_of_u(u);
    CHECK(std::abs(T * T * (X + 1.0) * (X - 3.0) - 4.0) < 1e-12);
  }
  CHECK(std::abs(t_of_u(u_max - 1e-9)) > 1000.0);  // blows up at the endpoint
  CHECK_THROWS_AS(t_of_u(0.0), fig8::Error);
  try {
    t_of_u(u_max - 1e-13);
  } catch (const fig8::Error& e) {
    CHECK(e.kind() == fig8::ErrorKind::degenerate_T);
  }
}

TEST_CASE("calibration phase is unimodular") {
  CHECK(std::abs(std::abs(fig8::phase_calibration()) - 1.0) < 1e-12);
}

TEST_CASE("prediction magnitude is within 5% at N=1000, n=2") {
  const auto r = fig8::build_report(mp(1000, 2, 0.5));
  CHECK(std::abs(std::abs(r.ratio) - 1.0) < 0.05);
  // report consistency
  CHECK(std::abs(std::abs(r.ratio) -
                 std::exp(r.exact.log_abs - r.rhs.log_abs)) <
        1e-12 * std::abs(r.ratio));
}

TEST_CASE("prediction grows at rate Re(S/xi)") {
  const cplx S = s_of_u(0.5);
  const double rate = (S / cplx(0.5, 2.0 * pi_v)).real();
  const double g2000 = fig8::rhs_theorem_main(mp(2001, 4, 0.5)).log_abs -
                       fig8::rhs_theorem_main(mp(2000, 4, 0.5)).log_abs;
  CHECK(std::abs(g2000 - rate) < 1.5e-3);
  const double g4000 = fig8::rhs_theorem_main(mp(4001, 4, 0.5)).log_abs -
                       fig8::rhs_theorem_main(mp(4000, 4, 0.5)).log_abs;
  CHECK(std::abs(g4000 - rate) < 1e-3);
}

TEST_CASE("right-hand side refuses u = 0") {
  CHECK_THROWS_AS(fig8::rhs_theorem_main(mp(100, 2, 0.0)), fig8::Error);
  try {
    fig8::rhs_theorem_main(mp(100, 2, 0.0));
  } catch (const fig8::Error& e) {
    CHECK(e.kind() == fig8::ErrorKind::singular_prefactor);
  }
}

TEST_CASE("growth columns agree within the stated slack at N=1000") {
  for (double u : {0.3, 0.5, 0.9}) {
    const auto r2 = fig8::build_report(mp(1000, 2, u));
    CHECK(std::abs(r2.growth_exact / r2.growth_predicted - 1.0) < 0.02);
    const auto r4 = fig8::build_report(mp(1000, 4, u));
    CHECK(std::abs(r4.growth_exact / r4.growth_predicted - 1.0) < 0.04);
  }
}

TEST_CASE("descent quadrature approaches the closed form like 1/N") {
  const cplx r50 = fig8::steepest_descent_integral(mp(50, 2, 0.5)) /
                   fig8::steepest_descent_closed_form(mp(50, 2, 0.5));
  const cplx r100 = fig8::steepest_descent_integral(mp(100, 2, 0.5)) /
                    fig8::steepest_descent_closed_form(mp(100, 2, 0.5));
  const double e50 = std::abs(r50 - 1.0);
  const double e100 = std::abs(r100 - 1.0);
  CHECK(e50 < 0.02);
  CHECK(e50 > 1e-4);  // the 1/N correction is visible, not noise
  CHECK(e100 < e50);
  CHECK_THROWS_AS(fig8::steepest_descent_integral(mp(500, 2, 0.5)),
                  fig8::Error);
}

TEST_CASE("the integral does not depend on the path within the strip") {
  const ModelParams p = mp(50, 2, 0.5);
  const double M = double(p.M());
  auto f = [&](cplx z) { return std::exp(M * fig8::phiN(z, p)); };
  const auto straight =
      fig8::ContourPath::polyline({cplx(0.1, 0.0), cplx(0.9, 0.0)});
  const auto bowed = fig8::ContourPath::polyline(
      {cplx(0.1, 0.0), cplx(0.3, 0.05), cplx(0.7, 0.05), cplx(0.9, 0.0)});
  const cplx a = fig8::integrate_path(f, straight);
  const cplx b = fig8::integrate_path(f, bowed);
  CHECK(std::abs(a - b) < 1e-8 * std::abs(a));
}
