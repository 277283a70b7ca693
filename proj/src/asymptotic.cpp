#include "fig8/asymptotic.hpp"

#include <cmath>
#include <vector>

#include "fig8/dilogarithm.hpp"
#include "fig8/invariant.hpp"
#include "fig8/potential.hpp"

namespace fig8 {

cplx phi_u(double u) {
  if (!(u >= 0.0) || u >= u_max)
    throw Error(ErrorKind::outside_range, "requires 0 <= u < 0.9624236501192069");
  return cplx(0.0, -std::acos(std::cosh(u) - 0.5));
}

cplx s_of_u(double u) {
  const cplx phi = phi_u(u);
  return dilog(std::exp(u - phi)).value - dilog(std::exp(u + phi)).value -
         u * phi;
}

cplx t_of_u(double u) {
  if (!(u > 0.0) || u >= u_max)
    throw Error(ErrorKind::outside_range, "requires 0 < u < 0.9624236501192069");
  const double X = std::exp(u) + std::exp(-u);
  const double radicand = (X + 1.0) * (X - 3.0);
  if (std::abs(radicand) < 1e-12)
    throw Error(ErrorKind::degenerate_T, "quadratic prefactor degenerates");
  return 2.0 / std::sqrt(cplx(radicand, 0.0));
}

LogComplex rhs_theorem_main(const ModelParams& p) {
  p.validate();
  if (p.u <= 0.0)
    throw Error(ErrorKind::singular_prefactor,
                "1/(2 sinh(u/2)) and (e^u - 1)^{-(n-2)} blow up at u = 0");
  const cplx phi = phi_u(p.u);
  const cplx S = s_of_u(p.u);
  const cplx T = t_of_u(p.u);
  const cplx xi = p.xi();
  const double M = double(p.M());
  const double nm2 = double(p.n - 2);

  const cplx log_rhs =
      nm2 * std::log((1.0 - std::exp(p.u - phi)) * (1.0 - std::exp(phi))) -
      std::lgamma(double(p.n - 1)) -
      nm2 * std::log(cplx(std::expm1(p.u), 0.0)) +
      0.5 * cplx(std::log(pi_v), pi_v) -
      std::log(cplx(2.0 * std::sinh(p.u / 2.0), 0.0)) + 0.5 * std::log(T) +
      (0.5 + nm2) * std::log(M / xi) + (M / xi) * S;
  return LogComplex::from_log(log_rhs);
}

cplx phase_calibration() {
  static const cplx c = [] {
    ModelParams p;
    p.N = 2000;
    p.n = 2;
    p.u = 0.5;
    const InvariantValue j = homfly_exact(p);
    const LogComplex rhs = rhs_theorem_main(p);
    return std::exp(cplx(0.0, j.phase - rhs.phase));
  }();
  return c;
}

cplx steepest_descent_integral(const ModelParams& p,
                               const QuadratureConfig& cfg) {
  p.validate();
  if (p.N > 400)
    throw Error(ErrorKind::invalid_argument,
                "descent quadrature is meant for N <= 400");
  const cplx zN = solve_saddle(p).z;
  const cplx corner = zN * (1.0 / zN).real();
  const double M = double(p.M());

  // Pre-split each leg into pieces of length <= 0.02 so the adaptive pass
  // starts from a fine partition.
  std::vector<cplx> pts{cplx(0.0, 0.0)};
  auto extend = [&pts](cplx to) {
    const cplx from = pts.back();
    const int pieces = std::max(1, int(std::ceil(std::abs(to - from) / 0.02)));
    for (int i = 1; i <= pieces; ++i)
      pts.push_back(from + (to - from) * (double(i) / pieces));
  };
  extend(zN);
  extend(corner);
  extend(cplx(1.0, 0.0));

  auto f = [&](cplx z) { return std::exp(M * phiN(z, p)); };
  return integrate_path(f, ContourPath::polyline(pts), cfg);
}

cplx steepest_descent_closed_form(const ModelParams& p) {
  const cplx zN = solve_saddle(p).z;
  const cplx dd = phi_second_at_saddle(p);
  const double M = double(p.M());
  return std::sqrt(2.0 * pi_v / (M * (-dd))) * std::exp(M * phiN(zN, p));
}

AsymptoticReport build_report(const ModelParams& p) {
  AsymptoticReport r;
  r.params = p;
  const InvariantValue j = homfly_exact(p);
  r.exact = j.log_form();
  const LogComplex rhs_raw = rhs_theorem_main(p);
  r.rhs = rhs_raw * LogComplex::from(phase_calibration());
  const LogComplex q = r.exact / r.rhs;
  r.ratio = q.value();
  r.growth_exact = r.exact.log_abs / double(p.N);
  r.growth_predicted =
      (s_of_u(p.u) / p.xi()).real() * double(p.M()) / double(p.N);
  return r;
}

}  // namespace fig8
