#pragma once

#include "fig8/quadrature.hpp"
#include "fig8/types.hpp"

namespace fig8 {

struct AsymptoticReport {
  ModelParams params;
  LogComplex exact;        // log-form; .value() finite when |log| < ~700
  LogComplex rhs;          // calibrated right-hand side, log-form
  cplx ratio{0.0, 0.0};    // exact/rhs
  double growth_exact = 0.0;      // log|J_N|/N
  double growth_predicted = 0.0;  // Re(S(u)/xi)*(N+n-2)/N
};

// phi(u) = arccosh(cosh u - 1/2); purely imaginary on [0, u_max) with the
// branch fixed so that Re(S(u)/xi) > 0 (the invariant grows).
cplx phi_u(double u);

// S(u) = Li2(e^{u-phi}) - Li2(e^{u+phi}) - u*phi.
cplx s_of_u(double u);

// T(u) = 2/sqrt((e^u + e^{-u} + 1)(e^u + e^{-u} - 3)); the radicand is
// negative on (0, u_max) so the value is purely imaginary up to branch.
cplx t_of_u(double u);

// Right-hand side of the main asymptotic formula:
//   ((1-e^{u-phi})(1-e^{phi}))^{n-2} * (1/(n-2)!) * (1/(e^u-1)^{n-2})
//   * (sqrt(-pi)/(2 sinh(u/2))) * T^{1/2} * (M/xi)^{1/2+(n-2)}
//   * exp((M/xi) S(u)),  M = N+n-2,
// assembled with principal branches, uncalibrated.  Log-form output.
LogComplex rhs_theorem_main(const ModelParams& p);

// The unimodular constant exp(i*(arg J - arg rhs)) measured once at
// (n=2, u=0.5, N=2000) and then held fixed; multiplies rhs in reports.
cplx phase_calibration();

// Integral of exp(M*PhiN) over 0 -> z_N -> z_N*Re(1/z_N) -> 1 (the descent
// path through the saddle).  N <= 400.
cplx steepest_descent_integral(const ModelParams& p,
                               const QuadratureConfig& cfg = {});

// Closed form sqrt(2pi/(M*(-Phi''))) * exp(M*Phi(z_N)) the integral converges
// to, principal square root.
cplx steepest_descent_closed_form(const ModelParams& p);

// Full comparison row: exact sum, calibrated rhs, ratio, growth rates.
AsymptoticReport build_report(const ModelParams& p);

}  // namespace fig8
