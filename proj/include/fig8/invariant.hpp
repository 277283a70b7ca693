#pragma once

#include <vector>

#include "fig8/quadrature.hpp"
#include "fig8/types.hpp"

namespace fig8 {

struct InvariantValue {
  cplx value;                   // inf components when out of double range
  long terms = 0;               // = N
  double max_term_magnitude = 0.0;
  // Log-form companions, always valid even when value overflows double.
  double log_abs = 0.0;
  double phase = 0.0;  // principal
  double max_term_log_abs = 0.0;
  // Decimal digits lost to cancellation: log10(max_term/|sum|).
  double cancellation_digits = 0.0;
  // Working precision (decimal digits) of the arithmetic tier that produced
  // the result.
  int precision_digits = 0;

  LogComplex log_form() const { return LogComplex{log_abs, phase}; }
};

// [k] = q^{k/2} - q^{-k/2}; the overload taking q uses the principal log of q
// for fractional powers, the ModelParams overload uses the defining exponent
// xi/(N+n-2) directly.
cplx quantum_integer(long k, cplx q);
cplx quantum_integer(long k, const ModelParams& p);

// [k]! = prod_{j=1..k} [j]; empty product = 1.
cplx quantum_factorial(long k, const ModelParams& p);

// Exact state sum
//   J = (1/[n-2]!) sum_{k=0}^{N-1} ([n-2+k]!/[k]!) q^{-k(N+(n-2)/2)}
//       prod_{l=1}^{k} (1 - q^{N-l})(1 - q^{N+l+n-2})
// with running updates of the factorial ratio and the product.  Evaluated in
// double for small N; escalates to multiple-precision arithmetic when the
// terms overflow double range or cancellation eats the working digits
// (log10(max_term/|J|) grows linearly in N for u > 0).
InvariantValue homfly_exact(const ModelParams& p);

// The same invariant assembled from quantum-dilogarithm quotients:
//   J = (1/[n-2]!) (S(-pi-iu+g)/S(pi-iu-(2n-3)g))
//       sum_k e^{-ku-(n-2)(n-1)xi/(4M)} Q_k,
//   Q_k = S(pi-iu-(2n+2k-3)g) S(-pi+(2k+1)g) /
//         (S(-pi-iu+(2k+1)g) S(-pi+(2n+2k-3)g)).
// Each term costs four quadratures, so N <= 64 is required.
cplx homfly_qdilog_form(const ModelParams& p, const QuadratureConfig& cfg = {});

// Integrand of the residue representation:
//   g(z) = e^{-Muz} S(pi-iu+i(z+s)xi) S(-pi-iz xi) /
//          (S(-pi-iu-iz xi) S(-pi-i(z+s)xi)).
// z must lie in the strip domain where all four arguments are admissible.
cplx g_integrand(cplx z, const ModelParams& p, const QuadratureConfig& cfg = {});

// J reconstructed from the residues of tan(M pi z) g(z) at z_k = (2k+1)/(2M):
//   J = pref * (-2i/M) * sum_k g(z_k),
//   pref = (1/[n-2]!) * sratio * (i e^{u/2} M / 2) * e^{-(n-2)(n-1)xi/(4M)}.
cplx homfly_residue_form(const ModelParams& p, const QuadratureConfig& cfg = {});

// Same sum restricted to poles with eps < z_k < 1 - eps (what a contour
// integral over C(eps) encloses).
cplx residue_sum_window(const ModelParams& p, double eps,
                        const QuadratureConfig& cfg = {});

// Quadrature of tan(M pi z) g(z) over the closed contour C(eps) =
// C_plus(eps) followed by C_minus(eps).
cplx tan_contour_integral(const ModelParams& p, double eps,
                          const QuadratureConfig& cfg = {});

// The two halves of the closed contour from the residue representation:
//   C_plus(eps):  1-eps -> 1-u/2pi-eps+i -> -u/2pi+eps+i -> eps
//   C_minus(eps): eps -> eps+u/2pi-i -> 1-eps+u/2pi-i -> 1-eps
ContourPath c_plus_path(double u, double eps);
ContourPath c_minus_path(double u, double eps);

// Kashaev-point brute force: sum_k prod_{l=1}^k |1-q^l|^2, q = e^{2pi i/N}.
double kashaev_brute(long N);

// tan(w) computed through e^{2iw} on the side that avoids overflow for large
// |Im w|.
cplx tan_stable(cplx w);

}  // namespace fig8
