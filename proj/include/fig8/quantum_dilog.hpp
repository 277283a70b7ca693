#pragma once

#include <optional>

#include "fig8/quadrature.hpp"
#include "fig8/types.hpp"

namespace fig8 {

// Contour parameter gamma with Re(gamma) > 0, optionally carrying the model
// source it was built from: gamma = (2*pi - i*u)/(2*(N+n-2)).
struct GammaParam {
  cplx gamma;
  std::optional<ModelParams> source;

  static GammaParam from_model(const ModelParams& p) {
    p.validate();
    return GammaParam{p.gamma(), p};
  }
  static GammaParam raw(cplx g) {
    if (!(g.real() > 0.0) || !finite(g))
      throw Error(ErrorKind::invalid_argument, "gamma must have Re > 0");
    return GammaParam{g, std::nullopt};
  }
};

struct QDilogDomainCheck {
  cplx z;
  bool admissible = false;  // |Re z| < pi + Re(gamma)
  double margin = 0.0;      // pi + Re(gamma) - |Re z|
};

QDilogDomainCheck qdilog_domain(cplx z, const GammaParam& g);

// S_gamma(z) = exp((1/4) Int_{C_R} e^{zt} / (sinh(pi t) sinh(gamma t)) dt/t)
// over the contour (-inf,-R] + upper semicircle + [R,inf).  Arguments with
// margin below 0.05 are refused (outside-domain) rather than integrated.
cplx qdilog(cplx z, const GammaParam& g, const QuadratureConfig& cfg = {});

// Correction integral I_gamma(z) with the 1/sinh - 1/(gamma t) subtraction;
// |Re z| <= pi required.  S_gamma(z) = exp(Li2(-e^{iz})/(2i gamma) + I_gamma(z)).
cplx igamma(cplx z, const GammaParam& g, const QuadratureConfig& cfg = {});

// Closed form of S_gamma(-pi - iu + gamma)/S_gamma(pi - iu - (2n-3) gamma):
// (e^{u pi/gamma} - 1) / prod_{k=0}^{n-2} (e^{u - 2k gamma i} - 1).
cplx sratio_closed(double u, const GammaParam& g, int n);

// Both geometric-sum left-hand sides:
//   e^{-(n-2)A} sinh((n-1)A)/sinh(A)  and  e^{-(n-2)A} cosh((n-1)A)/cosh(A).
std::pair<cplx, cplx> geom_identities(cplx A, int n);

}  // namespace fig8
