#pragma once

#include <vector>

#include "fig8/types.hpp"

namespace fig8 {

struct SaddleData {
  cplx w;           // cubic root, w = e^{z xi}
  cplx z;           // saddle position with Im(z xi) in (0, 2pi)
  double residual;  // |a b^2 w^3 - (b^2 + a^2 b) w^2 + (a^2 + b) w - a|
  int iterations;   // Newton polish steps
  cplx a;           // e^u
  cplx b;           // e^{(n-2) xi/(N+n-2)}
};

// Phi2(z) = (1/xi)(Li2(e^{u-xi z}) - Li2(e^{u+xi z})) - u z.
cplx phi2(cplx z, double u);

// PhiN(z) = (1/xi)[Li2(e^{u-(z+s)xi}) + Li2(e^{z xi})
//                  - Li2(e^{u+z xi}) - Li2(e^{(z+s)xi})] - u z,
// s = (n-2)/(N+n-2).  Reduces to phi2 when n = 2.
cplx phiN(cplx z, const ModelParams& p);

// dPhiN/dz = log((1-e^{u-(z+s)xi})(1-e^{u+z xi})(1-e^{(z+s)xi})/(1-e^{z xi})) - u
// as a sum of principal logs; the saddle condition is phiN_derivative = 0.
cplx phiN_derivative(cplx z, const ModelParams& p);

// Solves the cubic a b^2 w^3 - (b^2 + a^2 b) w^2 + (a^2 + b) w - a = 0 with
// a = e^u, b = e^{s xi}; picks the root nearest the n=2 reference e^{phi(u)}
// and unwinds the log so Im(z xi) lies in (0, 2pi).
SaddleData solve_saddle(const ModelParams& p);

// d^2 PhiN/dz^2 at the saddle, from the closed-form derivative of
// phiN_derivative, cross-checked against central differences (throws
// unstable-differentiation if the two disagree beyond 1e-6).
cplx phi_second_at_saddle(const ModelParams& p);

// max over the tail (second half) of |M*(Phi2(z_M) - Phi2(z2))| where z_M is
// the n-saddle for each entry; the sequence must share (n,u) and increase in N.
double diff2_limit_check(const std::vector<ModelParams>& seq);

// The individual values behind diff2_limit_check, one per entry.
std::vector<cplx> diff2_sequence(const std::vector<ModelParams>& seq);

}  // namespace fig8
