#include "fig8/potential.hpp"

#include <algorithm>
#include <cmath>

#include "fig8/dilogarithm.hpp"
#include "fig8/quadrature.hpp"

namespace fig8 {

namespace {

// Li2(e^w) with cut values continued from the strip the exponent lives in:
// when e^w lands on [1, inf) the side is decided by which multiple of 2*pi*i
// the exponent sits at, so paths running along Im w = 2*pi (approached from
// inside (0, 2*pi)) pick the limit from below instead of the default limit
// from above.  The two differ by 2*pi*i*log|e^w| = 2*pi*i*Re(w).
cplx li2e(cplx w) {
  const BranchedValue d = dilog(std::exp(w));
  if (d.on_cut && w.imag() >= pi_v)
    return d.value - cplx(0.0, 2.0 * pi_v) * w.real();
  return d.value;
}

// Reference n=2 saddle exponent: phi(u) = -i acos(cosh u - 1/2), purely
// imaginary on [0, u_max).
cplx phi_ref(double u) {
  return cplx(0.0, -std::acos(std::cosh(u) - 0.5));
}

cplx z2_ref(double u) {
  const cplx xi(u, 2.0 * pi_v);
  return (phi_ref(u) + cplx(0.0, 2.0 * pi_v)) / xi;
}

}  // namespace

cplx phi2(cplx z, double u) {
  const cplx xi(u, 2.0 * pi_v);
  return (li2e(u - z * xi) - li2e(u + z * xi)) / xi - u * z;
}

cplx phiN(cplx z, const ModelParams& p) {
  const cplx xi = p.xi();
  const double u = p.u;
  const cplx zs = z + p.s();
  return (li2e(u - zs * xi) + li2e(z * xi) - li2e(u + z * xi) - li2e(zs * xi)) /
             xi -
         u * z;
}

cplx phiN_derivative(cplx z, const ModelParams& p) {
  const cplx xi = p.xi();
  const double u = p.u;
  const cplx zs = z + p.s();
  return -dilog_exp_derivative(u - zs * xi) + dilog_exp_derivative(z * xi) -
         dilog_exp_derivative(u + z * xi) - dilog_exp_derivative(zs * xi) - u;
}

SaddleData solve_saddle(const ModelParams& p) {
  p.validate();
  const double a = std::exp(p.u);
  const cplx b = std::exp(p.s() * p.xi());
  const cplx c3 = a * b * b;
  const cplx c2 = -(b * b + a * a * b);
  const cplx c1 = a * a + b;
  const cplx c0 = cplx(-a, 0.0);

  const auto roots = solve_cubic(c3, c2, c1, c0);
  const cplx w_ref = std::exp(phi_ref(p.u));
  int best = 0, second = 1;
  double d_best = std::abs(roots[0].root - w_ref);
  double d_second = std::abs(roots[1].root - w_ref);
  if (d_second < d_best) {
    std::swap(best, second);
    std::swap(d_best, d_second);
  }
  const double d2 = std::abs(roots[2].root - w_ref);
  if (d2 < d_best) {
    second = best;
    d_second = d_best;
    best = 2;
    d_best = d2;
  } else if (d2 < d_second) {
    d_second = d2;
  }
  if (d_second - d_best < 1e-12)
    throw Error(ErrorKind::ambiguous_root,
                "two cubic roots equidistant from the reference saddle");

  SaddleData s;
  s.w = roots[best].root;
  s.residual = roots[best].residual;
  s.iterations = roots[best].iterations;
  s.a = cplx(a, 0.0);
  s.b = b;
  cplx lw = std::log(s.w);
  if (lw.imag() <= 0.0) lw += cplx(0.0, 2.0 * pi_v);
  s.z = lw / p.xi();
  return s;
}

cplx phi_second_at_saddle(const ModelParams& p) {
  const SaddleData sd = solve_saddle(p);
  const cplx xi = p.xi();
  const double u = p.u;
  const cplx zs = sd.z + p.s();
  auto h = [](cplx mu) { return 1.0 / cexpm1(-mu); };
  const cplx closed = xi * (h(u - zs * xi) + h(sd.z * xi) - h(u + zs * xi) -
                            h(zs * xi));
  const cplx fd =
      differentiate2([&](cplx z) { return phiN(z, p); }, sd.z, 0.01);
  if (std::abs(closed - fd) > 1e-7 * std::max(1.0, std::abs(closed)))
    throw Error(ErrorKind::unstable_differentiation,
                "closed-form second derivative disagrees with differences");
  return closed;
}

std::vector<cplx> diff2_sequence(const std::vector<ModelParams>& seq) {
  if (seq.empty())
    throw Error(ErrorKind::invalid_argument, "empty parameter sequence");
  for (size_t i = 0; i < seq.size(); ++i) {
    seq[i].validate();
    if (seq[i].n != seq[0].n || seq[i].u != seq[0].u)
      throw Error(ErrorKind::invalid_argument,
                  "sequence entries must share n and u");
    if (i > 0 && seq[i].N <= seq[i - 1].N)
      throw Error(ErrorKind::invalid_argument, "N must increase along the sequence");
  }
  const double u = seq[0].u;
  const cplx z2 = z2_ref(u);
  const cplx base = phi2(z2, u);
  std::vector<cplx> out;
  out.reserve(seq.size());
  for (const auto& p : seq) {
    const cplx zM = solve_saddle(p).z;
    out.push_back(double(p.M()) * (phi2(zM, u) - base));
  }
  return out;
}

double diff2_limit_check(const std::vector<ModelParams>& seq) {
  const auto vals = diff2_sequence(seq);
  double worst = 0.0;
  for (size_t i = vals.size() / 2; i < vals.size(); ++i)
    worst = std::max(worst, std::abs(vals[i]));
  return worst;
}

}  // namespace fig8
