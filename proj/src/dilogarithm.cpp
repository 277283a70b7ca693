#include "fig8/dilogarithm.hpp"

#include <cmath>

namespace fig8 {

namespace {

constexpr double kPi2_6 = 1.6449340668482264365;  // pi^2/6

// Li2(z) = sum_j c_j w^{j+1}, w = -log(1-z); c_j = B_j/(j+1)! (odd j > 1
// vanish).  Converges fast for |z| <= 1, Re z <= 1/2, where |w| < 1.32.
cplx dilog_log_series(cplx z) {
  const cplx w = -clog1p(-z);
  const cplx w2 = w * w;
  static constexpr double c[16] = {
      2.7777777777777777778e-2,  -2.7777777777777777778e-4,
      4.7241118669690098262e-6,  -9.1857730746619635509e-8,
      1.8978869988970999072e-9,  -4.0647616451442255268e-11,
      8.9216910204564525552e-13, -1.9939295860721075687e-14,
      4.5189800296199181917e-16, -1.0356517612181247014e-17,
      2.3952186210261867457e-19, -5.5817858743250093363e-21,
      1.3091507554183212858e-22, -3.0874198024267402932e-24,
      7.3159756527022034204e-26, -1.740845657234000741e-27};
  cplx sum{0.0, 0.0};
  cplx p = w * w2;  // w^3
  for (int j = 0; j < 16; ++j) {
    const cplx term = c[j] * p;
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
    p *= w2;
  }
  return w - 0.25 * w2 + sum;
}

// Valid off [1, inf); at most one inversion and one reflection before the
// series region |z| <= 1, Re z <= 1/2 is reached.
cplx dilog_principal(cplx z) {
  if (std::abs(z) > 1.0) {
    const cplx lg = std::log(-z);
    return -dilog_principal(1.0 / z) - kPi2_6 - 0.5 * lg * lg;
  }
  if (z.real() > 0.5) {
    if (z == cplx(1.0, 0.0)) return cplx(kPi2_6, 0.0);
    return kPi2_6 - std::log(z) * std::log(1.0 - z) - dilog_log_series(1.0 - z);
  }
  return dilog_log_series(z);
}

}  // namespace

cplx clog1p(cplx x) {
  if (std::abs(x) < 1e-4) {
    // log(1+x) = x - x^2/2 + x^3/3 - x^4/4, error < |x|^5/5 < 1e-20
    return x * (1.0 - x * (0.5 - x * (1.0 / 3.0 - x * 0.25)));
  }
  return std::log(1.0 + x);
}

cplx cexpm1(cplx v) {
  const double x = v.real(), y = v.imag();
  const double emx = std::expm1(x);
  const double shy = std::sin(0.5 * y);
  return {emx * std::cos(y) - 2.0 * shy * shy, std::exp(x) * std::sin(y)};
}

BranchedValue dilog(cplx z) {
  if (!finite(z))
    throw Error(ErrorKind::invalid_argument, "dilog argument not finite");
  if (std::abs(z.imag()) <= 1e-14 && z.real() >= 1.0) {
    // Limit from above: Li2(x+i0) = pi^2/3 - ln(x)^2/2 - Li2(1/x) + i pi ln x.
    const double x = z.real();
    if (x == 1.0) return {cplx(kPi2_6, 0.0), true};
    const double lx = std::log(x);
    const cplx inner = dilog_principal(cplx(1.0 / x, 0.0));
    return {cplx(2.0 * kPi2_6 - 0.5 * lx * lx - inner.real(), pi_v * lx), true};
  }
  return {dilog_principal(z), false};
}

cplx dilog_exp_derivative(cplx mu) {
  if (!finite(mu))
    throw Error(ErrorKind::invalid_argument, "argument not finite");
  // e^{mu} lies on [1, inf) iff Im mu = 0 (mod 2pi) and Re mu >= 0.
  const double im = std::remainder(mu.imag(), 2.0 * pi_v);
  if (std::abs(im) <= 1e-14 && mu.real() >= -1e-14)
    throw Error(ErrorKind::on_branch_cut, "e^{mu} lies on [1, inf)");
  if (mu.real() > 500.0) {
    // 1 - e^{mu} = -e^{mu}(1 - e^{-mu}); avoids overflow in exp.
    return -(mu + std::log(-(1.0 - std::exp(-mu))));
  }
  return -clog1p(-std::exp(mu));
}

}  // namespace fig8
