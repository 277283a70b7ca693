#include "fig8/quantum_dilog.hpp"

#include <cmath>
#include <sstream>

#include "fig8/dilogarithm.hpp"

namespace fig8 {

namespace {

// Minimum distance of |Re z| from the domain boundary pi + Re(gamma) we are
// willing to integrate at; closer arguments converge too slowly on the rays.
constexpr double kRefuseMargin = 0.05;

double pick_radius(const GammaParam& g, const QuadratureConfig& cfg) {
  const double cap = std::min(pi_v / std::abs(g.gamma), 1.0);
  if (cfg.semicircle_radius > 0.0) {
    if (cfg.semicircle_radius >= cap)
      throw Error(ErrorKind::invalid_argument,
                  "semicircle radius must be < min(pi/|gamma|, 1)");
    return cfg.semicircle_radius;
  }
  return 0.5 * cap;
}

// 1/sinh(w) that never overflows: for large |Re w| the exponential form
// 2 e^{-|w|-ish} is used.
cplx inv_sinh(cplx w) {
  const double x = w.real();
  if (x > 20.0) {
    const cplx e = std::exp(-w);
    return 2.0 * e / (1.0 - e * e);
  }
  if (x < -20.0) {
    const cplx e = std::exp(w);
    return -2.0 * e / (1.0 - e * e);
  }
  return 1.0 / std::sinh(w);
}

// 1/sinh(w) - 1/w; series for small |w| where the direct difference cancels.
cplx sinh_defect(cplx w) {
  if (std::abs(w) < 0.1) {
    const cplx w2 = w * w;
    return w * (-1.0 / 6.0 +
                w2 * (7.0 / 360.0 +
                      w2 * (-31.0 / 15120.0 + w2 * (127.0 / 604800.0))));
  }
  return inv_sinh(w) - 1.0 / w;
}

}  // namespace

QDilogDomainCheck qdilog_domain(cplx z, const GammaParam& g) {
  QDilogDomainCheck c;
  c.z = z;
  c.margin = pi_v + g.gamma.real() - std::abs(z.real());
  c.admissible = c.margin > 0.0;
  return c;
}

cplx qdilog(cplx z, const GammaParam& g, const QuadratureConfig& cfg) {
  if (!finite(z))
    throw Error(ErrorKind::invalid_argument, "argument not finite");
  const auto dom = qdilog_domain(z, g);
  if (dom.margin < kRefuseMargin) {
    std::ostringstream os;
    os << "|Re z| = " << std::abs(z.real()) << " too close to pi + Re gamma = "
       << pi_v + g.gamma.real();
    throw Error(ErrorKind::outside_domain, os.str());
  }
  const double R = pick_radius(g, cfg);
  const cplx gamma = g.gamma;

  // On the rays (t real, |t| >= 2) the two sinh factors are peeled into a
  // single decaying exponential so nothing overflows however long the tail.
  auto f = [&](cplx t) -> cplx {
    const double tr = t.real();
    if (std::abs(t.imag()) < 1e-300 && tr > 2.0) {
      const cplx expo = std::exp((z - pi_v - gamma) * tr);
      return 4.0 * expo /
             (tr * -cexpm1(cplx(-2.0 * pi_v * tr, 0.0)) * -cexpm1(-2.0 * gamma * tr));
    }
    if (std::abs(t.imag()) < 1e-300 && tr < -2.0) {
      const double s = -tr;
      const cplx expo = std::exp(-(z + pi_v + gamma) * s);
      return -4.0 * expo /
             (s * -cexpm1(cplx(-2.0 * pi_v * s, 0.0)) * -cexpm1(-2.0 * gamma * s));
    }
    return std::exp(z * t) / (std::sinh(pi_v * t) * std::sinh(gamma * t) * t);
  };

  const double decay_right = pi_v + gamma.real() - z.real();
  const double decay_left = pi_v + gamma.real() + z.real();

  ContourPath path;
  path.ray_in(cplx(-R, 0.0), cplx(-1.0, 0.0), decay_left);
  path.arc(cplx(0.0, 0.0), R, pi_v, 0.0);
  path.ray_out(cplx(1.0, 0.0), decay_right);

  const cplx integral = integrate_path(f, path, cfg);
  return std::exp(0.25 * integral);
}

cplx igamma(cplx z, const GammaParam& g, const QuadratureConfig& cfg) {
  if (!finite(z))
    throw Error(ErrorKind::invalid_argument, "argument not finite");
  if (std::abs(z.real()) > pi_v)
    throw Error(ErrorKind::outside_domain, "requires |Re z| <= pi");
  const double decay = pi_v - std::abs(z.real());
  if (decay < kRefuseMargin)
    throw Error(ErrorKind::outside_domain,
                "|Re z| too close to pi for the correction integral");
  const double R = pick_radius(g, cfg);
  const cplx gamma = g.gamma;

  auto f = [&](cplx t) -> cplx {
    const double tr = t.real();
    // e^{zt}/(t sinh(pi t)) in overflow-safe form on the rays.
    if (std::abs(t.imag()) < 1e-300 && tr > 2.0) {
      const cplx front = 2.0 * std::exp((z - pi_v) * tr) /
                         (tr * -cexpm1(cplx(-2.0 * pi_v * tr, 0.0)));
      return front * sinh_defect(gamma * t);
    }
    if (std::abs(t.imag()) < 1e-300 && tr < -2.0) {
      const double s = -tr;
      const cplx front = 2.0 * std::exp(-(z + pi_v) * s) /
                         (s * -cexpm1(cplx(-2.0 * pi_v * s, 0.0)));
      return front * sinh_defect(gamma * t);
    }
    return std::exp(z * t) / (t * std::sinh(pi_v * t)) * sinh_defect(gamma * t);
  };

  ContourPath path;
  path.ray_in(cplx(-R, 0.0), cplx(-1.0, 0.0), decay);
  path.arc(cplx(0.0, 0.0), R, pi_v, 0.0);
  path.ray_out(cplx(1.0, 0.0), decay);

  return 0.25 * integrate_path(f, path, cfg);
}

cplx sratio_closed(double u, const GammaParam& g, int n) {
  if (!(u > 0.0))
    throw Error(ErrorKind::invalid_argument, "requires u > 0");
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "n must be even and >= 2");
  const cplx gamma = g.gamma;
  const cplx num = std::exp(u * pi_v / gamma) - 1.0;
  cplx den{1.0, 0.0};
  for (int k = 0; k <= n - 2; ++k) {
    const cplx factor = cexpm1(cplx(u, 0.0) - 2.0 * double(k) * gamma * cplx(0.0, 1.0));
    if (std::abs(factor) < 1e-13) {
      std::ostringstream os;
      os << "denominator factor k=" << k << " vanishes";
      throw Error(ErrorKind::singular_ratio, os.str());
    }
    den *= factor;
  }
  return num / den;
}

std::pair<cplx, cplx> geom_identities(cplx A, int n) {
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "n must be even and >= 2");
  const cplx sh = std::sinh(A), ch = std::cosh(A);
  if (std::abs(sh) < 1e-13 || std::abs(ch) < 1e-13)
    throw Error(ErrorKind::singular_argument, "A at a pole of sinh or cosh");
  const cplx damp = std::exp(-double(n - 2) * A);
  return {damp * std::sinh(double(n - 1) * A) / sh,
          damp * std::cosh(double(n - 1) * A) / ch};
}

}  // namespace fig8
