#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "fig8/errors.hpp"

namespace fig8 {

using cplx = std::complex<double>;

inline constexpr double pi_v = 3.14159265358979323846264338327950288;

// Largest admissible deformation: log((3+sqrt(5))/2).  At this value the
// quadratic prefactor of the asymptotic expansion degenerates.
inline constexpr double u_max = 0.9624236501192069;

// Parameter bundle for the deformed figure-eight evaluation at
// q = exp(xi/(N+n-2)), xi = u + 2*pi*i.
struct ModelParams {
  long N = 1;      // color (number of summands in the state sum)
  int n = 2;       // rank parameter, even, >= 2
  double u = 0.0;  // deformation, 0 <= u < u_max; u = 0 is the root-of-unity point

  long M() const { return N + n - 2; }
  cplx xi() const { return cplx(u, 2.0 * pi_v); }
  cplx gamma() const { return cplx(2.0 * pi_v, -u) / (2.0 * double(M())); }
  // Shift s = (n-2)/(N+n-2) appearing in the potential and the saddle cubic.
  double s() const { return double(n - 2) / double(M()); }

  void validate() const {
    if (N < 1) throw Error(ErrorKind::invalid_argument, "N must be >= 1");
    if (n < 2 || n % 2 != 0)
      throw Error(ErrorKind::invalid_argument, "n must be even and >= 2");
    if (!(u >= 0.0) || u >= u_max || !std::isfinite(u))
      throw Error(ErrorKind::invalid_argument,
                  "u must satisfy 0 <= u < 0.9624236501192069");
  }
};

// Complex quantity tracked by log|.| and phase so magnitudes beyond double
// range stay representable.
struct LogComplex {
  double log_abs = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex from(cplx v) {
    LogComplex r;
    r.log_abs = std::log(std::abs(v));
    r.phase = std::arg(v);
    return r;
  }
  static LogComplex from_log(cplx log_value) {
    return LogComplex{log_value.real(), log_value.imag()};
  }

  cplx value() const {  // overflows to inf beyond double range
    return std::exp(log_abs) * cplx(std::cos(phase), std::sin(phase));
  }
  LogComplex operator*(const LogComplex& o) const {
    return {log_abs + o.log_abs, phase + o.phase};
  }
  LogComplex operator/(const LogComplex& o) const {
    return {log_abs - o.log_abs, phase - o.phase};
  }
  // Phase wrapped to (-pi, pi].
  double phase_principal() const {
    double p = std::remainder(phase, 2.0 * pi_v);
    if (p <= -pi_v) p += 2.0 * pi_v;
    return p;
  }
};

inline bool finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace fig8
