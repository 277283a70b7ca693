#include "fig8/invariant.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <sstream>

#include "fig8/dilogarithm.hpp"
#include "fig8/quantum_dilog.hpp"

namespace fig8 {

namespace {

constexpr double kLn10 = 2.302585092994045684;

inline double to_dbl(double x) { return x; }
template <class R>
double to_dbl(const R& x) {
  return x.template convert_to<double>();
}

// 1 - e^w.  The double tier goes through expm1 to keep relative accuracy for
// small w; at 50+ digits the direct form loses only a handful of digits.
inline cplx one_minus_exp(const cplx& w) { return -cexpm1(w); }
template <class C>
C one_minus_exp(const C& w) {
  using std::exp;
  return C(1) - exp(w);
}

// State sum at a fixed arithmetic tier.  C is the complex type, R its real
// component type, digits10 is reported back for the precision bookkeeping.
template <class C, class R>
InvariantValue exact_sum_impl(const ModelParams& p, int digits10) {
  using std::abs;
  using std::atan;
  using std::atan2;
  using std::exp;
  using std::log;
  using std::sinh;

  const R pi = atan(R(1)) * 4;
  const R u = R(p.u);
  const R Minv = R(1) / R(p.M());
  const C xi(u, pi * 2);
  const C e1 = xi * Minv;        // log q
  const C eh = e1 / R(2);        // log q / 2, so [m] = 2 sinh(m*eh)
  // q^{-(N + (n-2)/2)}: the constant ratio between consecutive power factors.
  const C pfac = exp(-(R(p.N) + R(p.n - 2) / 2) * e1);

  C frac(1), pw(1), prod(1), sum(0);
  R max_term(0);
  for (long k = 0; k < p.N; ++k) {
    if (k > 0) {
      frac *= sinh(R(p.n - 2 + k) * eh) / sinh(R(k) * eh);
      pw *= pfac;
      prod *= one_minus_exp(R(p.N - k) * e1) *
              one_minus_exp(R(p.N + k + p.n - 2) * e1);
    }
    const C term = frac * pw * prod;
    const R mag = abs(term);
    if (mag > max_term) max_term = mag;
    sum += term;
  }

  InvariantValue out;
  out.terms = p.N;
  out.precision_digits = digits10;
  out.value = cplx(to_dbl(sum.real()), to_dbl(sum.imag()));
  out.max_term_magnitude = to_dbl(max_term);
  out.max_term_log_abs = to_dbl(log(max_term));
  const R amag = abs(sum);
  if (amag > 0) {
    out.log_abs = to_dbl(log(amag));
    out.phase = to_dbl(atan2(sum.imag(), sum.real()));
  } else {
    out.log_abs = -std::numeric_limits<double>::infinity();
    out.phase = 0.0;
  }
  out.cancellation_digits =
      std::max(0.0, (out.max_term_log_abs - out.log_abs) / kLn10);
  return out;
}

}  // namespace

cplx quantum_integer(long k, cplx q) {
  return 2.0 * std::sinh(0.5 * double(k) * std::log(q));
}

cplx quantum_integer(long k, const ModelParams& p) {
  return 2.0 * std::sinh(double(k) * p.xi() / (2.0 * double(p.M())));
}

cplx quantum_factorial(long k, const ModelParams& p) {
  if (k < 0) throw Error(ErrorKind::invalid_argument, "factorial of k < 0");
  cplx f{1.0, 0.0};
  for (long j = 1; j <= k; ++j) f *= quantum_integer(j, p);
  return f;
}

InvariantValue homfly_exact(const ModelParams& p) {
  p.validate();
  if (p.N <= 256) {
    InvariantValue v = exact_sum_impl<cplx, double>(p, 16);
    if (finite(v.value) && v.cancellation_digits <= 6.0) return v;
  }
  namespace mp = boost::multiprecision;
  {
    InvariantValue v =
        exact_sum_impl<mp::cpp_complex_50, mp::cpp_bin_float_50>(p, 50);
    if (v.cancellation_digits <= 50 - 15) return v;
  }
  {
    InvariantValue v =
        exact_sum_impl<mp::cpp_complex_100, mp::cpp_bin_float_100>(p, 100);
    if (v.cancellation_digits <= 100 - 15) return v;
  }
  {
    InvariantValue v =
        exact_sum_impl<mp::cpp_complex<170>,
                       mp::number<mp::cpp_bin_float<170>>>(p, 170);
    if (v.cancellation_digits <= 170 - 15) return v;
  }
  std::ostringstream os;
  os << "cancellation exceeds every precision tier at N=" << p.N
     << " u=" << p.u;
  throw Error(ErrorKind::no_convergence, os.str());
}

cplx homfly_qdilog_form(const ModelParams& p, const QuadratureConfig& cfg) {
  p.validate();
  if (p.N > 64)
    throw Error(ErrorKind::invalid_argument,
                "quotient form costs four quadratures per term; N <= 64");
  const GammaParam gp = GammaParam::from_model(p);
  const cplx g = gp.gamma;
  const double u = p.u;
  const cplx iu(0.0, u);
  const cplx xi = p.xi();
  const double M = double(p.M());

  const cplx front = qdilog(-pi_v - iu + g, gp, cfg) /
                     qdilog(pi_v - iu - double(2 * p.n - 3) * g, gp, cfg);
  const cplx damp = std::exp(-double(p.n - 2) * double(p.n - 1) * xi / (4.0 * M));

  cplx sum{0.0, 0.0};
  for (long k = 0; k < p.N; ++k) {
    const double a = double(2 * k + 1);
    const double b = double(2 * p.n + 2 * k - 3);
    const cplx Q = qdilog(pi_v - iu - b * g, gp, cfg) *
                   qdilog(-pi_v + a * g, gp, cfg) /
                   (qdilog(-pi_v - iu + a * g, gp, cfg) *
                    qdilog(-pi_v + b * g, gp, cfg));
    sum += std::exp(-double(k) * u) * Q;
  }
  return damp * sum * front / quantum_factorial(p.n - 2, p);
}

cplx g_integrand(cplx z, const ModelParams& p, const QuadratureConfig& cfg) {
  const GammaParam gp = GammaParam::from_model(p);
  const cplx xi = p.xi();
  const cplx iu(0.0, p.u);
  const cplx i(0.0, 1.0);
  const cplx zs = z + p.s();
  return std::exp(-double(p.M()) * p.u * z) *
         qdilog(pi_v - iu + i * zs * xi, gp, cfg) *
         qdilog(-pi_v - i * z * xi, gp, cfg) /
         (qdilog(-pi_v - iu - i * z * xi, gp, cfg) *
          qdilog(-pi_v - i * zs * xi, gp, cfg));
}

namespace {

cplx residue_prefactor(const ModelParams& p, const QuadratureConfig&) {
  const GammaParam gp = GammaParam::from_model(p);
  const double M = double(p.M());
  const cplx i(0.0, 1.0);
  return sratio_closed(p.u, gp, p.n) * (i * std::exp(p.u / 2.0) * M / 2.0) *
         std::exp(-double(p.n - 2) * double(p.n - 1) * p.xi() / (4.0 * M)) /
         quantum_factorial(p.n - 2, p);
}

}  // namespace

cplx homfly_residue_form(const ModelParams& p, const QuadratureConfig& cfg) {
  p.validate();
  const double M = double(p.M());
  cplx sum{0.0, 0.0};
  for (long k = 0; k < p.N; ++k)
    sum += g_integrand(cplx(double(2 * k + 1) / (2.0 * M), 0.0), p, cfg);
  return residue_prefactor(p, cfg) * cplx(0.0, -2.0 / M) * sum;
}

cplx residue_sum_window(const ModelParams& p, double eps,
                        const QuadratureConfig& cfg) {
  p.validate();
  const double M = double(p.M());
  cplx sum{0.0, 0.0};
  for (long k = 0; k < p.N; ++k) {
    const double zk = double(2 * k + 1) / (2.0 * M);
    if (zk > eps && zk < 1.0 - eps)
      sum += g_integrand(cplx(zk, 0.0), p, cfg);
  }
  return cplx(0.0, -2.0 / M) * sum;
}

ContourPath c_plus_path(double u, double eps) {
  const double h = u / (2.0 * pi_v);
  return ContourPath::polyline({cplx(1.0 - eps, 0.0), cplx(1.0 - h - eps, 1.0),
                                cplx(-h + eps, 1.0), cplx(eps, 0.0)});
}

ContourPath c_minus_path(double u, double eps) {
  const double h = u / (2.0 * pi_v);
  return ContourPath::polyline({cplx(eps, 0.0), cplx(eps + h, -1.0),
                                cplx(1.0 - eps + h, -1.0), cplx(1.0 - eps, 0.0)});
}

cplx tan_contour_integral(const ModelParams& p, double eps,
                          const QuadratureConfig& cfg) {
  p.validate();
  // eps == 1/2 collapses both contours to zero-width hexagons; allowed, both
  // integrals are then trivially zero (and so is the matching pole window).
  if (!(eps > 0.0) || eps > 0.5)
    throw Error(ErrorKind::invalid_argument, "eps must lie in (0, 1/2]");
  const double M = double(p.M());
  auto f = [&](cplx z) {
    return tan_stable(M * pi_v * z) * g_integrand(z, p, cfg);
  };
  return integrate_path(f, c_plus_path(p.u, eps), cfg) +
         integrate_path(f, c_minus_path(p.u, eps), cfg);
}

double kashaev_brute(long N) {
  if (N < 1) throw Error(ErrorKind::invalid_argument, "N must be >= 1");
  double sum = 0.0, prod = 1.0;
  for (long k = 0; k < N; ++k) {
    if (k > 0) {
      const cplx f = 1.0 - std::exp(cplx(0.0, 2.0 * pi_v * double(k) / double(N)));
      prod *= std::norm(f);
    }
    sum += prod;
  }
  return sum;
}

cplx tan_stable(cplx w) {
  const cplx i(0.0, 1.0);
  if (w.imag() >= 0.0) {
    const cplx a = std::exp(2.0 * i * w);
    return -i * (a - 1.0) / (a + 1.0);
  }
  const cplx b = std::exp(-2.0 * i * w);
  return i * (b - 1.0) / (b + 1.0);
}

}  // namespace fig8
