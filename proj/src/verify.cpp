#include "fig8/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <vector>

#include "fig8/asymptotic.hpp"
#include "fig8/invariant.hpp"
#include "fig8/potential.hpp"
#include "fig8/quantum_dilog.hpp"
#include "fig8/sweep.hpp"

namespace fig8 {

namespace {

constexpr double kVolume = 2.029883212819307;  // complement volume of 4_1

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Gate {
  CriterionResult* r;
  void check(bool ok, const std::string& what) {
    r->details.push_back(std::string(ok ? "  ok    " : "  FAIL  ") + what);
    if (!ok) r->passed = false;
  }
  void note(const std::string& what) {
    r->details.push_back("  note  " + what);
  }
};

ModelParams mp(long N, int n, double u) {
  ModelParams p;
  p.N = N;
  p.n = n;
  p.u = u;
  return p;
}

// The 20-point u grid strictly inside (0.05, 0.96).
std::vector<double> u_grid20() {
  std::vector<double> g;
  for (int i = 0; i < 20; ++i)
    g.push_back(0.05 + (0.96 - 0.05) * double(i + 1) / 21.0);
  return g;
}

void crit_anchors(Gate& g, bool) {
  for (int n : {2, 4, 6})
    for (double u : {0.0, 0.5}) {
      const InvariantValue j = homfly_exact(mp(1, n, u));
      g.check(j.value == cplx(1.0, 0.0),
              "J(N=1,n=" + std::to_string(n) + ",u=" + num(u) + ") == 1 exactly");
    }
  const cplx j2 = homfly_exact(mp(2, 2, 0.0)).value;
  const cplx j3 = homfly_exact(mp(3, 2, 0.0)).value;
  g.check(std::abs(j2 - 5.0) <= 1e-10 * 5.0,
          "J(N=2,n=2,u=0) = 5, rel err " + num(std::abs(j2 - 5.0) / 5.0));
  g.check(std::abs(j3 - 13.0) <= 1e-10 * 13.0,
          "J(N=3,n=2,u=0) = 13, rel err " + num(std::abs(j3 - 13.0) / 13.0));
}

void crit_volume(Gate& g, bool quick) {
  if (quick) {
    const double v = volume_evidence(2, 500);
    const double dev = std::abs(v / kVolume - 1.0);
    g.check(dev < 0.10, "n=2, N=500: growth " + num(v) + ", deviation " +
                            num(100 * dev) +
                            "% (smoke bound 10%; the full gate runs N=2000 at "
                            "2% and n=4 N=1000 at 5%)");
    return;
  }
  const double v2 = volume_evidence(2, 2000);
  const double d2 = std::abs(v2 / kVolume - 1.0);
  g.check(d2 < 0.02,
          "n=2, N=2000: growth " + num(v2) + " vs " + num(kVolume) +
              ", deviation " + num(100 * d2) + "% (bound 2%)");
  const double v4 = volume_evidence(4, 1000);
  const double d4 = std::abs(v4 / kVolume - 1.0);
  g.check(d4 < 0.05,
          "n=4, N=1000: growth " + num(v4) + ", deviation " + num(100 * d4) +
              "% (bound 5%)");
  if (d4 >= 0.05) {
    const double v4b = volume_evidence(4, 2000);
    const double d4b = std::abs(v4b / kVolume - 1.0);
    g.note("n=4 deviation at N=2000 is " + num(100 * d4b) +
           "% -- still above the 5% bound; the n=4 sequence approaches the "
           "volume like (log N)/N with a larger constant than n=2, so the "
           "stated bound is not reachable at N=1000 (nor at N=2000)");
  }
}

void crit_shift_equation(Gate& g, bool quick) {
  std::mt19937 rng(20240817u);
  std::uniform_int_distribution<long> pick_N(5, 40);
  std::uniform_int_distribution<int> pick_n(0, 1);
  std::uniform_real_distribution<double> pick_u(0.1, 0.9);
  std::uniform_real_distribution<double> pick_x(-(pi_v - 0.2), pi_v - 0.2);
  std::uniform_real_distribution<double> pick_y(-1.0, 1.0);
  const int samples = quick ? 10 : 100;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const GammaParam gp =
        GammaParam::from_model(mp(pick_N(rng), pick_n(rng) ? 4 : 2, pick_u(rng)));
    const cplx z(pick_x(rng), pick_y(rng));
    const cplx lhs =
        (1.0 + std::exp(cplx(0.0, 1.0) * z)) * qdilog(z + gp.gamma, gp);
    const cplx rhs = qdilog(z - gp.gamma, gp);
    worst = std::max(worst, std::abs(lhs / rhs - 1.0));
  }
  g.check(worst < 1e-7, "(1+e^{iz}) S(z+g) = S(z-g): worst relative residual " +
                            num(worst) + " over " + std::to_string(samples) +
                            " samples (bound 1e-7)");
}

void crit_quotient_form(Gate& g, bool quick) {
  const long n_max = quick ? 6 : 16;
  double worst = 0.0;
  long worst_N = 0;
  int worst_n = 0;
  double worst_u = 0.0;
  for (int n : {2, 4})
    for (double u : {0.3, 0.5})
      for (long N = 1; N <= n_max; ++N) {
        const ModelParams p = mp(N, n, u);
        const cplx exact = homfly_exact(p).value;
        const cplx alt = homfly_qdilog_form(p);
        const double rel = std::abs(alt - exact) / std::abs(exact);
        if (rel > worst) {
          worst = rel;
          worst_N = N;
          worst_n = n;
          worst_u = u;
        }
      }
  g.check(worst < 1e-6,
          "dilogarithm-quotient form vs state sum: worst rel dev " +
              num(worst) + " at (N=" + std::to_string(worst_N) +
              ", n=" + std::to_string(worst_n) + ", u=" + num(worst_u) +
              ") over N <= " + std::to_string(n_max) +
              ", n in {2,4}, u in {0.3,0.5} (bound 1e-6)");
}

void crit_residue(Gate& g, bool) {
  cplx c[3];
  int i = 0;
  for (long N : {3, 4, 5}) {
    const ModelParams p = mp(N, 2, 0.5);
    c[i++] = homfly_exact(p).value / homfly_residue_form(p);
  }
  g.check(std::abs(c[1] - 1.0) < 1e-5,
          "residue sum with the printed prefactor reproduces the state sum at "
          "N=4, n=2, u=0.5: constant factor = (" +
              num(c[1].real()) + ", " + num(c[1].imag()) + ")");
  const double spread =
      std::max(std::abs(c[0] / c[1] - 1.0), std::abs(c[2] / c[1] - 1.0));
  g.check(spread < 1e-6, "constant factor N-independent across N in {3,4,5}: "
                         "max spread " + num(spread));
  const ModelParams p4 = mp(4, 4, 0.5);
  const cplx c4 = homfly_exact(p4).value / homfly_residue_form(p4);
  g.note("n=4 constant factor at N=4: (" + num(c4.real()) + ", " +
         num(c4.imag()) + ")");
}

void crit_saddle(Gate& g, bool) {
  const auto grid = u_grid20();
  double worst_res = 0.0;
  for (int n : {2, 4})
    for (double u : grid)
      for (long N : {10, 100, 1000})
        worst_res = std::max(worst_res, solve_saddle(mp(N, n, u)).residual);
  g.check(worst_res < 1e-10,
          "cubic residual < 1e-10 across the grid (worst " + num(worst_res) + ")");

  double worst2 = 0.0;
  for (double u : grid) {
    const cplx z_ref = (phi_u(u) + cplx(0.0, 2.0 * pi_v)) / cplx(u, 2.0 * pi_v);
    worst2 = std::max(worst2, std::abs(solve_saddle(mp(100, 2, u)).z - z_ref));
  }
  g.check(worst2 < 1e-10,
          "n=2 saddle reproduces (phi(u)+2*pi*i)/xi (worst dev " + num(worst2) +
              ")");

  bool ratios_ok = true;
  std::string seen;
  for (double u : {0.3, 0.5, 0.9}) {
    const cplx z_ref = (phi_u(u) + cplx(0.0, 2.0 * pi_v)) / cplx(u, 2.0 * pi_v);
    double d[4];
    int i = 0;
    for (long N : {200, 400, 800, 1600})
      d[i++] = std::abs(solve_saddle(mp(N, 4, u)).z - z_ref);
    for (int k = 0; k < 3; ++k) {
      const double r = d[k + 1] / d[k];
      ratios_ok = ratios_ok && r > 0.4 && r < 0.6;
      seen += (seen.empty() ? "" : ", ") + num(r);
    }
  }
  g.check(ratios_ok, "|z_N - z2| halves as N doubles, n=4, N in {200..1600}, "
                     "u in {0.3,0.5,0.9} (ratios " +
                         seen + "; bound [0.4,0.6])");
}

void crit_positivity(Gate& g, bool) {
  for (int n : {2, 4}) {
    double min_re = std::numeric_limits<double>::infinity();
    double at_u = 0.0;
    for (double u : u_grid20()) {
      const ModelParams p = mp(500, n, u);
      const double re = phiN(solve_saddle(p).z, p).real();
      if (re < min_re) {
        min_re = re;
        at_u = u;
      }
    }
    g.check(min_re > 0.0, "n=" + std::to_string(n) +
                              ", N=500: min Re Phi(z_N) over the 20-point u "
                              "grid = " +
                              num(min_re) + " at u=" + num(at_u) + " (> 0)");
  }
}

void crit_difference_limits(Gate& g, bool quick) {
  const std::vector<long> Ns =
      quick ? std::vector<long>{100, 200, 400}
            : std::vector<long>{200, 400, 800, 1600};
  const double u = 0.5;
  const int n = 4;
  double worst = 0.0;
  for (int j = 0; j < 10; ++j) {
    const cplx z(0.2 + 0.05 * j, 0.0);
    std::vector<double> hs;
    std::vector<cplx> ys;
    for (long N : Ns) {
      const ModelParams p = mp(N, n, u);
      const double M = double(p.M());
      hs.push_back(1.0 / M);
      ys.push_back(M * (phiN(z, p) - phi2(z, u)));
    }
    const cplx xi(u, 2.0 * pi_v);
    const cplx target =
        double(n - 2) *
        std::log((1.0 - std::exp(u - z * xi)) * (1.0 - std::exp(z * xi)));
    worst = std::max(worst, std::abs(extrapolate_to_zero(hs, ys) - target));
  }
  g.check(worst < 1e-4,
          "M*(Phi_n - Phi_2) extrapolated over N in {" +
              std::to_string(Ns.front()) + ".." + std::to_string(Ns.back()) +
              "} matches (n-2)log((1-e^{u-z xi})(1-e^{z xi})) at 10 interior "
              "points: worst " +
              num(worst) + " (bound 1e-4)");

  const std::vector<long> Ns2 =
      quick ? std::vector<long>{100, 200, 400}
            : std::vector<long>{100, 200, 400, 800};
  for (double uu : {0.5, 0.3}) {
    std::vector<ModelParams> seq;
    for (long N : Ns2) seq.push_back(mp(N, 4, uu));
    const auto vals = diff2_sequence(seq);
    std::vector<double> hs;
    for (const auto& p : seq) hs.push_back(1.0 / double(p.M()));
    bool decreasing = true;
    double final_v = 0.0;
    std::string shown;
    for (size_t j = 0; j < vals.size(); ++j) {
      const double dj = std::abs(extrapolate_to_zero(
          std::vector<double>(hs.begin(), hs.begin() + j + 1),
          std::vector<cplx>(vals.begin(), vals.begin() + j + 1)));
      if (j > 0 && dj >= final_v) decreasing = false;
      final_v = dj;
      shown += (shown.empty() ? "" : ", ") + num(dj);
    }
    g.check(decreasing && final_v < 1e-3,
            "M*(Phi_2(z_M) - Phi_2(z2)) extrapolants decrease to " +
                num(final_v) + " at u=" + num(uu) + " (values " + shown +
                "; bound 1e-3)");
  }
}

void crit_main_ratio(Gate& g, bool quick) {
  const std::vector<long> Ns = quick
                                   ? std::vector<long>{500, 1000}
                                   : std::vector<long>{500, 1000, 2000, 4000};
  for (int n : {2, 4}) {
    const double tol = n == 2 ? 0.05 : 0.15;
    for (double u : {0.3, 0.5, 0.9}) {
      std::vector<double> errs;
      for (long N : Ns)
        errs.push_back(
            std::abs(std::abs(build_report(mp(N, n, u)).ratio) - 1.0));
      bool monotone = true;
      for (size_t i = 1; i < errs.size(); ++i)
        monotone = monotone && errs[i] < errs[i - 1];
      std::string shown;
      for (double e : errs) shown += (shown.empty() ? "" : ", ") + num(e);
      g.check(monotone && errs.back() < tol,
              "n=" + std::to_string(n) + ", u=" + num(u) +
                  ": ||J/rhs|-1| = {" + shown + "} decreasing, final < " +
                  num(tol));
    }
  }
}

void crit_descent(Gate& g, bool quick) {
  const std::vector<long> Ns =
      quick ? std::vector<long>{50, 100} : std::vector<long>{50, 100, 200};
  std::vector<double> errs, cs;
  for (long N : Ns) {
    const ModelParams p = mp(N, 2, 0.5);
    const cplx ratio =
        steepest_descent_integral(p) / steepest_descent_closed_form(p);
    errs.push_back(std::abs(ratio - 1.0));
    cs.push_back(errs.back() * double(N));
  }
  bool decreasing = true;
  for (size_t i = 1; i < errs.size(); ++i)
    decreasing = decreasing && errs[i] < errs[i - 1];
  std::string es, css;
  for (double e : errs) es += (es.empty() ? "" : ", ") + num(e);
  for (double c : cs) css += (css.empty() ? "" : ", ") + num(c);
  g.check(decreasing && errs.back() < 0.1,
          "|quadrature/closed-form - 1| = {" + es + "} decreasing, final < 0.1");
  const auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
  g.check(*hi / *lo < 2.0,
          "fitted c = N*|ratio-1| stable within a factor 2: {" + css + "}");
}

void crit_pole_domain(Gate& g, bool) {
  bool all_ok = true;
  std::string bad;
  for (int n : {2, 4, 6})
    for (long N : {20, 50})
      for (int a = 0; a <= n - 2; ++a) {
        const PoleDomainCount c = pole_domain_check(N, n, a, 0.5);
        const bool all_inside = c.inside == c.total;
        const bool expect_inside = a >= n - 2;
        if (all_inside != expect_inside) {
          all_ok = false;
          bad += " (n=" + std::to_string(n) + ",N=" + std::to_string(N) +
                 ",a=" + std::to_string(a) + ": " + std::to_string(c.inside) +
                 "/" + std::to_string(c.total) + ")";
        }
      }
  g.check(all_ok, all_ok
                      ? std::string("poles all inside exactly when a = n-2, on "
                                    "n in {2,4,6}, a in {0..n-2}, N in {20,50}, "
                                    "u=0.5")
                      : "pole counts disagree with the a >= n-2 rule:" + bad);
}

}  // namespace

CriterionResult run_criterion(int index, bool quick) {
  if (index < 1 || index > criteria_count)
    throw Error(ErrorKind::invalid_argument, "criterion index must be 1..11");
  static constexpr const char* kTitles[criteria_count] = {
      "state-sum anchors at small N",
      "root-of-unity growth rate vs hyperbolic volume",
      "quantum dilogarithm shift identity",
      "state sum vs dilogarithm-quotient form",
      "residue-sum reconstruction constant",
      "saddle solver: residuals, n=2 closed form, drift rate",
      "positivity of the potential at the saddle",
      "potential difference limits (extrapolated)",
      "asymptotic ratio convergence",
      "descent quadrature vs closed form",
      "pole containment counts",
  };
  CriterionResult r;
  r.index = index;
  r.title = kTitles[index - 1];
  r.passed = true;
  Gate g{&r};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    switch (index) {
      case 1: crit_anchors(g, quick); break;
      case 2: crit_volume(g, quick); break;
      case 3: crit_shift_equation(g, quick); break;
      case 4: crit_quotient_form(g, quick); break;
      case 5: crit_residue(g, quick); break;
      case 6: crit_saddle(g, quick); break;
      case 7: crit_positivity(g, quick); break;
      case 8: crit_difference_limits(g, quick); break;
      case 9: crit_main_ratio(g, quick); break;
      case 10: crit_descent(g, quick); break;
      case 11: crit_pole_domain(g, quick); break;
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("  exception: ") + e.what());
  }
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

bool run_acceptance(std::ostream& out, const std::vector<int>& subset,
                    bool quick) {
  std::vector<int> indices = subset;
  if (indices.empty())
    for (int i = 1; i <= criteria_count; ++i) indices.push_back(i);
  int passed = 0;
  for (int idx : indices) {
    const CriterionResult r = run_criterion(idx, quick);
    out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.index << ": "
        << r.title << "  [" << num(r.seconds) << " s]\n";
    for (const auto& d : r.details) out << d << "\n";
    if (r.passed) ++passed;
  }
  out << passed << "/" << indices.size() << " criteria passed"
      << (quick ? " (quick grids)" : "") << "\n";
  return passed == int(indices.size());
}

}  // namespace fig8
