#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fig8/errors.hpp"
#include "fig8/sweep.hpp"
#include "fig8/verify.hpp"

namespace {

std::vector<long> integer_list(const std::string& text, const char* flag) {
  std::vector<long> out;
  for (double v : fig8::parse_range_list(text)) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
      throw fig8::Error(fig8::ErrorKind::invalid_argument,
                        std::string(flag) + " expects integers, got " +
                            std::to_string(v));
    out.push_back(static_cast<long>(r));
  }
  return out;
}

int do_sweep(const std::string& arg_N, const std::string& arg_n,
             const std::string& arg_u, const std::string& mode,
             const std::string& out, const std::string& format,
             double tol_override, int jobs) {
  fig8::SweepSpec spec;
  spec.N_list = integer_list(arg_N, "--N");
  for (long v : integer_list(arg_n, "--n")) spec.n_list.push_back(int(v));
  spec.u_list = fig8::parse_range_list(arg_u);
  spec.mode = fig8::parse_mode(mode);
  spec.tol_override = tol_override;
  spec.jobs = jobs;
  spec.validate();

  fig8::ExportFormat fmt;
  if (format == "csv")
    fmt = fig8::ExportFormat::csv;
  else if (format == "json")
    fmt = fig8::ExportFormat::json;
  else
    throw fig8::Error(fig8::ErrorKind::invalid_argument,
                      "--format must be csv or json, got " + format);

  const size_t points =
      spec.N_list.size() * spec.n_list.size() * spec.u_list.size();
  std::cerr << "sweep: " << points << " points, mode "
            << fig8::to_string(spec.mode) << ", jobs " << spec.jobs << "\n";

  const auto rows = fig8::run_sweep(spec);
  if (out.empty()) {
    std::cout << (fmt == fig8::ExportFormat::csv ? fig8::rows_to_csv(rows)
                                                 : fig8::rows_to_json(rows));
  } else {
    fig8::export_rows(rows, fmt, out);
    std::cerr << "wrote " << out << "\n";
  }

  size_t errored = 0;
  for (const auto& r : rows)
    if (!r.error.empty()) ++errored;
  if (errored)
    std::cerr << errored << " of " << rows.size() << " rows errored\n";
  return errored ? 1 : 0;
}

int do_volume(int n, long N_max) {
  const double v = fig8::volume_evidence(n, N_max);
  const double target = 2.029883212819307;
  std::printf("n %d\nN_max %ld\ngrowth %.17g\ntarget %.17g\n"
              "deviation_percent %.6g\n",
              n, N_max, v, target, 100.0 * std::abs(v / target - 1.0));
  return 0;
}

int do_poles(long N, int n, int a, double u) {
  const fig8::PoleDomainCount c = fig8::pole_domain_check(N, n, a, u);
  std::printf("total %ld\ninside %ld\n", c.total, c.inside);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figure-eight colored-invariant laboratory"};
  app.require_subcommand(1);

  std::string arg_N, arg_n = "2", arg_u, mode = "both", out, format = "csv";
  double tol_override = 0.0;
  int jobs = 1;
  auto* sweep = app.add_subcommand(
      "sweep", "evaluate a grid of (N, n, u) points and emit a report table");
  sweep->add_option("--N", arg_N, "N values (comma list or start:stop:step)")
      ->required();
  sweep->add_option("--n", arg_n, "rank values n (even), same syntax");
  sweep->add_option("--u", arg_u, "deformation values u, same syntax")
      ->required();
  sweep->add_option("--mode", mode,
                    "exact | asymptotic | both | residue-check | "
                    "qdilog-check | pole-domain");
  sweep->add_option("--out", out, "output path (default: stdout)");
  sweep->add_option("--format", format, "csv | json");
  sweep->add_option("--tol-override", tol_override,
                    "override quadrature tolerance (0 = library default)");
  sweep->add_option("--jobs", jobs, "max concurrent points");

  int vol_n = 2;
  long vol_N = 2000;
  auto* volume = app.add_subcommand(
      "volume", "growth-rate statistic at u=0 vs the complement volume");
  volume->add_option("--n", vol_n, "rank n (even)");
  volume->add_option("--N", vol_N, "N_max (>= 50)");

  long pol_N = 0;
  int pol_n = 0, pol_a = 0;
  double pol_u = 0.5;
  auto* poles = app.add_subcommand(
      "poles", "count integrand poles inside the admissible strip domain");
  poles->add_option("--N", pol_N, "number of poles")->required();
  poles->add_option("--n", pol_n, "rank n (even)")->required();
  poles->add_option("--a", pol_a, "shift a in 0..n-2")->required();
  poles->add_option("--u", pol_u, "deformation u (> 0)");

  bool quick = false;
  std::vector<int> criteria;
  auto* verify =
      app.add_subcommand("verify", "run the acceptance criteria suite");
  verify->add_flag("--quick", quick, "reduced grids (smoke scale)");
  verify->add_option("criteria", criteria, "criterion indices (default: all)")
      ->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sweep->parsed())
      return do_sweep(arg_N, arg_n, arg_u, mode, out, format, tol_override,
                      jobs);
    if (volume->parsed()) return do_volume(vol_n, vol_N);
    if (poles->parsed()) return do_poles(pol_N, pol_n, pol_a, pol_u);
    return fig8::run_acceptance(std::cout, criteria, quick) ? 0 : 1;
  } catch (const fig8::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto k = e.kind();
    return (k == fig8::ErrorKind::invalid_argument ||
            k == fig8::ErrorKind::undefined_domain ||
            k == fig8::ErrorKind::outside_range)
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
