#include "fig8/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "fig8/asymptotic.hpp"
#include "fig8/invariant.hpp"

namespace fig8 {

namespace {

constexpr const char* kColumns[] = {
    "n",         "u",          "N",         "exact_logmag",
    "exact_phase", "rhs_logmag", "rhs_phase", "ratio_mag",
    "ratio_phase", "growth_exact", "growth_predicted", "walltime_s"};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

double wrap_phase(double p) {
  double w = std::remainder(p, 2.0 * pi_v);
  if (w <= -pi_v) w += 2.0 * pi_v;
  return w;
}

QuadratureConfig sweep_config(const SweepSpec& spec) {
  QuadratureConfig cfg;
  if (spec.tol_override > 0.0) {
    cfg.abs_tol = spec.tol_override;
    cfg.rel_tol = spec.tol_override * 100.0;
  }
  return cfg;
}

void fill_exact(ReportRow& row, const InvariantValue& j) {
  row.exact_logmag = j.log_abs;
  row.exact_phase = j.phase;
  row.growth_exact = j.log_abs / double(row.N);
}

// rhs columns double as "the alternative evaluation" for the cross-check
// modes; ratio is always exact/alternative.
void fill_against(ReportRow& row, const InvariantValue& j, cplx alt) {
  fill_exact(row, j);
  row.rhs_logmag = std::log(std::abs(alt));
  row.rhs_phase = std::arg(alt);
  row.ratio_mag = std::exp(row.exact_logmag - row.rhs_logmag);
  row.ratio_phase = wrap_phase(row.exact_phase - row.rhs_phase);
}

ReportRow evaluate_row(int n, double u, long N, const SweepSpec& spec) {
  ReportRow row;
  row.n = n;
  row.u = u;
  row.N = N;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ModelParams p;
    p.N = N;
    p.n = n;
    p.u = u;
    const QuadratureConfig cfg = sweep_config(spec);
    switch (spec.mode) {
      case SweepMode::exact:
        fill_exact(row, homfly_exact(p));
        break;
      case SweepMode::asymptotic: {
        const LogComplex rhs =
            rhs_theorem_main(p) * LogComplex::from(phase_calibration());
        row.rhs_logmag = rhs.log_abs;
        row.rhs_phase = rhs.phase_principal();
        row.growth_predicted =
            (s_of_u(u) / p.xi()).real() * double(p.M()) / double(N);
        break;
      }
      case SweepMode::both: {
        // exact side first so its columns survive an asymptotic-side failure
        const InvariantValue j = homfly_exact(p);
        fill_exact(row, j);
        const LogComplex rhs =
            rhs_theorem_main(p) * LogComplex::from(phase_calibration());
        row.rhs_logmag = rhs.log_abs;
        row.rhs_phase = rhs.phase_principal();
        const LogComplex ratio = j.log_form() / rhs;
        row.ratio_mag = std::exp(ratio.log_abs);
        row.ratio_phase = ratio.phase_principal();
        row.growth_predicted =
            (s_of_u(u) / p.xi()).real() * double(p.M()) / double(N);
        break;
      }
      case SweepMode::residue_check:
        fill_against(row, homfly_exact(p), homfly_residue_form(p, cfg));
        break;
      case SweepMode::qdilog_check:
        fill_against(row, homfly_exact(p), homfly_qdilog_form(p, cfg));
        break;
      case SweepMode::pole_domain: {
        // inside/total fraction for the canonical shift a = n-2; the `poles`
        // subcommand reports raw counts for arbitrary a.
        const PoleDomainCount c = pole_domain_check(N, n, n - 2, u);
        row.ratio_mag = double(c.inside) / double(c.total);
        break;
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.walltime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return row;
}

}  // namespace

SweepMode parse_mode(const std::string& s) {
  if (s == "exact") return SweepMode::exact;
  if (s == "asymptotic") return SweepMode::asymptotic;
  if (s == "both") return SweepMode::both;
  if (s == "residue-check") return SweepMode::residue_check;
  if (s == "qdilog-check") return SweepMode::qdilog_check;
  if (s == "pole-domain") return SweepMode::pole_domain;
  throw Error(ErrorKind::invalid_argument, "unknown mode '" + s + "'");
}

const char* to_string(SweepMode m) {
  switch (m) {
    case SweepMode::exact: return "exact";
    case SweepMode::asymptotic: return "asymptotic";
    case SweepMode::both: return "both";
    case SweepMode::residue_check: return "residue-check";
    case SweepMode::qdilog_check: return "qdilog-check";
    case SweepMode::pole_domain: return "pole-domain";
  }
  return "unknown";
}

void SweepSpec::validate() const {
  if (N_list.empty() || n_list.empty() || u_list.empty())
    throw Error(ErrorKind::invalid_argument, "N, n and u lists must be nonempty");
  for (long N : N_list)
    if (N < 1) throw Error(ErrorKind::invalid_argument, "N values must be >= 1");
  for (int n : n_list)
    if (n < 2 || n % 2 != 0)
      throw Error(ErrorKind::invalid_argument, "n values must be even and >= 2");
  for (double u : u_list)
    if (!(u >= 0.0) || u >= u_max)
      throw Error(ErrorKind::invalid_argument,
                  "u values must satisfy 0 <= u < 0.9624236501192069");
  if (jobs < 1) throw Error(ErrorKind::invalid_argument, "jobs must be >= 1");
  if (tol_override < 0.0)
    throw Error(ErrorKind::invalid_argument, "tolerance override must be >= 0");
}

std::vector<ReportRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  struct Task {
    int n;
    double u;
    long N;
  };
  std::vector<Task> tasks;
  tasks.reserve(spec.n_list.size() * spec.u_list.size() * spec.N_list.size());
  for (int n : spec.n_list)
    for (double u : spec.u_list)
      for (long N : spec.N_list) tasks.push_back({n, u, N});
  std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.u != b.u) return a.u < b.u;
    return a.N < b.N;
  });

  std::vector<ReportRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      rows[i] = evaluate_row(tasks[i].n, tasks[i].u, tasks[i].N, spec);
    }
  };
  const size_t jobs =
      std::min<size_t>(std::max(1, spec.jobs), std::max<size_t>(tasks.size(), 1));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

double volume_evidence(int n, long N_max) {
  if (N_max < 50)
    throw Error(ErrorKind::invalid_argument, "N_max must be >= 50");
  ModelParams p;
  p.N = N_max;
  p.n = n;
  p.u = 0.0;
  p.validate();
  return 2.0 * pi_v * homfly_exact(p).log_abs / double(N_max);
}

PoleDomainCount pole_domain_check(long N, int n, int a, double u) {
  if (N < 1) throw Error(ErrorKind::invalid_argument, "N must be >= 1");
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "n must be even and >= 2");
  if (a < 0 || a > n - 2)
    throw Error(ErrorKind::invalid_argument, "requires 0 <= a <= n-2");
  if (!(u > 0.0))
    throw Error(ErrorKind::undefined_domain,
                "the strips degenerate unless u > 0");

  // Each strip, at a pole z_k = (2k+1)/(2(N+a)) (so y = 0, x+c =
  // (2k+1+2m)/(2(N+a)) with shift numerator m), reads
  //   -(2*pi/u)(x+c) - Re(gamma)/u < 0 < 2*pi/u - (2*pi/u)(x+c) + Re(gamma)/u.
  // Scaling by u(N+a)/pi > 0 (Re(gamma) = pi/(N+a)) turns both sides into
  // integer comparisons, which keeps poles that sit exactly on a strip edge
  // out of the count instead of leaving them to rounding luck:
  //   -1 < 2(k+m)+1  and  2(k+m)+1 < 2(N+a)+1.
  const long shifts[4] = {a, 0, long(n) - 2 - a, long(n) - 2};
  PoleDomainCount out;
  out.total = N;
  for (long k = 0; k < N; ++k) {
    bool ok = true;
    for (long m : shifts) {
      const long t = 2 * (k + m) + 1;
      if (!(-1 < t && t < 2 * (N + a) + 1)) {
        ok = false;
        break;
      }
    }
    if (ok) ++out.inside;
  }
  return out;
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < std::size(kColumns); ++i)
    os << (i ? "," : "") << kColumns[i];
  os << ",error\n";
  for (const ReportRow& r : rows) {
    os << r.n << ',' << fmt17(r.u) << ',' << r.N << ','
       << fmt17(r.exact_logmag) << ',' << fmt17(r.exact_phase) << ','
       << fmt17(r.rhs_logmag) << ',' << fmt17(r.rhs_phase) << ','
       << fmt17(r.ratio_mag) << ',' << fmt17(r.ratio_phase) << ','
       << fmt17(r.growth_exact) << ',' << fmt17(r.growth_predicted) << ','
       << fmt17(r.walltime_s) << ',' << csv_field(r.error) << '\n';
  }
  return os.str();
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto put = [](nlohmann::ordered_json& o, const char* key, double v) {
    if (std::isfinite(v))
      o[key] = v;
    else
      o[key] = nullptr;
  };
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["u"] = r.u;
    o["N"] = r.N;
    put(o, "exact_logmag", r.exact_logmag);
    put(o, "exact_phase", r.exact_phase);
    put(o, "rhs_logmag", r.rhs_logmag);
    put(o, "rhs_phase", r.rhs_phase);
    put(o, "ratio_mag", r.ratio_mag);
    put(o, "ratio_phase", r.ratio_phase);
    put(o, "growth_exact", r.growth_exact);
    put(o, "growth_predicted", r.growth_predicted);
    o["walltime_s"] = r.walltime_s;
    o["error"] = r.error;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

void export_rows(const std::vector<ReportRow>& rows, ExportFormat format,
                 const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::io_error, "cannot open '" + path + "' for writing");
  out << (format == ExportFormat::csv ? rows_to_csv(rows) : rows_to_json(rows));
  out.flush();
  if (!out)
    throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
}

std::vector<double> parse_range_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string token;
  auto to_double = [](const std::string& s) {
    size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_argument, "cannot parse number '" + s + "'");
    }
    if (pos != s.size())
      throw Error(ErrorKind::invalid_argument, "cannot parse number '" + s + "'");
    return v;
  };
  while (std::getline(ss, token, ',')) {
    if (token.empty())
      throw Error(ErrorKind::invalid_argument, "empty entry in list");
    const size_t c1 = token.find(':');
    if (c1 == std::string::npos) {
      out.push_back(to_double(token));
      continue;
    }
    const size_t c2 = token.find(':', c1 + 1);
    if (c2 == std::string::npos)
      throw Error(ErrorKind::invalid_argument,
                  "range must be start:stop:step, got '" + token + "'");
    const double start = to_double(token.substr(0, c1));
    const double stop = to_double(token.substr(c1 + 1, c2 - c1 - 1));
    const double step = to_double(token.substr(c2 + 1));
    if (step == 0.0 || (stop - start) * step < 0.0)
      throw Error(ErrorKind::invalid_argument,
                  "step does not reach stop in '" + token + "'");
    const double slack = std::abs(step) * 1e-9;
    if (step > 0.0)
      for (double v = start; v <= stop + slack; v += step) out.push_back(v);
    else
      for (double v = start; v >= stop - slack; v += step) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "empty list");
  return out;
}

}  // namespace fig8
