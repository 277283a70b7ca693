#pragma once

#include <string>
#include <vector>

#include "fig8/types.hpp"

namespace fig8 {

enum class SweepMode {
  exact,
  asymptotic,
  both,
  residue_check,
  qdilog_check,
  pole_domain,
};

SweepMode parse_mode(const std::string& s);  // invalid-argument on unknown
const char* to_string(SweepMode m);

struct SweepSpec {
  std::vector<long> N_list;
  std::vector<int> n_list;
  std::vector<double> u_list;
  SweepMode mode = SweepMode::both;
  int jobs = 1;
  double tol_override = 0.0;  // 0 = library defaults

  void validate() const;  // invalid-argument on empty lists / bad u
};

struct ReportRow {
  int n = 0;
  double u = 0.0;
  long N = 0;
  double exact_logmag = nan_v();
  double exact_phase = nan_v();
  double rhs_logmag = nan_v();
  double rhs_phase = nan_v();
  double ratio_mag = nan_v();
  double ratio_phase = nan_v();
  double growth_exact = nan_v();
  double growth_predicted = nan_v();
  double walltime_s = 0.0;
  std::string error;  // empty on success

  static double nan_v() { return std::numeric_limits<double>::quiet_NaN(); }
};

// One row per (n,u,N), ordered lexicographically by (n,u,N); rows evaluated
// concurrently up to spec.jobs; per-row failures land in row.error.
std::vector<ReportRow> run_sweep(const SweepSpec& spec);

// 2*pi*log|J_{N_max}^{(n)}(e^{2 pi i/(N_max+n-2)})| / N_max, the growth-rate
// statistic compared against the complement volume 2.029883212819307.
double volume_evidence(int n, long N_max);

struct PoleDomainCount {
  long total = 0;
  long inside = 0;
};

// Counts the poles z_k = (2k+1)/(2(N+a)), k = 0..N-1, that satisfy all four
// strip inequalities of the pole domain (with the Re(gamma)/u margins as
// stated); u = 0 degenerates the strips -> undefined-domain.
PoleDomainCount pole_domain_check(long N, int n, int a, double u);

enum class ExportFormat { csv, json };

// Stable column order n,u,N,...,walltime_s plus trailing error column;
// floats with 17 significant digits.  Throws io-error with path context.
void export_rows(const std::vector<ReportRow>& rows, ExportFormat format,
                 const std::string& path);

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_json(const std::vector<ReportRow>& rows);

// Parses --N style range arguments: comma lists and start:stop:step ranges.
std::vector<double> parse_range_list(const std::string& text);

}  // namespace fig8
