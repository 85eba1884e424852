#ifndef AIRYDET_SWEEP_HPP
#define AIRYDET_SWEEP_HPP

#include <string>
#include <vector>

#include "airydet/sigma_model.hpp"

namespace airydet {

// Grid sweep over (x, t) or (s, T) axes. Rows are emitted in row-major axis
// order regardless of the parallelism degree, so output bytes are identical
// for any jobs count.
struct SweepSpec {
  std::vector<double> xs, ts;  // (x, t) axes
  std::vector<double> ss, Ts;  // alternative (s, T) axes
  std::string model_id = "kpz";
  int order = 0;
  std::string format = "csv";  // csv | json
  int jobs = 1;
  bool with_u = true;          // emit u_fd / u_asymptotic columns
};

// One record per grid point. NaN marks fields that do not apply.
struct SweepRecord {
  double x = 0, t = 0, s = 0, T = 0;
  double log_det = 0;
  double eig_min = 0, eig_max = 0;
  int order_used = 0;
  bool stable = false;
  double asymp_total = 0;
  double gap = 0;
  double u_fd = 0;
  double u_asymp = 0;
};

std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

// Serialization with 17 significant digits, '\n' line endings, no locale.
std::string sweep_to_csv(const std::vector<SweepRecord>& records, bool st_axes, bool with_u);
std::string sweep_to_json(const std::vector<SweepRecord>& records, bool st_axes, bool with_u);

// Axis syntax: "0.5,1,2" | "linspace:lo:hi:n" | "logspace:lo:hi:n".
std::vector<double> parse_axis(const std::string& text);

// Builtin id ("kpz", "cutoff", "zero") or a model-file path.
SigmaModel resolve_model(const std::string& id);

// 17-significant-digit formatting used for all numeric output.
std::string format_double(double v);

}  // namespace airydet

#endif
