// Command-line front end: determinant evaluation, grid sweeps, expansion
// breakdowns, endpoint solving, tail bounds, and the verification suites.
//
// Exit codes: 0 ok, 2 usage, 3 numeric failure, 4 I/O.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "airydet/asymptotics.hpp"
#include "airydet/errors.hpp"
#include "airydet/fredholm.hpp"
#include "airydet/kpz_tail.hpp"
#include "airydet/rh_scalars.hpp"
#include "airydet/sweep.hpp"
#include "airydet/verify.hpp"

namespace {

using namespace airydet;

struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& key, double v) { fields.emplace_back(key, format_double(v)); }
  void add(const std::string& key, int v) { fields.emplace_back(key, std::to_string(v)); }
  void add(const std::string& key, bool v) { fields.emplace_back(key, v ? "1" : "0"); }
};

void emit(const Record& rec, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << "{";
    for (size_t i = 0; i < rec.fields.size(); ++i) {
      const auto& [k, v] = rec.fields[i];
      const bool numeric = !v.empty() && v != "nan" && v != "inf" && v != "-inf";
      os << "\"" << k << "\": " << (numeric ? v : "\"" + v + "\"");
      if (i + 1 < rec.fields.size()) os << ", ";
    }
    os << "}\n";
  } else {
    for (size_t i = 0; i < rec.fields.size(); ++i) {
      os << rec.fields[i].first << (i + 1 < rec.fields.size() ? "," : "\n");
    }
    for (size_t i = 0; i < rec.fields.size(); ++i) {
      os << rec.fields[i].second << (i + 1 < rec.fields.size() ? "," : "\n");
    }
  }
}

// Writes either to stdout or to --out PATH.
struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot open output file: " + path);
    f << text;
    if (!f) throw io_error("failed writing output file: " + path);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed Airy-kernel Fredholm determinants and their tail expansions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value configuration file");
  app.allow_config_extras(true);

  std::string model_id = "kpz";
  std::string format = "csv";
  std::string out_path;
  int order = 0;
  int jobs = 1;
  app.add_option("--model", model_id, "model id (kpz, cutoff, zero) or model-file path")
      ->capture_default_str();
  app.add_option("--format", format, "csv | json")->capture_default_str();
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--order", order, "quadrature order (0 = auto)")->capture_default_str();
  app.add_option("--jobs", jobs, "parallel workers for sweeps")->capture_default_str();

  // det
  auto* det = app.add_subcommand("det", "evaluate log Q at one (x, t)");
  double det_x = 0.0, det_t = 1.0;
  bool det_asymp = false;
  det->add_option("--x", det_x, "spatial argument")->required();
  det->add_option("--t", det_t, "time argument (> 0)")->required();
  det->add_flag("--with-asymp", det_asymp, "also report the expansion value and gap");

  // tw
  auto* tw = app.add_subcommand("tw", "Airy-kernel determinant on (s, inf)");
  double tw_s = 0.0;
  tw->add_option("--s", tw_s, "left endpoint")->required();

  // scan
  auto* scan = app.add_subcommand("scan", "grid sweep with one record per point");
  std::string ax_x, ax_t, ax_s, ax_T;
  bool scan_no_u = false;
  scan->add_option("--x", ax_x, "x axis: list or linspace:lo:hi:n or logspace:lo:hi:n");
  scan->add_option("--t", ax_t, "t axis");
  scan->add_option("--s", ax_s, "s axis (alternative coordinates)");
  scan->add_option("--T", ax_T, "T axis (alternative coordinates)");
  scan->add_flag("--no-u", scan_no_u, "skip the finite-difference u columns");

  // asymp
  auto* asymp = app.add_subcommand("asymp", "closed-form expansion breakdown");
  double as_x = 0.0, as_t = 0.0;
  std::string as_what = "logq";
  asymp->add_option("--x", as_x)->required();
  asymp->add_option("--t", as_t)->required();
  asymp->add_option("--what", as_what, "logq | u | kpz")->capture_default_str();

  // endpoint
  auto* endpoint = app.add_subcommand("endpoint", "solve the band-edge endpoint equation");
  double ep_x = 0.0, ep_t = 0.0;
  endpoint->add_option("--x", ep_x)->required();
  endpoint->add_option("--t", ep_t)->required();

  // tail
  auto* tail = app.add_subcommand("tail", "lower-tail probability bounds");
  double tl_s = 0.0, tl_T = 0.0, tl_p = 1.0, tl_eps = 0.1, tl_dp = 0.0, tl_dm = 0.0;
  tail->add_option("--s", tl_s)->required();
  tail->add_option("--T", tl_T)->required();
  tail->add_option("--p", tl_p, "Markov parameter for the upper bound (>= 1)")
      ->capture_default_str();
  tail->add_option("--epsilon", tl_eps, "shift exponent for the lower bound")
      ->capture_default_str();
  tail->add_option("--dplus", tl_dp, "additive constant D+")->capture_default_str();
  tail->add_option("--dminus", tl_dm, "additive constant D-")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify->add_option("suite", suite, "identities | props | determinants | endpoints | tails | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  const Output output{out_path};
  try {
    if (*det) {
      const SigmaModel model = resolve_model(model_id);
      DetJob job;
      job.model = model;
      job.x = det_x;
      job.t = det_t;
      job.order = order;
      const DetResult r = log_q_sigma(job);
      Record rec;
      rec.fields.emplace_back("model", model.name);
      rec.add("x", det_x);
      rec.add("t", det_t);
      rec.add("log_det", r.log_det);
      rec.add("eig_min", r.eig_min);
      rec.add("eig_max", r.eig_max);
      rec.add("trunc_estimate", r.trunc_estimate);
      rec.add("order_used", r.order_used);
      rec.add("stable", r.stable);
      rec.add("precision_bits", r.precision_bits);
      if (det_asymp && model.admissible() && det_x > 0.0) {
        const double a = logq_asymptotic(det_x, det_t, model).total;
        rec.add("asymp_total", a);
        rec.add("gap", r.log_det - a);
      }
      std::ostringstream os;
      emit(rec, format, os);
      output.write(os.str());
    } else if (*tw) {
      const DetResult r = log_tracy_widom(tw_s);
      Record rec;
      rec.add("s", tw_s);
      rec.add("log_det", r.log_det);
      rec.add("eig_min", r.eig_min);
      rec.add("eig_max", r.eig_max);
      rec.add("order_used", r.order_used);
      rec.add("stable", r.stable);
      rec.add("precision_bits", r.precision_bits);
      if (tw_s < 0.0) {
        rec.add("tail_formula", tw_tail(-tw_s));
        rec.add("gap", r.log_det - tw_tail(-tw_s));
      }
      std::ostringstream os;
      emit(rec, format, os);
      output.write(os.str());
    } else if (*scan) {
      SweepSpec spec;
      if (!ax_x.empty()) spec.xs = parse_axis(ax_x);
      if (!ax_t.empty()) spec.ts = parse_axis(ax_t);
      if (!ax_s.empty()) spec.ss = parse_axis(ax_s);
      if (!ax_T.empty()) spec.Ts = parse_axis(ax_T);
      spec.model_id = model_id;
      spec.order = order;
      spec.jobs = jobs;
      spec.with_u = !scan_no_u;
      const auto records = run_sweep(spec);
      const bool st_axes = !spec.ss.empty();
      output.write(format == "json" ? sweep_to_json(records, st_axes, spec.with_u)
                                    : sweep_to_csv(records, st_axes, spec.with_u));
    } else if (*asymp) {
      const SigmaModel model = resolve_model(model_id);
      AsymptoticEval ev;
      if (as_what == "logq") {
        ev = logq_asymptotic(as_x, as_t, model);
      } else if (as_what == "u") {
        ev = u_asymptotic(as_x, as_t, model);
      } else if (as_what == "kpz") {
        ev = logq_kpz_asymptotic(as_x, as_t);
      } else {
        throw invalid_argument_error("asymp: --what must be logq, u, or kpz");
      }
      Record rec;
      rec.fields.emplace_back("model", model.name);
      rec.add("x", as_x);
      rec.add("t", as_t);
      rec.add("y", ev.y);
      for (const auto& [name, value] : ev.terms) rec.add("term_" + name, value);
      rec.add("total", ev.total);
      std::ostringstream os;
      emit(rec, format, os);
      output.write(os.str());
    } else if (*endpoint) {
      const SigmaModel model = resolve_model(model_id);
      const EndpointSolution sol = solve_endpoint_a(ep_x, ep_t, model);
      const double expansion = endpoint_a_expansion(ep_x, ep_t, model);
      Record rec;
      rec.fields.emplace_back("model", model.name);
      rec.add("x", ep_x);
      rec.add("t", ep_t);
      rec.add("a", sol.a);
      rec.add("residual", sol.residual);
      rec.add("bracket_lo", sol.bracket_lo);
      rec.add("bracket_hi", sol.bracket_hi);
      rec.add("iterations", sol.iterations);
      rec.add("in_regime", sol.in_regime);
      rec.add("expansion", expansion);
      rec.add("gap", sol.a - expansion);
      std::ostringstream os;
      emit(rec, format, os);
      output.write(os.str());
    } else if (*tail) {
      Record rec;
      rec.add("s", tl_s);
      rec.add("T", tl_T);
      rec.add("p", tl_p);
      rec.add("epsilon", tl_eps);
      rec.add("d_plus", tl_dp);
      rec.add("d_minus", tl_dm);
      rec.add("g", G_lower_tail(tl_s, tl_T));
      rec.add("upper_log_prob", upper_bound_log_prob(tl_s, tl_T, tl_p, tl_dp));
      rec.add("lower_log_prob", lower_bound_log_prob(tl_s, tl_T, tl_eps, tl_dm));
      std::ostringstream os;
      emit(rec, format, os);
      output.write(os.str());
    } else if (*verify) {
      const VerifyReport report = run_verify(suite);
      output.write(report_to_json(report));
      return report.all_pass ? 0 : 1;
    }
  } catch (const invalid_argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const model_not_admissible_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const near_singular_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const endpoint_bracket_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
