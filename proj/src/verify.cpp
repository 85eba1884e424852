#include "airydet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "airydet/asymptotics.hpp"
#include "airydet/errors.hpp"
#include "airydet/fredholm.hpp"
#include "airydet/kpz_tail.hpp"
#include "airydet/rh_scalars.hpp"
#include "airydet/sweep.hpp"

namespace airydet {
namespace {

struct Outcome {
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Check {
  std::string name;
  std::string suite;
  std::function<Outcome()> fn;
};

SigmaModel laplace3_model() {
  // F(z) = 1 + 3 e^z: c+ = c- = 1, c'+ = c'- = 3
  LaplaceMeasureSpec spec;
  spec.atoms = {{1.0, 1.0}, {1.0, 2.0}};
  return make_laplace_model(spec, "laplace3");
}

double window_ratio(const std::vector<double>& values) {
  double lo = values[0], hi = values[0];
  for (double v : values) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  return lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

Outcome check_consistency_identities() {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> ux(std::log(0.5), std::log(50.0));
  std::uniform_real_distribution<double> ut(std::log(0.01), std::log(2.0));
  const SigmaModel models[2] = {make_kpz_model(), laplace3_model()};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = std::exp(ux(rng));
    const double t = std::exp(ut(rng));
    const auto res = expansion_consistency_residuals(x, t, models[i % 2]);
    worst = std::max({worst, std::abs(res.res1) / res.scale1, std::abs(res.res2) / res.scale2,
                      std::abs(res.res3) / res.scale3});
  }
  return {worst < 1e-11, worst, 1e-11, "max scaled residual over 100 fuzzed (x,t)"};
}

Outcome check_f2_equals_f1_derivative() {
  const double h = 1e-5;
  double worst = 0.0;
  for (double y : {0.5, 2.0, 10.0}) {
    const double fd = (F1(y + h) - F1(y - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(F2(y) - fd));
  }
  return {worst < 1e-8, worst, 1e-8, "central-difference check of F2 = F1'"};
}

Outcome check_a0_alpha_relation() {
  double worst = 0.0;
  for (double cp : {1.0, 2.0}) {
    for (int i = 0; i <= 24; ++i) {
      const double xt = 1e-4 * std::pow(1e6, i / 24.0);
      const double lhs = shape_a0(M_PI * M_PI * xt / (cp * cp));
      const double rhs = xt * alpha_endpoint(xt, cp);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  return {worst < 1e-12, worst, 1e-12, "a0(pi^2 xt/c+^2) vs xt alpha(xt) on a log grid"};
}

Outcome check_alpha_defining_equation() {
  double worst = 0.0;
  for (double cp : {1.0, 2.0}) {
    for (int i = 0; i <= 24; ++i) {
      const double xt = 1e-4 * std::pow(1e6, i / 24.0);
      const double a = alpha_endpoint(xt, cp);
      worst = std::max(worst, std::abs(cp * std::sqrt(a) / M_PI - 0.5 * (1.0 - a * xt)));
    }
  }
  return {worst < 1e-12, worst, 1e-12, "residual of the endpoint equation"};
}

Outcome check_kpz_reduction_identity() {
  const SigmaModel kpz = make_kpz_model();
  double worst = 0.0;
  for (auto [x, t] : std::vector<std::pair<double, double>>{
           {5.0, 0.5}, {2.0, 1.0}, {10.0, 0.05}, {0.3, 2.0}}) {
    const double a = logq_asymptotic(x, t, kpz).total;
    const double b = logq_kpz_asymptotic(x, t).total;
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
  }
  return {worst < 1e-12, worst, 1e-12, "general expansion reduces to the KPZ form"};
}

Outcome check_g_map_identity() {
  double worst = 0.0;
  for (auto [s, T] : std::vector<std::pair<double, double>>{
           {1.0, 1.0}, {4.0, 1.0}, {2.0, 4.0}, {10.0, 2.0}}) {
    const XTPoint p = st_to_xt(s, T);
    const double g = G_lower_tail(s, T);
    const double q = logq_kpz_asymptotic(p.x, p.t).total;
    worst = std::max(worst, std::abs(g + q) / std::max(1.0, std::abs(g)));
  }
  return {worst < 1e-12, worst, 1e-12, "G(s,T) = -logq_kpz_asymptotic under the (s,T) map"};
}

Outcome check_j_kpz() {
  const double j = j_sigma_numeric(make_kpz_model());
  const double err = std::abs(j + M_PI / 12.0);
  return {err < 1e-10, err, 1e-10, "quadrature value of j for the KPZ weight vs -pi/12"};
}

Outcome check_c_kpz() {
  const double c = C_constant(make_kpz_model());
  const double err = std::abs(c + 1.0 / 6.0);
  return {err < 1e-14, err, 1e-14, "C constant for the KPZ weight vs -1/6"};
}

// ---------------------------------------------------------------------------
// determinants
// ---------------------------------------------------------------------------

Outcome check_tw_tail_match() {
  double gaps[3];
  int i = 0;
  for (double m : {6.0, 7.0, 8.0}) {
    gaps[i++] = std::abs(log_tracy_widom(-m).log_det - tw_tail(m));
  }
  const bool pass = gaps[2] < 2e-2 && gaps[0] > gaps[1] && gaps[1] > gaps[2];
  std::ostringstream d;
  d << "gaps at m=6,7,8: " << gaps[0] << ", " << gaps[1] << ", " << gaps[2];
  return {pass, gaps[2], 2e-2, d.str()};
}

Outcome check_representation_equivalence() {
  const SigmaModel kpz = make_kpz_model();
  double worst = 0.0;
  for (double x : {0.0, 1.0, 2.0}) {
    for (double t : {0.5, 1.0, 2.0}) {
      DetJob job;
      job.model = kpz;
      job.x = x;
      job.t = t;
      const double a = log_q_sigma(job).log_det;
      const double b = log_q_finite_temp(x, t).log_det;
      worst = std::max(worst, std::abs(a - b));
    }
  }
  return {worst < 1e-6, worst, 1e-6, "two kernel representations on the 3x3 grid"};
}

Outcome check_logq_asymptotic_gap() {
  const SigmaModel kpz = make_kpz_model();
  double worst = 0.0;
  for (double x : {4.0, 6.0, 8.0}) {
    DetJob job;
    job.model = kpz;
    job.x = x;
    job.t = 1.0;
    const double gap = std::abs(log_q_sigma(job).log_det - logq_asymptotic(x, 1.0, kpz).total);
    worst = std::max(worst, gap);
  }
  return {worst < 3.0, worst, 3.0, "|log Q - expansion| at x = 4, 6, 8, t = 1"};
}

Outcome check_u_asymptotic_gap() {
  const SigmaModel kpz = make_kpz_model();
  double worst = 0.0;
  for (auto [x, t] :
       std::vector<std::pair<double, double>>{{6.0, 1.0}, {8.0, 1.0}, {4.0, 2.0}}) {
    const double fd = u_sigma_fd(kpz, x, t).value;
    const double as = u_asymptotic(x, t, kpz).total;
    worst = std::max(worst, std::abs(fd - as) / std::abs(as));
  }
  return {worst < 0.05, worst, 0.05, "relative gap of u finite difference vs expansion"};
}

Outcome check_small_t_tail_crosscheck() {
  const SigmaModel kpz = make_kpz_model();
  double worst = 0.0;
  for (double x : {0.1, 0.2, 0.3}) {
    DetJob job;
    job.model = kpz;
    job.x = x;
    job.t = 1e-6;
    const double gap = std::abs(log_q_sigma(job).log_det - logq_small_t_tail(x, 1e-6));
    worst = std::max(worst, gap);
  }
  return {worst < 0.1, worst, 0.1, "deep small-t evaluations vs the cubic tail formula"};
}

Outcome check_spectrum_and_sign() {
  const SigmaModel kpz = make_kpz_model();
  double min_eig = 0.0, max_eig = 0.0, max_logdet = -1e300;
  for (double x : {-1.0, 0.0, 1.0, 2.0}) {
    for (double t : {0.5, 1.0}) {
      DetJob job;
      job.model = kpz;
      job.x = x;
      job.t = t;
      const DetResult r = log_q_sigma(job);
      min_eig = std::min(min_eig, r.eig_min);
      max_eig = std::max(max_eig, r.eig_max);
      max_logdet = std::max(max_logdet, r.log_det);
    }
  }
  const bool pass = min_eig >= -1e-10 && max_eig < 1.0 && max_logdet <= 1e-12;
  std::ostringstream d;
  d << "min eig " << min_eig << ", max eig " << max_eig << ", max log det " << max_logdet;
  return {pass, min_eig, -1e-10, d.str()};
}

Outcome check_monotone_in_x() {
  const SigmaModel kpz = make_kpz_model();
  double prev = 1e300;
  double worst = -1e300;  // most positive increase
  for (int i = 0; i < 10; ++i) {
    const double x = -3.0 + 6.0 * i / 9.0;
    DetJob job;
    job.model = kpz;
    job.x = x;
    job.t = 1.0;
    job.trunc_lo = -45.0;
    job.trunc_hi = 11.0;
    job.order = 420;
    job.check_stability = false;
    const double v = log_q_sigma(job).log_det;
    if (i > 0) worst = std::max(worst, v - prev);
    prev = v;
  }
  return {worst <= 1e-10, worst, 1e-10, "log Q nonincreasing in x on a fixed grid"};
}

Outcome check_order_stability() {
  DetJob job;
  job.model = make_kpz_model();
  job.x = 2.0;
  job.t = 1.0;
  const DetResult r = log_q_sigma(job);
  const bool pass = r.stable && r.stability_delta < 1e-8;
  return {pass, r.stability_delta, 1e-8, "order-doubling agreement at (2, 1)"};
}

Outcome check_sweep_determinism() {
  SweepSpec spec;
  spec.xs = {0.0, 1.0, 2.0};
  spec.ts = {0.5, 1.0, 2.0};
  spec.with_u = false;
  spec.jobs = 1;
  const std::string serial = sweep_to_csv(run_sweep(spec), false, false);
  spec.jobs = 4;
  const std::string parallel = sweep_to_csv(run_sweep(spec), false, false);
  const bool pass = serial == parallel;
  return {pass, pass ? 0.0 : 1.0, 0.0, "serial and parallel sweep bytes"};
}

Outcome check_kdv_residual_kpz() {
  const SigmaModel kpz = make_kpz_model();
  const KdvResult full = kdv_residual(kpz, 4.0, 1.0, 0.1, 0.05);
  const double tol = 0.05 * std::max(1.0, std::abs(full.u));
  const KdvResult half = kdv_residual(kpz, 4.0, 1.0, 0.05, 0.025);
  const bool shrink = std::abs(half.residual) <= std::max(1.2 * std::abs(full.residual),
                                                          3.0 * half.noise_floor);
  std::ostringstream d;
  d << "residual " << full.residual << " (u = " << full.u << "), halved " << half.residual
    << ", noise floor " << half.noise_floor;
  return {std::abs(full.residual) < tol && shrink, std::abs(full.residual), tol, d.str()};
}

Outcome check_kdv_zero_model() {
  const KdvResult r = kdv_residual(make_zero_model(), 4.0, 1.0, 1e-3, 2e-5);
  return {std::abs(r.residual) < 1e-8, std::abs(r.residual), 1e-8,
          "trivial solution x/(2t) satisfies the equation"};
}

// ---------------------------------------------------------------------------
// endpoints
// ---------------------------------------------------------------------------

Outcome check_endpoint_expansion_rate() {
  const SigmaModel kpz = make_kpz_model();
  std::vector<double> scaled;
  for (double x : {10.0, 20.0, 40.0}) {
    const double t = 5.0 / x;
    const double a = solve_endpoint_a(x, t, kpz).a;
    const double e = endpoint_a_expansion(x, t, kpz);
    scaled.push_back(std::abs(a - e) * std::pow(x, 6));
  }
  const double ratio = window_ratio(scaled);
  std::ostringstream d;
  d << "x^6-scaled residuals: " << scaled[0] << ", " << scaled[1] << ", " << scaled[2];
  return {ratio <= 4.0, ratio, 4.0, d.str()};
}

Outcome residual_rate_d1(const SigmaModel& model) {
  std::vector<double> scaled;
  for (double x : {10.0, 20.0, 40.0}) {
    const double t = 0.5 / x;
    const double alpha = alpha_endpoint(x * t, model.c_plus);
    const double res = d1(x, t, model) +
                       std::sqrt(alpha) * std::log(model.c_plus_prime) / M_PI -
                       j_sigma(model) / (x * x * std::sqrt(alpha));
    scaled.push_back(res * std::pow(x, 4));
  }
  const double ratio = window_ratio(scaled);
  std::ostringstream d;
  d << model.name << " x^4-scaled: " << scaled[0] << ", " << scaled[1] << ", " << scaled[2];
  return {ratio <= 4.0, ratio, 4.0, d.str()};
}

Outcome residual_rate_chi(const SigmaModel& model) {
  std::vector<double> scaled;
  for (double x : {10.0, 20.0, 40.0}) {
    const double t = 0.5 / x;
    const double alpha = alpha_endpoint(x * t, model.c_plus);
    const double res = chi(x, t, model) +
                       std::log(model.c_plus_prime) / (M_PI * std::sqrt(alpha));
    scaled.push_back(res * x * x);
  }
  const double ratio = window_ratio(scaled);
  std::ostringstream d;
  d << model.name << " x^2-scaled: " << scaled[0] << ", " << scaled[1] << ", " << scaled[2];
  return {ratio <= 4.0, ratio, 4.0, d.str()};
}

// seven-term expansion of x^2 (1/4 + g1) / t
double g1_expansion_terms(double x, double t, const SigmaModel& m) {
  const double y = M_PI * M_PI * x * t / (m.c_plus * m.c_plus);
  const double j = j_sigma(m);
  const double lc = std::log(m.c_plus_prime);
  const double a0 = shape_a0(y);
  const double a1 = shape_a1(y, m.c_plus_prime);
  const double a2 = shape_a2(y, m.c_plus, m.c_plus_prime, j);
  const double cp = m.c_plus;
  return (a0 - 1.0) * (a0 - 1.0) * x * x / (4.0 * t) +
         2.0 * cp / (3.0 * M_PI) * std::pow(a0, 1.5) * std::pow(x / t, 1.5) +
         ((a0 - 1.0) * a1 / 2.0 + lc / M_PI * std::sqrt(a0)) * std::sqrt(x / t) +
         cp / M_PI * a1 * std::sqrt(a0) / t +
         ((a0 - 1.0) * a2 / 2.0 - j / std::sqrt(a0)) * std::sqrt(t / x) +
         (a1 * a1 / 4.0 + cp / M_PI * a2 * std::sqrt(a0) +
          lc / (2.0 * M_PI * std::sqrt(a0)) * a1) /
             x +
         cp / (4.0 * M_PI) * a1 * a1 / std::sqrt(a0) / (std::sqrt(t) * std::pow(x, 1.5));
}

Outcome residual_rate_g1_lemma(const SigmaModel& model) {
  std::vector<double> scaled;
  for (double x : {10.0, 20.0, 40.0}) {
    const double t = 5.0 / x;
    const double lhs = x * x / t * (0.25 + g1_large(x, t, model));
    const double res = lhs - g1_expansion_terms(x, t, model);
    scaled.push_back(res * std::pow(x / t, 1.5));
  }
  const double ratio = window_ratio(scaled);
  std::ostringstream d;
  d << model.name << " scaled: " << scaled[0] << ", " << scaled[1] << ", " << scaled[2];
  return {ratio <= 4.0, ratio, 4.0, d.str()};
}

Outcome residual_rate_f_lemma(const SigmaModel& model) {
  std::vector<double> scaled;
  for (double x : {10.0, 20.0, 40.0}) {
    const double t = 5.0 / x;
    const double y = M_PI * M_PI * x * t / (model.c_plus * model.c_plus);
    const FCoeffs f = f_coeffs_large(x, t, model);
    const double lhs = -5.0 * f.f2 / (32.0 * std::pow(f.f1, 2.5));
    const double limit = (1.0 + std::sqrt(1.0 + y)) / (48.0 * (1.0 + y));
    scaled.push_back((lhs - limit) * std::pow(x, 1.5) / std::sqrt(t));
  }
  const double ratio = window_ratio(scaled);
  std::ostringstream d;
  d << model.name << " scaled: " << scaled[0] << ", " << scaled[1] << ", " << scaled[2];
  return {ratio <= 4.0, ratio, 4.0, d.str()};
}

// ---------------------------------------------------------------------------
// tails
// ---------------------------------------------------------------------------

Outcome check_g_vs_determinant_gap() {
  double worst = 0.0;
  for (double s : {1.0, 2.0, 3.0, 4.0}) {
    for (double T : {1.0, 4.0}) {
      worst = std::max(worst, std::abs(compare_G_vs_determinant(s, T)));
    }
  }
  return {worst < 3.0, worst, 3.0, "|log Q + G| on s in 1..4, T in {1,4}"};
}

Outcome check_tail_bounds_order() {
  double worst = -1e300;
  for (double s : {1.0, 2.0, 3.0, 4.0, 10.0}) {
    for (double T : {1.0, 4.0, 10.0}) {
      worst = std::max(worst, lower_bound_log_prob(s, T, 0.1, 0.0) -
                                  upper_bound_log_prob(s, T, 1.0, 0.0));
    }
  }
  return {worst <= 0.0, worst, 0.0, "lower bound <= upper bound with D = 0"};
}

// ---------------------------------------------------------------------------
// props
// ---------------------------------------------------------------------------

Outcome check_g_monotone_in_s() {
  double worst = -1e300;
  for (double T : {1.0, 5.0}) {
    double prev = -1e300;
    for (int i = 1; i <= 40; ++i) {
      const double g = G_lower_tail(0.5 * i, T);
      worst = std::max(worst, prev - g);
      prev = g;
    }
  }
  return {worst < 0.0, worst, 0.0, "G strictly increasing in s"};
}

Outcome check_upper_argmin_growth() {
  std::vector<double> argmins;
  for (double s : {10.0, 100.0, 1000.0}) {
    double best_p = 1.0, best = 1e300;
    for (int i = 0; i <= 200; ++i) {
      const double p = std::pow(s * s * s, i / 200.0);
      const double v = upper_bound_log_prob(s, 1.0, p, 0.0);
      if (v < best) {
        best = v;
        best_p = p;
      }
    }
    argmins.push_back(best_p);
  }
  const bool pass = argmins[0] <= argmins[1] && argmins[1] <= argmins[2];
  std::ostringstream d;
  d << "argmin p: " << argmins[0] << ", " << argmins[1] << ", " << argmins[2];
  return {pass, argmins[2], 0.0, d.str()};
}

Outcome check_st_roundtrip() {
  double worst = 0.0;
  for (auto [s, T] : std::vector<std::pair<double, double>>{
           {1.0, 1.0}, {3.5, 0.25}, {20.0, 400.0}, {0.03, 7.0}}) {
    const XTPoint p = st_to_xt(s, T);
    const STPoint back = xt_to_st(p.x, p.t);
    worst = std::max({worst, std::abs(back.s - s) / s, std::abs(back.T - T) / T});
  }
  return {worst < 1e-14, worst, 1e-14, "coordinate map round trip"};
}

Outcome check_alpha_shape() {
  double prev = 1e300;
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double xt = 1e-4 * std::pow(1e6, i / 40.0);
    const double a = alpha_endpoint(xt, 1.0);
    ok = ok && a > 0.0 && a <= M_PI * M_PI / 4.0 + 1e-12 && a < prev;
    worst = std::max(worst, a - M_PI * M_PI / 4.0);
    prev = a;
  }
  return {ok, worst, 1e-12, "alpha decreasing and within (0, pi^2/(4 c+^2)]"};
}

Outcome check_tw_limit_consistency() {
  // Steepened weight F = 1 + e^{4z}; x = 0.5 t^{1/3} keeps the edge at -0.5.
  LaplaceMeasureSpec spec;
  spec.atoms = {{4.0, 1.0}};
  const SigmaModel steep = make_laplace_model(spec, "steep4");
  const double tw = log_tracy_widom(-0.5).log_det;
  std::vector<double> gaps;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    DetJob job;
    job.model = steep;
    job.x = 0.5 * std::cbrt(t);
    job.t = t;
    gaps.push_back(std::abs(log_q_sigma(job).log_det - tw));
  }
  const double c_fit = *std::max_element(gaps.begin(), gaps.end()) / std::cbrt(1e-2);
  const bool pass = gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] < 0.1;
  std::ostringstream d;
  d << "gaps: " << gaps[0] << ", " << gaps[1] << ", " << gaps[2] << "; fitted C = " << c_fit;
  return {pass, gaps[2], 0.1, d.str()};
}

std::vector<Check> all_checks() {
  std::vector<Check> checks;
  auto add = [&](const std::string& name, const std::string& suite,
                 std::function<Outcome()> fn) { checks.push_back({name, suite, std::move(fn)}); };

  add("consistency_identities", "identities", check_consistency_identities);
  add("f2_equals_f1_derivative", "identities", check_f2_equals_f1_derivative);
  add("a0_alpha_relation", "identities", check_a0_alpha_relation);
  add("alpha_defining_equation", "identities", check_alpha_defining_equation);
  add("kpz_reduction_identity", "identities", check_kpz_reduction_identity);
  add("g_map_identity", "identities", check_g_map_identity);
  add("j_kpz", "identities", check_j_kpz);
  add("c_kpz", "identities", check_c_kpz);

  add("tw_tail_match", "determinants", check_tw_tail_match);
  add("representation_equivalence", "determinants", check_representation_equivalence);
  add("logq_asymptotic_gap", "determinants", check_logq_asymptotic_gap);
  add("u_asymptotic_gap", "determinants", check_u_asymptotic_gap);
  add("small_t_tail_crosscheck", "determinants", check_small_t_tail_crosscheck);
  add("spectrum_and_sign", "determinants", check_spectrum_and_sign);
  add("monotone_in_x", "determinants", check_monotone_in_x);
  add("order_stability", "determinants", check_order_stability);
  add("sweep_determinism", "determinants", check_sweep_determinism);
  add("kdv_residual_kpz", "determinants", check_kdv_residual_kpz);
  add("kdv_zero_model", "determinants", check_kdv_zero_model);

  add("endpoint_expansion_rate", "endpoints", check_endpoint_expansion_rate);
  add("d1_residual_rate_kpz", "endpoints", [] { return residual_rate_d1(make_kpz_model()); });
  add("d1_residual_rate_laplace", "endpoints", [] { return residual_rate_d1(laplace3_model()); });
  add("chi_residual_rate_kpz", "endpoints", [] { return residual_rate_chi(make_kpz_model()); });
  add("chi_residual_rate_laplace", "endpoints",
      [] { return residual_rate_chi(laplace3_model()); });
  add("g1_lemma_rate_kpz", "endpoints", [] { return residual_rate_g1_lemma(make_kpz_model()); });
  add("g1_lemma_rate_laplace", "endpoints",
      [] { return residual_rate_g1_lemma(laplace3_model()); });
  add("f_lemma_rate_kpz", "endpoints", [] { return residual_rate_f_lemma(make_kpz_model()); });
  add("f_lemma_rate_laplace", "endpoints",
      [] { return residual_rate_f_lemma(laplace3_model()); });

  add("g_vs_determinant_gap", "tails", check_g_vs_determinant_gap);
  add("tail_bounds_order", "tails", check_tail_bounds_order);

  add("g_monotone_in_s", "props", check_g_monotone_in_s);
  add("upper_argmin_growth", "props", check_upper_argmin_growth);
  add("st_roundtrip", "props", check_st_roundtrip);
  add("alpha_shape", "props", check_alpha_shape);
  add("tw_limit_consistency", "props", check_tw_limit_consistency);

  return checks;
}

}  // namespace

VerifyReport run_verify(const std::string& suite) {
  static const std::vector<std::string> known = {"identities", "props", "determinants",
                                                 "endpoints", "tails", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw invalid_argument_error("unknown verify suite '" + suite +
                                 "'; valid: identities, props, determinants, endpoints, "
                                 "tails, all");
  }
  VerifyReport report;
  report.all_pass = true;
  for (const Check& c : all_checks()) {
    if (suite != "all" && suite != c.suite) continue;
    CheckResult r;
    r.name = c.name;
    r.suite = c.suite;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.fn();
      r.pass = o.pass;
      r.measured = o.measured;
      r.tolerance = o.tolerance;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.all_pass = report.all_pass && r.pass;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  std::ostringstream out;
  out << "{\n  \"overall_pass\": " << (report.all_pass ? "true" : "false")
      << ",\n  \"checks\": [\n";
  for (size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    out << "    {\"name\": \"" << c.name << "\", \"suite\": \"" << c.suite
        << "\", \"pass\": " << (c.pass ? "true" : "false")
        << ", \"measured\": " << format_double(c.measured)
        << ", \"tolerance\": " << format_double(c.tolerance)
        << ", \"runtime_s\": " << format_double(c.runtime_s) << ", \"detail\": \"" << c.detail
        << "\"}" << (i + 1 < report.checks.size() ? "," : "") << "\n";
  }
  out << "  ]\n}\n";
  return out.str();
}

}  // namespace airydet
